#pragma once

// Test-only oracles, independent of the library's elimination code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "giso/graph.hpp"
#include "giso/weights.hpp"

namespace giso::test {

/// Leibniz determinant, O(n! n). Only for n <= 7.
inline Rational leibniz_det(const std::vector<std::vector<Rational>>& a) {
    const auto n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

/// The literal weight-system matrix E - N*M.
inline std::vector<std::vector<Rational>> weight_matrix(const Graph& g) {
    const auto n = g.order();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        a[i][i] = 1;
        for (auto j : g.neighbors(static_cast<Vertex>(i))) {
            a[i][j] = Rational(-1, static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1));
        }
    }
    return a;
}

/// Cramer's rule on E - N*M.
inline std::vector<Rational> cramer_solve(const Graph& g, const std::vector<Rational>& b) {
    auto a = weight_matrix(g);
    const auto det = leibniz_det(a);
    std::vector<Rational> x(g.order());
    for (std::size_t c = 0; c < g.order(); ++c) {
        auto ac = a;
        for (std::size_t r = 0; r < g.order(); ++r) ac[r][c] = b[r];
        x[c] = leibniz_det(ac) / det;
    }
    return x;
}

/// Exact residual: does X satisfy x_i = sum_{j~i} x_j / (d_i + 1) + b_i for every i?
inline bool satisfies_system(const Graph& g, const std::vector<Rational>& x, const std::vector<Rational>& b) {
    for (std::size_t i = 0; i < g.order(); ++i) {
        Rational s = 0;
        for (auto j : g.neighbors(static_cast<Vertex>(i))) s += x[j];
        s /= static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
        if (x[i] != s + b[i]) return false;
    }
    return true;
}

inline Rational q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace giso::test
