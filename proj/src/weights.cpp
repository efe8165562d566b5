#include "giso/weights.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace giso {

std::string to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

KMatrix::KMatrix(std::size_t n, std::vector<Rational> entries, std::vector<std::size_t> degrees)
    : n_(n), entries_(std::move(entries)), degrees_(std::move(degrees)) {
    if (entries_.size() != n_ * n_ || degrees_.size() != n_) {
        throw std::invalid_argument("KMatrix: dimension mismatch");
    }
}

FractionFreeSolution fraction_free_solve(std::size_t n, std::vector<BigInt> matrix, std::size_t rhs_cols,
                                         std::vector<BigInt> rhs, int threads) {
    if (matrix.size() != n * n || rhs.size() != n * rhs_cols) {
        throw std::invalid_argument("fraction_free_solve: dimension mismatch");
    }
    const std::size_t width = n + rhs_cols;
    std::vector<BigInt> m(n * width);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i * width + j] = std::move(matrix[i * n + j]);
        for (std::size_t c = 0; c < rhs_cols; ++c) m[i * width + n + c] = std::move(rhs[i * rhs_cols + c]);
    }
#ifdef _OPENMP
    const int nthreads = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif

    BigInt prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const BigInt pivot = m[k * width + k];
        if (pivot == 0) throw std::logic_error("fraction_free_solve: zero leading minor");
        const auto nn = static_cast<std::ptrdiff_t>(n);
        // Every row other than the pivot row is updated independently; the division
        // by the previous pivot is exact (Sylvester's identity).
#pragma omp parallel for schedule(dynamic, 4) num_threads(nthreads) if (n >= 32)
        for (std::ptrdiff_t ii = 0; ii < nn; ++ii) {
            const auto i = static_cast<std::size_t>(ii);
            if (i == k) continue;
            BigInt* row = &m[i * width];
            const BigInt* prow = &m[k * width];
            const BigInt factor = row[k];
            BigInt tmp;
            for (std::size_t j = k + 1; j < width; ++j) {
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), row[j].get_mpz_t());
                if (factor != 0) mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), prow[j].get_mpz_t());
                mpz_divexact(row[j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            row[k] = 0;
            if (i < k) row[i] = pivot;
        }
        prev = pivot;
    }

    FractionFreeSolution out;
    out.determinant = prev;
    out.rows = n;
    out.rhs_cols = rhs_cols;
    out.scaled.resize(n * rhs_cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t c = 0; c < rhs_cols; ++c) out.scaled[i * rhs_cols + c] = std::move(m[i * width + n + c]);
    return out;
}

namespace {

// (E + D) - M as a dense integer matrix.
std::vector<BigInt> scaled_system_matrix(const Graph& g) {
    const auto n = g.order();
    std::vector<BigInt> b(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) b[i * n + i] = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
    for (auto [u, v] : g.edges()) {
        b[u * n + v] = -1;
        b[v * n + u] = -1;
    }
    return b;
}

std::vector<std::size_t> degree_vector(const Graph& g) {
    return {g.degrees().begin(), g.degrees().end()};
}

}  // namespace

std::vector<Rational> solve_system(const Graph& g, std::span<const Rational> b) {
    const auto n = g.order();
    if (b.size() != n) throw std::invalid_argument("solve_system: right-hand side length does not match graph order");
    BigInt common = 1;
    for (const auto& x : b) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<BigInt> rhs(n);
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = b[i].get_num() * (common / b[i].get_den()) * static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
    }
    auto sol = fraction_free_solve(n, scaled_system_matrix(g), 1, std::move(rhs), 1);
    std::vector<Rational> x(n);
    const BigInt denom = sol.determinant * common;
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = Rational(sol.at(i, 0), denom);
        x[i].canonicalize();
    }
    return x;
}

KMatrix k_matrix(const Graph& g) {
    const auto n = g.order();
    if (n == 0) throw std::invalid_argument("k_matrix: empty graph");
    std::vector<BigInt> rhs(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) rhs[i * n + i] = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
    auto sol = fraction_free_solve(n, scaled_system_matrix(g), n, std::move(rhs));
    std::vector<Rational> entries(n * n);
    const auto nn = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(static) if (n >= 32)
    for (std::ptrdiff_t idx = 0; idx < nn; ++idx) {
        auto& e = entries[static_cast<std::size_t>(idx)];
        e = Rational(sol.scaled[static_cast<std::size_t>(idx)], sol.determinant);
        e.canonicalize();
    }
    return KMatrix(n, std::move(entries), degree_vector(g));
}

KMatrix k_matrix_reference(const Graph& g) {
    const auto n = g.order();
    if (n == 0) throw std::invalid_argument("k_matrix_reference: empty graph");
    // [A | E] with A = E - N*M, N = diag(1/(d_i+1)).
    const std::size_t width = 2 * n;
    std::vector<Rational> m(n * width, 0);
    for (std::size_t i = 0; i < n; ++i) {
        m[i * width + i] = 1;
        m[i * width + n + i] = 1;
        const Rational w(1, static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1));
        for (auto j : g.neighbors(static_cast<Vertex>(i))) m[i * width + j] = -w;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv * width + k] == 0) ++piv;
        if (piv == n) throw std::logic_error("k_matrix_reference: singular system");
        if (piv != k)
            for (std::size_t j = 0; j < width; ++j) std::swap(m[k * width + j], m[piv * width + j]);
        const Rational inv = 1 / m[k * width + k];
        for (std::size_t j = k; j < width; ++j) m[k * width + j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i * width + k] == 0) continue;
            const Rational f = m[i * width + k];
            for (std::size_t j = k; j < width; ++j) m[i * width + j] -= f * m[k * width + j];
        }
    }
    std::vector<Rational> entries(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) entries[i * n + j] = m[i * width + n + j];
    return KMatrix(n, std::move(entries), degree_vector(g));
}

bool check_bounds(const KMatrix& k) {
    const auto n = k.order();
    if (n == 1) return k(0, 0) == 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const auto& v = k(i, j);
            const bool ok = i == j ? (v > 1 && v < 2) : (v > 0 && v < 1);
            if (!ok) return false;
        }
    }
    return true;
}

std::vector<Rational> topo_index(const Graph& g) {
    std::vector<Rational> ones(g.order(), Rational(1));
    auto x = solve_system(g, ones);
    std::sort(x.begin(), x.end());
    return x;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> random_primes62(std::size_t count, u64 seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> dist(u64{1} << 61, (u64{1} << 62) - 1);
    std::vector<u64> primes;
    while (primes.size() < count) {
        u64 c = dist(rng) | 1;
        if (is_prime_u64(c) && std::find(primes.begin(), primes.end(), c) == primes.end()) primes.push_back(c);
    }
    return primes;
}

bool k_matrix_mod(const Graph& g, u64 p, std::vector<u64>& out) {
    const auto n = g.order();
    const std::size_t width = 2 * n;
    std::vector<u64> m(n * width, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const u64 di = g.degree(static_cast<Vertex>(i)) + 1;
        m[i * width + i] = di % p;
        m[i * width + n + i] = di % p;
        for (auto j : g.neighbors(static_cast<Vertex>(i))) m[i * width + j] = p - 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv * width + k] == 0) ++piv;
        if (piv == n) return false;
        if (piv != k)
            for (std::size_t j = 0; j < width; ++j) std::swap(m[k * width + j], m[piv * width + j]);
        const u64 inv = powmod(m[k * width + k], p - 2, p);
        for (std::size_t j = k; j < width; ++j) m[k * width + j] = mulmod(m[k * width + j], inv, p);
        for (std::size_t i = 0; i < n; ++i) {
            const u64 f = m[i * width + k];
            if (i == k || f == 0) continue;
            for (std::size_t j = k; j < width; ++j) {
                const u64 sub = mulmod(f, m[k * width + j], p);
                u64& x = m[i * width + j];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
    }
    out.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = m[i * width + n + j];
    return true;
}

}  // namespace giso
