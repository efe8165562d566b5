#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "giso/graph.hpp"

namespace giso {

/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

/// "num/den", denominator always written, e.g. "2/1".
std::string to_string(const Rational& r);

/// Coefficient matrix of the vertex-weight system: entry (i,j) is the weight of vertex i
/// when the absolute term is the j-th unit vector.
class KMatrix {
public:
    KMatrix() = default;
    KMatrix(std::size_t n, std::vector<Rational> entries, std::vector<std::size_t> degrees);

    std::size_t order() const { return n_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    std::span<const Rational> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }
    std::span<const Rational> entries() const { return entries_; }
    std::span<const std::size_t> degrees() const { return degrees_; }

    friend bool operator==(const KMatrix&, const KMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Rational> entries_;
    std::vector<std::size_t> degrees_;
};

/// Unique X with x_i = (sum of x_j over neighbours j of i) / (d_i + 1) + b_i.
/// Throws std::invalid_argument when b has the wrong length.
std::vector<Rational> solve_system(const Graph& g, std::span<const Rational> b);

/// Exact k-matrix via fraction-free elimination of the integer form ((E+D) - M),
/// row updates parallelized with OpenMP.
KMatrix k_matrix(const Graph& g);

/// Serial reference: plain rational Gauss-Jordan on E - N*M. Kept for cross-checking
/// the parallel kernel and for benchmarking against it.
KMatrix k_matrix_reference(const Graph& g);

/// Strict bounds 1 < k_ii < 2 and 0 < k_ij < 1; a 1x1 matrix passes iff its entry is exactly 1.
bool check_bounds(const KMatrix& k);

/// Solution for the all-ones absolute term, sorted ascending.
std::vector<Rational> topo_index(const Graph& g);

/// Result of fraction-free Gauss-Jordan on a square integer matrix with extra columns:
/// the determinant and det * (B^-1 * rhs) as integers.
struct FractionFreeSolution {
    BigInt determinant;
    std::size_t rows = 0;
    std::size_t rhs_cols = 0;
    std::vector<BigInt> scaled;  // rows x rhs_cols, row-major

    const BigInt& at(std::size_t i, std::size_t c) const { return scaled[i * rhs_cols + c]; }
};

/// Requires every leading principal minor of `matrix` to be nonzero (true for the
/// strictly diagonally dominant matrices used here); throws std::logic_error otherwise.
/// `threads` <= 0 means the OpenMP default.
FractionFreeSolution fraction_free_solve(std::size_t n, std::vector<BigInt> matrix, std::size_t rhs_cols,
                                         std::vector<BigInt> rhs, int threads = 0);

/// Residues of the k-matrix modulo a prime. Returns false if (E+D) - M is singular mod p.
bool k_matrix_mod(const Graph& g, std::uint64_t prime, std::vector<std::uint64_t>& out);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// `count` distinct random primes in [2^61, 2^62), drawn from `seed`.
std::vector<std::uint64_t> random_primes62(std::size_t count, std::uint64_t seed);

}  // namespace giso
