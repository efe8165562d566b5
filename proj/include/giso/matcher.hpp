#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "giso/graph.hpp"
#include "giso/weights.hpp"

namespace giso {

/// A pair of n x n matrices whose entries are replaced by shared class ids: two entries
/// (from either side) get the same id iff their k-values are equal. Degrees ride along
/// since every bigraph edge test also compares degrees.
struct LabeledPair {
    std::size_t n = 0;
    std::vector<std::uint32_t> left;   // n x n, row-major
    std::vector<std::uint32_t> right;  // n x n, row-major
    std::vector<std::size_t> left_degree;
    std::vector<std::size_t> right_degree;
    std::size_t classes = 0;

    std::uint32_t left_id(std::size_t i, std::size_t p) const { return left[i * n + p]; }
    std::uint32_t right_id(std::size_t j, std::size_t q) const { return right[j * n + q]; }
};

/// Exact labeling: ids are assigned by hashing canonical rationals, equality is exact.
LabeledPair label_exact(const KMatrix& k, const KMatrix& k2);

/// Multi-modular fingerprint labeling: entries share an id iff their residues agree modulo
/// every prime in `primes`. Unequal ids imply unequal k-values; equal ids are probable equality.
/// Throws std::runtime_error if some prime divides det((E+D) - M).
LabeledPair label_fingerprint(const Graph& g, const Graph& g2, std::span<const std::uint64_t> primes);

/// Bipartite graph between two n-vertex sides, one n-bit row per left vertex.
class Bigraph {
public:
    Bigraph() = default;
    explicit Bigraph(std::size_t n);

    std::size_t order() const { return n_; }
    bool has(std::size_t p, std::size_t q) const { return (bits_[p * words_ + q / 64] >> (q % 64)) & 1u; }
    void insert(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] |= std::uint64_t{1} << (q % 64); }
    void erase(std::size_t p, std::size_t q) { bits_[p * words_ + q / 64] &= ~(std::uint64_t{1} << (q % 64)); }

    std::size_t edge_count() const;
    std::size_t left_degree(std::size_t p) const;
    std::size_t right_degree(std::size_t q) const;
    /// Right neighbours of p, ascending.
    std::vector<std::uint32_t> row(std::size_t p) const;
    /// All edges in ascending (p, q) order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
    bool empty() const;

    /// Rowwise AND in place.
    Bigraph& operator&=(const Bigraph& other);

    friend bool operator==(const Bigraph&, const Bigraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Edge (p,q) iff deg(p) = deg'(q) and k_ip = k'_jq.
Bigraph build_bigraph(const LabeledPair& labels, std::size_t i, std::size_t j);
Bigraph build_bigraph(const KMatrix& k, const KMatrix& k2, std::size_t i, std::size_t j);

Bigraph intersect(const Bigraph& a, const Bigraph& b);

/// Left-to-right assignment; entry p is the right vertex matched to p.
using Mapping = std::vector<std::uint32_t>;

/// Perfect matching via Hopcroft-Karp, scanning vertices and adjacency in ascending order.
std::optional<Mapping> transversal(const Bigraph& h);

}  // namespace giso
