#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace giso {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed textual input and infeasible generator parameters.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; neighbor lists are sorted.
/// Values are immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on loops, duplicates or out-of-range endpoints.
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    std::span<const std::size_t> degrees() const { return degrees_; }

    bool adjacent(Vertex u, Vertex v) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::size_t> degrees_;
};

/// Bijection on {0..n-1}; entry i is the image of vertex i.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> map);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return map_.size(); }
    Vertex operator()(Vertex v) const { return map_[v]; }
    std::span<const Vertex> map() const { return map_; }

    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<Vertex> map_;
};

/// "n m" header followed by m lines "u v". CRLF tolerated, blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6, short form (n <= 62) and the 4-byte long form (n <= 258047).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

bool is_connected(const Graph& g);

/// Relabels vertex v as p(v): (u,v) is an edge of g iff (p(u),p(v)) is an edge of the result.
Graph permute(const Graph& g, const Permutation& p);

/// Sorted degree sequence.
std::vector<std::size_t> degree_multiset(const Graph& g);

}  // namespace giso
