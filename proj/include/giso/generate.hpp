#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "giso/graph.hpp"

namespace giso {

/// All randomized generation goes through an explicitly seeded engine.
using Rng = std::mt19937_64;

/// G(n, p) sample; components are then joined by random bridging edges until connected.
Graph random_connected(std::size_t n, double edge_prob, std::uint64_t seed);
Graph random_connected(std::size_t n, double edge_prob, Rng& rng);

/// Uniform pairing model with restarts. Requires n*d even and d < n.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed);

Permutation random_permutation(std::size_t n, Rng& rng);

/// Accepted names: k2, complete:N, path:N, cycle:N, petersen, k33, prism, rook44, shrikhande.
Graph named_graph(std::string_view name);

Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph petersen_graph();
Graph k33_graph();
Graph prism_graph();
/// K4 x K4 (4x4 rook's graph), srg(16,6,2,2).
Graph rook44_graph();
/// Cayley graph of Z4 x Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}, srg(16,6,2,2).
Graph shrikhande_graph();

}  // namespace giso
