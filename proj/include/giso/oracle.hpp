#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "giso/graph.hpp"
#include "giso/isotest.hpp"
#include "giso/matcher.hpp"

namespace giso {

inline constexpr std::size_t default_oracle_limit = 10;

/// Exhaustive backtracking isomorphism search. Vertices of g are assigned in descending
/// degree order; targets must match degree and adjacency to every assigned vertex.
/// Throws InputError when n exceeds `limit`.
std::optional<Mapping> brute_force_iso(const Graph& g, const Graph& g2, std::size_t limit = default_oracle_limit);

/// Clique number by exhaustive branch and bound (small graphs only).
std::size_t max_clique_size(const Graph& g);

enum class PairStrategy { iso, near, hard };
std::string_view to_string(PairStrategy s);
PairStrategy parse_strategy(std::string_view s);

struct HuntConfig {
    PairStrategy strategy = PairStrategy::iso;
    std::size_t n_min = 4;
    std::size_t n_max = 8;
    std::size_t count = 100;
    std::uint64_t seed = 1;
    /// Run brute_force_iso on every instance (required for `near`).
    bool exhaustive_oracle = false;
    std::size_t oracle_limit = default_oracle_limit;
    int jobs = 0;  ///< <= 0: OpenMP default
    IsoOptions iso;
};

/// Where the ground truth for one instance came from.
enum class TruthSource { construction, brute_force, clique_certificate };
std::string_view to_string(TruthSource s);

struct HuntInstance {
    Graph a;
    Graph b;
    Verdict truth = Verdict::isomorphic;
    TruthSource source = TruthSource::construction;
    std::string label;  ///< e.g. "shrikhande/rook44"
};

/// Deterministic instance generator: the same (config, index) always yields the same pair.
HuntInstance make_instance(const HuntConfig& config, std::size_t index);

struct Counterexample {
    std::size_t index = 0;
    std::string label;
    std::string graph_a;  ///< edge-list text
    std::string graph_b;
    Verdict algorithm = Verdict::not_isomorphic;
    Verdict truth = Verdict::isomorphic;
    TruthSource source = TruthSource::construction;
};

struct HuntReport {
    PairStrategy strategy = PairStrategy::iso;
    std::size_t instances_tested = 0;
    std::size_t agreements = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    std::size_t truly_isomorphic = 0;  ///< instances whose ground truth is isomorphic
    /// Instances where brute_force_iso disagreed with the constructed truth (oracle bug).
    std::size_t oracle_mismatches = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<std::string> labels;  ///< per-instance label, in index order
    std::uint64_t seed = 0;
    double wall_time = 0;
};

/// Throws InputError for infeasible configurations (empty range, `near` beyond the oracle limit).
HuntReport hunt(const HuntConfig& config);

}  // namespace giso
