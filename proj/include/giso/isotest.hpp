#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "giso/graph.hpp"
#include "giso/matcher.hpp"
#include "giso/weights.hpp"

namespace giso {

/// Input outside the method's domain (disconnected graph). Reported as an input error,
/// never as a verdict.
class ScopeError : public InputError {
public:
    using InputError::InputError;
};

enum class Verdict { isomorphic, not_isomorphic };
std::string_view to_string(Verdict v);

/// How k-values are compared when building bigraphs.
enum class CompareMode {
    exact,        ///< canonical rationals
    fingerprint,  ///< residues modulo several 62-bit primes
};
std::string_view to_string(CompareMode m);

/// Iteration order over the snapshot of the anchor bigraph's edges in P1 step 2.
enum class EdgeOrder { ascending, descending };

struct P1Counters {
    std::size_t initial_edges = 0;
    std::size_t bigraphs_built = 0;
    std::size_t intersections_kept = 0;
    std::size_t edges_removed = 0;
    std::size_t transversal_calls = 0;
};

struct P1Outcome {
    std::optional<Mapping> mapping;
    Bigraph refined;  ///< U after step 2
    P1Counters counters;
};

/// Refinement procedure on pre-labelled k-matrices, anchored at (i, j).
P1Outcome p1_refine(const LabeledPair& labels, std::size_t i, std::size_t j,
                    EdgeOrder order = EdgeOrder::ascending);

/// Graph-level entry: checks preconditions, labels k and k2 exactly, and runs the refinement.
std::optional<Mapping> p1(const Graph& g, const Graph& g2, const KMatrix& k, const KMatrix& k2, std::size_t i,
                          std::size_t j, EdgeOrder order = EdgeOrder::ascending);

/// Edge preservation under r: (u,v) in g iff (r(u), r(v)) in g2. O(n + m log d).
/// Throws std::invalid_argument on size mismatch; a non-bijective r yields false.
bool verify(const Graph& g, const Graph& g2, std::span<const std::uint32_t> r);

struct IsoOptions {
    CompareMode mode = CompareMode::exact;
    std::size_t fingerprint_primes = 3;
    std::uint64_t fingerprint_seed = 0x6b2f1a97c3d4e5f1ull;
    EdgeOrder order = EdgeOrder::ascending;
    /// Called after every P1 run with the anchor j and its outcome. May be invoked from
    /// several threads when algorithm1 runs inside a parallel hunt.
    std::function<void(std::size_t, const P1Outcome&)> on_p1;
};

struct IsoStats {
    double k_matrix_ms = 0;
    double p1_ms = 0;
    double verify_ms = 0;
    double total_ms = 0;
    std::size_t value_classes = 0;
    std::size_t skipped_degree = 0;
    std::size_t p1_empty = 0;
    std::size_t verify_rejections = 0;
    P1Counters p1;  ///< summed over all P1 calls
};

struct IsoResult {
    Verdict verdict = Verdict::not_isomorphic;
    std::optional<Mapping> mapping;  ///< present iff isomorphic
    std::size_t tried_pairs = 0;
    CompareMode mode = CompareMode::exact;
    IsoStats stats;
};

/// Anchors vertex 0 of g against each j of g2 in turn; the first verified mapping wins.
/// Throws ScopeError when either graph is disconnected.
IsoResult algorithm1(const Graph& g, const Graph& g2, const IsoOptions& options = {});

}  // namespace giso
