#include "giso/isotest.hpp"

#include <algorithm>
#include <chrono>

namespace giso {

std::string_view to_string(Verdict v) {
    return v == Verdict::isomorphic ? "isomorphic" : "not_isomorphic";
}

std::string_view to_string(CompareMode m) {
    return m == CompareMode::exact ? "exact" : "fingerprint";
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void require_connected(const Graph& g, std::string_view which) {
    if (!is_connected(g)) {
        throw ScopeError(std::string(which) +
                         " is disconnected; the test is defined only for connected undirected graphs without loops");
    }
}

}  // namespace

P1Outcome p1_refine(const LabeledPair& labels, std::size_t i, std::size_t j, EdgeOrder order) {
    P1Outcome out;
    Bigraph u = build_bigraph(labels, i, j);
    ++out.counters.bigraphs_built;
    auto snapshot = u.edges();
    out.counters.initial_edges = snapshot.size();
    if (order == EdgeOrder::descending) std::reverse(snapshot.begin(), snapshot.end());

    for (auto [p, q] : snapshot) {
        if (p == i && q == j) continue;
        if (!u.has(p, q)) continue;
        Bigraph candidate = build_bigraph(labels, p, q);
        ++out.counters.bigraphs_built;
        candidate &= u;
        ++out.counters.transversal_calls;
        if (transversal(candidate)) {
            u = std::move(candidate);
            ++out.counters.intersections_kept;
        } else {
            u.erase(p, q);
            ++out.counters.edges_removed;
        }
    }
    ++out.counters.transversal_calls;
    out.mapping = transversal(u);
    out.refined = std::move(u);
    return out;
}

std::optional<Mapping> p1(const Graph& g, const Graph& g2, const KMatrix& k, const KMatrix& k2, std::size_t i,
                          std::size_t j, EdgeOrder order) {
    if (g.order() != g2.order() || g.size() != g2.size()) {
        throw std::invalid_argument("p1: graphs differ in vertex or edge count");
    }
    if (k.order() != g.order() || k2.order() != g2.order()) throw std::invalid_argument("p1: k-matrix size mismatch");
    require_connected(g, "first graph");
    require_connected(g2, "second graph");
    return p1_refine(label_exact(k, k2), i, j, order).mapping;
}

bool verify(const Graph& g, const Graph& g2, std::span<const std::uint32_t> r) {
    const auto n = g.order();
    if (r.size() != n || g2.order() != n) throw std::invalid_argument("verify: size mismatch");
    if (g.size() != g2.size()) return false;
    std::vector<bool> hit(n, false);
    for (auto v : r) {
        if (v >= n || hit[v]) return false;
        hit[v] = true;
    }
    // r is a bijection and |E| = |E'|, so preserving every edge of g gives the biconditional.
    for (auto [u, v] : g.edges()) {
        if (!g2.adjacent(r[u], r[v])) return false;
    }
    return true;
}

IsoResult algorithm1(const Graph& g, const Graph& g2, const IsoOptions& options) {
    const auto start = Clock::now();
    require_connected(g, "first graph");
    require_connected(g2, "second graph");

    IsoResult result;
    result.mode = options.mode;
    auto finish = [&]() -> IsoResult {
        result.stats.total_ms = ms_since(start);
        return result;
    };

    if (g.order() != g2.order() || g.size() != g2.size()) return finish();
    const auto n = g.order();

    auto phase = Clock::now();
    LabeledPair labels;
    if (options.mode == CompareMode::exact) {
        labels = label_exact(k_matrix(g), k_matrix(g2));
    } else {
        // A prime dividing either determinant is skipped by drawing a fresh set.
        for (std::uint64_t attempt = 0;; ++attempt) {
            auto primes = random_primes62(options.fingerprint_primes, options.fingerprint_seed + attempt);
            try {
                labels = label_fingerprint(g, g2, primes);
                break;
            } catch (const std::runtime_error&) {
                if (attempt > 16) throw;
            }
        }
    }
    result.stats.k_matrix_ms = ms_since(phase);
    result.stats.value_classes = labels.classes;

    for (std::size_t j = 0; j < n; ++j) {
        if (g.degree(0) != g2.degree(static_cast<Vertex>(j))) {
            ++result.stats.skipped_degree;
            continue;
        }
        ++result.tried_pairs;
        phase = Clock::now();
        auto outcome = p1_refine(labels, 0, j, options.order);
        result.stats.p1_ms += ms_since(phase);
        if (options.on_p1) options.on_p1(j, outcome);
        auto& acc = result.stats.p1;
        acc.initial_edges += outcome.counters.initial_edges;
        acc.bigraphs_built += outcome.counters.bigraphs_built;
        acc.intersections_kept += outcome.counters.intersections_kept;
        acc.edges_removed += outcome.counters.edges_removed;
        acc.transversal_calls += outcome.counters.transversal_calls;
        if (!outcome.mapping) {
            ++result.stats.p1_empty;
            continue;
        }
        phase = Clock::now();
        const bool ok = verify(g, g2, *outcome.mapping);
        result.stats.verify_ms += ms_since(phase);
        if (ok) {
            result.verdict = Verdict::isomorphic;
            result.mapping = std::move(outcome.mapping);
            return finish();
        }
        ++result.stats.verify_rejections;
    }
    return finish();
}

}  // namespace giso
