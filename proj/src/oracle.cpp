#include "giso/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <numeric>

#include "giso/generate.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace giso {

namespace {

class Backtracker {
public:
    Backtracker(const Graph& g, const Graph& g2) : g_(g), g2_(g2), n_(g.order()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        map_.assign(n_, unassigned);
        used_.assign(n_, false);
    }

    std::optional<Mapping> run() {
        if (extend(0)) return map_;
        return std::nullopt;
    }

private:
    static constexpr std::uint32_t unassigned = ~std::uint32_t{0};

    bool consistent(Vertex v, Vertex t, std::size_t depth) const {
        for (std::size_t d = 0; d < depth; ++d) {
            const Vertex a = order_[d];
            if (g_.adjacent(v, a) != g2_.adjacent(t, map_[a])) return false;
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == n_) return true;
        const Vertex v = order_[depth];
        for (Vertex t = 0; t < n_; ++t) {
            if (used_[t] || g2_.degree(t) != g_.degree(v) || !consistent(v, t, depth)) continue;
            map_[v] = t;
            used_[t] = true;
            if (extend(depth + 1)) return true;
            used_[t] = false;
            map_[v] = unassigned;
        }
        return false;
    }

    const Graph& g_;
    const Graph& g2_;
    std::size_t n_;
    std::vector<Vertex> order_;
    Mapping map_;
    std::vector<bool> used_;
};

void grow_clique(const Graph& g, std::vector<Vertex>& candidates, std::size_t size, std::size_t& best) {
    if (candidates.empty()) {
        best = std::max(best, size);
        return;
    }
    while (!candidates.empty()) {
        if (size + candidates.size() <= best) return;
        const Vertex v = candidates.back();
        candidates.pop_back();
        std::vector<Vertex> next;
        for (auto w : candidates)
            if (g.adjacent(v, w)) next.push_back(w);
        grow_clique(g, next, size + 1, best);
    }
}

}  // namespace

std::optional<Mapping> brute_force_iso(const Graph& g, const Graph& g2, std::size_t limit) {
    if (g.order() > limit || g2.order() > limit) {
        throw InputError("brute_force_iso: graph order exceeds oracle limit " + std::to_string(limit));
    }
    if (g.order() != g2.order() || g.size() != g2.size()) return std::nullopt;
    if (degree_multiset(g) != degree_multiset(g2)) return std::nullopt;
    return Backtracker(g, g2).run();
}

std::size_t max_clique_size(const Graph& g) {
    std::vector<Vertex> all(g.order());
    std::iota(all.begin(), all.end(), Vertex{0});
    std::size_t best = 0;
    grow_clique(g, all, 0, best);
    return best;
}

std::string_view to_string(PairStrategy s) {
    switch (s) {
        case PairStrategy::iso: return "iso";
        case PairStrategy::near: return "near";
        case PairStrategy::hard: return "hard";
    }
    return "?";
}

PairStrategy parse_strategy(std::string_view s) {
    if (s == "iso") return PairStrategy::iso;
    if (s == "near") return PairStrategy::near;
    if (s == "hard") return PairStrategy::hard;
    throw InputError("unknown pair strategy '" + std::string(s) + "'");
}

std::string_view to_string(TruthSource s) {
    switch (s) {
        case TruthSource::construction: return "construction";
        case TruthSource::brute_force: return "brute_force";
        case TruthSource::clique_certificate: return "clique_certificate";
    }
    return "?";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

double random_density(Rng& rng) {
    return std::uniform_real_distribution<double>(0.2, 0.7)(rng);
}

// Moves one endpoint of a random edge. Prefers moves that keep the degree multiset:
// dropping (u,v) and adding (u,w) with deg(w) = deg(v) - 1 swaps the two degrees.
std::optional<Graph> rewire_one_edge(const Graph& g, Rng& rng) {
    const auto n = g.order();
    std::vector<std::pair<Edge, Vertex>> preserving, any;
    for (auto [a, b] : g.edges()) {
        for (auto [u, v] : {Edge{a, b}, Edge{b, a}}) {
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || w == v || g.adjacent(u, w)) continue;
                any.push_back({{u, v}, w});
                if (g.degree(w) + 1 == g.degree(v)) preserving.push_back({{u, v}, w});
            }
        }
    }
    auto& pool = preserving.empty() ? any : preserving;
    if (pool.empty()) return std::nullopt;
    std::shuffle(pool.begin(), pool.end(), rng);
    for (const auto& [uv, w] : pool) {
        auto [u, v] = uv;
        std::vector<Edge> edges;
        for (auto e : g.edges()) {
            if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
        }
        edges.emplace_back(u, w);
        Graph h(n, std::move(edges));
        if (is_connected(h)) return h;
    }
    return std::nullopt;
}

}  // namespace

HuntInstance make_instance(const HuntConfig& config, std::size_t index) {
    Rng rng(splitmix64(config.seed ^ splitmix64(index + 1)));
    HuntInstance inst;
    auto draw_n = [&]() { return std::uniform_int_distribution<std::size_t>(config.n_min, config.n_max)(rng); };

    switch (config.strategy) {
        case PairStrategy::iso: {
            const auto n = draw_n();
            inst.a = random_connected(n, random_density(rng), rng);
            inst.b = permute(inst.a, random_permutation(n, rng));
            inst.truth = Verdict::isomorphic;
            inst.source = TruthSource::construction;
            inst.label = "iso:n=" + std::to_string(n);
            break;
        }
        case PairStrategy::near: {
            for (;;) {
                const auto n = draw_n();
                auto g = random_connected(n, random_density(rng), rng);
                auto h = rewire_one_edge(g, rng);
                if (!h) continue;
                inst.a = std::move(g);
                inst.b = permute(*h, random_permutation(n, rng));
                inst.label = "near:n=" + std::to_string(n);
                break;
            }
            inst.truth = brute_force_iso(inst.a, inst.b, config.oracle_limit) ? Verdict::isomorphic
                                                                             : Verdict::not_isomorphic;
            inst.source = TruthSource::brute_force;
            break;
        }
        case PairStrategy::hard: {
            const bool small = index % 2 == 0;
            inst.a = small ? k33_graph() : shrikhande_graph();
            inst.b = small ? prism_graph() : rook44_graph();
            inst.label = small ? "k33/prism" : "shrikhande/rook44";
            if (index >= 2) {
                inst.a = permute(inst.a, random_permutation(inst.a.order(), rng));
                inst.b = permute(inst.b, random_permutation(inst.b.order(), rng));
            }
            if (small) {
                inst.truth = brute_force_iso(inst.a, inst.b) ? Verdict::isomorphic : Verdict::not_isomorphic;
                inst.source = TruthSource::brute_force;
            } else {
                if (max_clique_size(inst.a) == max_clique_size(inst.b)) {
                    throw std::logic_error("hard pair lost its clique certificate");
                }
                inst.truth = Verdict::not_isomorphic;
                inst.source = TruthSource::clique_certificate;
            }
            break;
        }
    }
    return inst;
}

HuntReport hunt(const HuntConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    if (config.count == 0) throw InputError("hunt: instance count must be positive");
    if (config.strategy != PairStrategy::hard) {
        if (config.n_min == 0 || config.n_min > config.n_max) throw InputError("hunt: empty vertex-count range");
        if (config.n_min < 2) throw InputError("hunt: n_min must be at least 2");
        if (config.strategy == PairStrategy::near && config.n_max > config.oracle_limit) {
            throw InputError("hunt: strategy 'near' needs brute-force ground truth; n_max " +
                             std::to_string(config.n_max) + " exceeds oracle limit " +
                             std::to_string(config.oracle_limit));
        }
    }

    struct Outcome {
        std::string label;
        Verdict truth = Verdict::isomorphic;
        Verdict algorithm = Verdict::not_isomorphic;
        TruthSource source = TruthSource::construction;
        bool oracle_mismatch = false;
        std::string a, b;
    };
    std::vector<Outcome> outcomes(config.count);
    std::vector<std::exception_ptr> errors(config.count);
    const auto count = static_cast<std::ptrdiff_t>(config.count);
#ifdef _OPENMP
    const int jobs = config.jobs > 0 ? config.jobs : omp_get_max_threads();
#endif

#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::ptrdiff_t ii = 0; ii < count; ++ii) {
        const auto idx = static_cast<std::size_t>(ii);
        try {
            auto inst = make_instance(config, idx);
            auto& o = outcomes[idx];
            o.label = inst.label;
            o.truth = inst.truth;
            o.source = inst.source;
            auto res = algorithm1(inst.a, inst.b, config.iso);
            o.algorithm = res.verdict;
            if (config.exhaustive_oracle && inst.source == TruthSource::construction &&
                inst.a.order() <= config.oracle_limit) {
                const bool found = brute_force_iso(inst.a, inst.b, config.oracle_limit).has_value();
                o.oracle_mismatch = found != (inst.truth == Verdict::isomorphic);
            }
            if (o.algorithm != o.truth) {
                o.a = to_edge_list(inst.a);
                o.b = to_edge_list(inst.b);
            }
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    HuntReport report;
    report.strategy = config.strategy;
    report.seed = config.seed;
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        ++report.instances_tested;
        report.labels.push_back(o.label);
        if (o.oracle_mismatch) ++report.oracle_mismatches;
        if (o.truth == Verdict::isomorphic) ++report.truly_isomorphic;
        if (o.algorithm == o.truth) {
            ++report.agreements;
            continue;
        }
        if (o.algorithm == Verdict::isomorphic) {
            ++report.false_positives;
        } else {
            ++report.false_negatives;
        }
        report.counterexamples.push_back({i, o.label, o.a, o.b, o.algorithm, o.truth, o.source});
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace giso
