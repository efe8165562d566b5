#include "giso/report.hpp"

namespace giso {

using nlohmann::json;

json to_json(const RunReport& r) {
    json out = {
        {"schema_version", report_schema_version},
        {"tool_version", tool_version},
        {"command", r.command},
        {"inputs", r.inputs},
        {"timings_ms", r.timings_ms},
        {"result", r.result},
    };
    out["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return out;
}

json to_json(const IsoResult& r) {
    const auto& s = r.stats;
    json out = {
        {"verdict", std::string(to_string(r.verdict))},
        {"tried_pairs", r.tried_pairs},
        {"mode", std::string(to_string(r.mode))},
        {"stats",
         {
             {"k_matrix_ms", s.k_matrix_ms},
             {"p1_ms", s.p1_ms},
             {"verify_ms", s.verify_ms},
             {"total_ms", s.total_ms},
             {"value_classes", s.value_classes},
             {"skipped_degree", s.skipped_degree},
             {"p1_empty", s.p1_empty},
             {"verify_rejections", s.verify_rejections},
             {"initial_bigraph_edges", s.p1.initial_edges},
             {"bigraphs_built", s.p1.bigraphs_built},
             {"intersections_kept", s.p1.intersections_kept},
             {"edges_removed", s.p1.edges_removed},
             {"transversal_calls", s.p1.transversal_calls},
         }},
    };
    out["mapping"] = r.mapping ? json(*r.mapping) : json(nullptr);
    return out;
}

json to_json(const HuntReport& r) {
    json cx = json::array();
    for (const auto& c : r.counterexamples) {
        cx.push_back({
            {"index", c.index},
            {"label", c.label},
            {"graph_a", c.graph_a},
            {"graph_b", c.graph_b},
            {"algorithm_verdict", std::string(to_string(c.algorithm))},
            {"truth", std::string(to_string(c.truth))},
            {"truth_source", std::string(to_string(c.source))},
        });
    }
    return {
        {"strategy", std::string(to_string(r.strategy))},
        {"instances_tested", r.instances_tested},
        {"agreements", r.agreements},
        {"false_positives", r.false_positives},
        {"false_negatives", r.false_negatives},
        {"truly_isomorphic", r.truly_isomorphic},
        {"oracle_mismatches", r.oracle_mismatches},
        {"counterexamples", cx},
        {"labels", r.labels},
        {"seed", r.seed},
        {"wall_time", r.wall_time},
    };
}

json to_json(const BenchReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        rows.push_back({
            {"n", row.n},
            {"mode", std::string(to_string(row.mode))},
            {"times_ms", row.times_ms},
            {"median_ms", row.median_ms},
            {"isomorphic", row.isomorphic},
            {"digests", row.digests},
        });
    }
    json out = {{"rows", rows}, {"seed", r.seed}};
    if (r.fit) {
        out["fit"] = {{"slope", r.fit->slope}, {"intercept", r.fit->intercept}, {"r_squared", r.fit->r_squared}};
    } else {
        out["fit"] = nullptr;
    }
    return out;
}

json topo_index_json(const std::vector<Rational>& index) {
    json out = json::array();
    for (const auto& v : index) out.push_back(to_string(v));
    return out;
}

}  // namespace giso
