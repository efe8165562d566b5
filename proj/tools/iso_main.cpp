// iso: command-line front end for the linear-system isomorphism test.
//
// Exit codes: 0 isomorphic / success, 1 not isomorphic, 2 input error,
// 3 discrepancy found in --strict hunt mode.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "giso/bench.hpp"
#include "giso/generate.hpp"
#include "giso/graph.hpp"
#include "giso/isotest.hpp"
#include "giso/oracle.hpp"
#include "giso/report.hpp"
#include "giso/weights.hpp"

namespace {

using namespace giso;

constexpr int exit_ok = 0;
constexpr int exit_not_isomorphic = 1;
constexpr int exit_input_error = 2;
constexpr int exit_discrepancy = 3;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

Graph load_graph(const std::string& path, const std::string& format) {
    const auto text = read_file(path);
    std::string fmt = format;
    if (fmt == "auto") {
        if (ends_with(path, ".g6")) {
            fmt = "g6";
        } else if (ends_with(path, ".el")) {
            fmt = "el";
        } else {
            // A single token on the first line is graph6; "n m" is an edge list.
            auto first = text.substr(0, text.find('\n'));
            fmt = first.find_first_of(" \t") == std::string::npos ? "g6" : "el";
        }
    }
    try {
        return fmt == "g6" ? parse_graph6(text) : parse_edge_list(text);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

void emit(const RunReport& report) {
    std::cout << to_json(report).dump(2) << "\n";
}

int fail(const std::string& command, const std::vector<std::string>& inputs, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    RunReport r;
    r.command = command;
    r.inputs = inputs;
    r.result = {{"error", message}};
    emit(r);
    return exit_input_error;
}

CompareMode parse_mode(const std::string& s) {
    return s == "fingerprint" ? CompareMode::fingerprint : CompareMode::exact;
}

std::vector<std::size_t> parse_n_list(const std::string& s) {
    std::vector<std::size_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            auto v = std::stoul(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("bad --n entry '" + item + "'");
        }
    }
    if (out.empty()) throw InputError("--n is empty");
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph isomorphism test via exact vertex-weight linear systems"};
    app.require_subcommand(1);
    app.set_version_flag("--version", tool_version);

    // test
    auto* test = app.add_subcommand("test", "Decide whether two graphs are isomorphic");
    std::string file_a, file_b, format = "auto", mode = "exact", order = "asc";
    test->add_option("A", file_a, "first graph file")->required();
    test->add_option("B", file_b, "second graph file")->required();
    test->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "el", "g6"}));
    test->add_option("--mode", mode, "k-value comparison")->check(CLI::IsMember({"exact", "fingerprint"}));
    test->add_option("--order", order, "refinement edge order")->check(CLI::IsMember({"asc", "desc"}));

    // index
    auto* index = app.add_subcommand("index", "Print the exact sorted-weight topological index");
    std::string index_file;
    index->add_option("F", index_file, "graph file")->required();
    index->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "el", "g6"}));

    // bench
    auto* bench = app.add_subcommand("bench", "Time the test on relabelled random graphs and fit the scaling exponent");
    std::string n_list = "16,32,64";
    BenchConfig bench_cfg;
    bench->add_option("--n", n_list, "comma-separated vertex counts");
    bench->add_option("--instances", bench_cfg.instances, "instances per n")->check(CLI::PositiveNumber);
    bench->add_option("--seed", bench_cfg.seed, "generator seed");
    bench->add_option("--edge-prob", bench_cfg.edge_prob, "edge probability")->check(CLI::Range(0.0, 1.0));
    bench->add_option("--exact-limit", bench_cfg.exact_limit, "largest n compared exactly; above uses fingerprints");

    // hunt
    auto* hunt_cmd = app.add_subcommand("hunt", "Compare the test against ground truth on generated pairs");
    HuntConfig hunt_cfg;
    std::string strategy = "iso";
    std::size_t n_exact = 0;
    bool strict = false;
    hunt_cmd->add_option("--strategy", strategy, "pair strategy")->check(CLI::IsMember({"iso", "near", "hard"}));
    hunt_cmd->add_option("--count", hunt_cfg.count, "number of instances");
    hunt_cmd->add_option("--nmin", hunt_cfg.n_min, "smallest vertex count");
    hunt_cmd->add_option("--nmax", hunt_cfg.n_max, "largest vertex count");
    hunt_cmd->add_option("--n", n_exact, "fixed vertex count (sets --nmin and --nmax)");
    hunt_cmd->add_option("--seed", hunt_cfg.seed, "sweep seed");
    hunt_cmd->add_option("--jobs", hunt_cfg.jobs, "worker threads (default: all cores)");
    hunt_cmd->add_option("--oracle-limit", hunt_cfg.oracle_limit, "largest n for brute force");
    hunt_cmd->add_flag("--strict", strict, "exit 3 if any false negative is found");
    hunt_cmd->add_flag("--exhaustive-oracle", hunt_cfg.exhaustive_oracle, "also brute-force constructed pairs");

    // gen
    auto* gen = app.add_subcommand("gen", "Write a generated graph");
    std::string named, out_file, gen_format = "el";
    std::vector<double> random_connected_args;
    std::vector<std::size_t> random_regular_args;
    std::uint64_t gen_seed = 1;
    auto* named_opt = gen->add_option("--named", named, "k2, complete:N, path:N, cycle:N, petersen, k33, prism, rook44, shrikhande");
    auto* rc_opt = gen->add_option("--random-connected", random_connected_args, "N P")->expected(2);
    auto* rr_opt = gen->add_option("--random-regular", random_regular_args, "N D")->expected(2);
    named_opt->excludes(rc_opt)->excludes(rr_opt);
    rc_opt->excludes(rr_opt);
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--format", gen_format, "output format")->check(CLI::IsMember({"el", "g6"}));
    gen->add_option("--out", out_file, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    if (*test) {
        const std::vector<std::string> inputs{file_a, file_b};
        try {
            const auto start = Clock::now();
            auto g = load_graph(file_a, format);
            auto h = load_graph(file_b, format);
            const double load_ms = ms_since(start);
            IsoOptions options;
            options.mode = parse_mode(mode);
            options.order = order == "desc" ? EdgeOrder::descending : EdgeOrder::ascending;
            auto result = algorithm1(g, h, options);
            RunReport r;
            r.command = "test";
            r.inputs = inputs;
            r.timings_ms = {{"load", load_ms},
                            {"k_matrix", result.stats.k_matrix_ms},
                            {"p1", result.stats.p1_ms},
                            {"verify", result.stats.verify_ms},
                            {"total", result.stats.total_ms}};
            r.result = to_json(result);
            emit(r);
            const bool iso = result.verdict == Verdict::isomorphic;
            std::cerr << (iso ? "G ≅ G′" : "G ≇ G′") << "  (" << result.tried_pairs
                      << " anchor pairs tried)\n";
            return iso ? exit_ok : exit_not_isomorphic;
        } catch (const InputError& e) {
            return fail("test", inputs, e.what());
        }
    }

    if (*index) {
        try {
            const auto start = Clock::now();
            auto g = load_graph(index_file, format);
            if (!is_connected(g)) {
                throw ScopeError("graph is disconnected; the weight system is defined only for connected undirected graphs without loops");
            }
            auto idx = topo_index(g);
            RunReport r;
            r.command = "index";
            r.inputs = {index_file};
            r.timings_ms = {{"total", ms_since(start)}};
            r.result = {{"n", g.order()}, {"m", g.size()}, {"topo_index", topo_index_json(idx)}};
            emit(r);
            std::cerr << topo_index_json(idx).dump() << "\n";
            return exit_ok;
        } catch (const InputError& e) {
            return fail("index", {index_file}, e.what());
        }
    }

    if (*bench) {
        try {
            bench_cfg.n_list = parse_n_list(n_list);
            const auto start = Clock::now();
            auto report = run_bench(bench_cfg);
            RunReport r;
            r.command = "bench";
            r.inputs = {"--n " + n_list};
            r.seed = bench_cfg.seed;
            r.timings_ms = {{"total", ms_since(start)}};
            r.result = to_json(report);
            emit(r);
            for (const auto& row : report.rows) {
                std::cerr << "n=" << row.n << " (" << to_string(row.mode) << ") median " << row.median_ms << " ms, "
                          << row.isomorphic << "/" << row.times_ms.size() << " isomorphic\n";
            }
            if (report.fit) std::cerr << "log-log slope " << report.fit->slope << "\n";
            return exit_ok;
        } catch (const InputError& e) {
            return fail("bench", {"--n " + n_list}, e.what());
        }
    }

    if (*hunt_cmd) {
        try {
            hunt_cfg.strategy = parse_strategy(strategy);
            if (n_exact) hunt_cfg.n_min = hunt_cfg.n_max = n_exact;
            if (hunt_cfg.strategy == PairStrategy::hard && hunt_cmd->count("--count") == 0) hunt_cfg.count = 2;
            auto report = hunt(hunt_cfg);
            RunReport r;
            r.command = "hunt";
            r.inputs = {"--strategy " + strategy};
            r.seed = hunt_cfg.seed;
            r.timings_ms = {{"total", report.wall_time * 1000.0}};
            r.result = to_json(report);
            emit(r);
            std::cerr << "tested " << report.instances_tested << ": " << report.agreements << " agree, "
                      << report.false_positives << " false positives, " << report.false_negatives
                      << " false negatives\n";
            if (report.false_negatives > 0) {
                std::cerr << "COUNTEREXAMPLES FOUND: " << report.counterexamples.size()
                          << " pair(s) serialized in the report\n";
            }
            if (report.false_positives > 0) {
                std::cerr << "BUG: false positive reported despite verification\n";
                return exit_discrepancy;
            }
            return strict && report.false_negatives > 0 ? exit_discrepancy : exit_ok;
        } catch (const InputError& e) {
            return fail("hunt", {"--strategy " + strategy}, e.what());
        }
    }

    if (*gen) {
        try {
            Graph g;
            std::string spec;
            if (!named.empty()) {
                g = named_graph(named);
                spec = "named:" + named;
            } else if (!random_connected_args.empty()) {
                const auto n = static_cast<std::size_t>(random_connected_args[0]);
                if (random_connected_args[0] != static_cast<double>(n)) throw InputError("--random-connected: N must be an integer");
                g = random_connected(n, random_connected_args[1], gen_seed);
                spec = "random-connected";
            } else if (!random_regular_args.empty()) {
                g = random_regular(random_regular_args[0], random_regular_args[1], gen_seed);
                spec = "random-regular";
            } else {
                throw InputError("gen: one of --named, --random-connected, --random-regular is required");
            }
            const auto text = gen_format == "g6" ? to_graph6(g) + "\n" : to_edge_list(g);
            if (out_file.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(out_file, std::ios::binary);
                if (!out) throw InputError("cannot write '" + out_file + "'");
                out << text;
                RunReport r;
                r.command = "gen";
                r.inputs = {spec};
                r.seed = gen_seed;
                r.result = {{"n", g.order()}, {"m", g.size()}, {"output", out_file}, {"format", gen_format}};
                emit(r);
            }
            std::cerr << "generated n=" << g.order() << " m=" << g.size() << "\n";
            return exit_ok;
        } catch (const InputError& e) {
            return fail("gen", {}, e.what());
        }
    }
    return exit_input_error;
}
