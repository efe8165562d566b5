#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "giso/isotest.hpp"

namespace giso {

struct BenchConfig {
    std::vector<std::size_t> n_list{16, 32, 64};
    std::size_t instances = 5;
    std::uint64_t seed = 7;
    double edge_prob = 0.3;
    /// Orders above this use fingerprint comparison.
    std::size_t exact_limit = 64;
};

struct BenchRow {
    std::size_t n = 0;
    CompareMode mode = CompareMode::exact;
    std::vector<double> times_ms;
    double median_ms = 0;
    std::size_t isomorphic = 0;  ///< how many instances were reported isomorphic
    std::vector<std::string> digests;  ///< FNV-1a of each instance's graph6 code
};

struct LogLogFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::optional<LogLogFit> fit;  ///< absent with fewer than two sizes
    std::uint64_t seed = 0;
};

/// Least squares fit of log(y) against log(x). Needs at least two distinct x.
LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Times algorithm1 on (g, relabelled g) pairs of random connected graphs.
BenchReport run_bench(const BenchConfig& config);

}  // namespace giso
