#include "giso/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "giso/generate.hpp"

namespace giso {

namespace {

std::string fnv1a_hex(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const auto m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_loglog: need at least two points");
    const auto k = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0 || y[i] <= 0) throw std::invalid_argument("fit_loglog: non-positive value");
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        syy += ly * ly;
    }
    const double vx = sxx - sx * sx / k;
    if (vx <= 0) throw std::invalid_argument("fit_loglog: x values are all equal");
    LogLogFit fit;
    fit.slope = (sxy - sx * sy / k) / vx;
    fit.intercept = (sy - fit.slope * sx) / k;
    const double vy = syy - sy * sy / k;
    fit.r_squared = vy > 0 ? (fit.slope * (sxy - sx * sy / k)) / vy : 1.0;
    return fit;
}

BenchReport run_bench(const BenchConfig& config) {
    if (config.n_list.empty() || config.instances == 0) throw InputError("bench: empty configuration");
    BenchReport report;
    report.seed = config.seed;
    for (auto n : config.n_list) {
        if (n < 2) throw InputError("bench: every n must be at least 2");
        BenchRow row;
        row.n = n;
        row.mode = n > config.exact_limit ? CompareMode::fingerprint : CompareMode::exact;
        Rng rng(config.seed ^ (0x9e3779b97f4a7c15ull * n));
        IsoOptions options;
        options.mode = row.mode;
        for (std::size_t t = 0; t < config.instances; ++t) {
            auto g = random_connected(n, config.edge_prob, rng);
            auto h = permute(g, random_permutation(n, rng));
            row.digests.push_back(fnv1a_hex(to_graph6(g) + "|" + to_graph6(h)));
            const auto start = std::chrono::steady_clock::now();
            auto res = algorithm1(g, h, options);
            row.times_ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
            if (res.verdict == Verdict::isomorphic) ++row.isomorphic;
        }
        row.median_ms = median(row.times_ms);
        report.rows.push_back(std::move(row));
    }
    if (report.rows.size() >= 2) {
        std::vector<double> xs, ys;
        for (const auto& r : report.rows) {
            xs.push_back(static_cast<double>(r.n));
            ys.push_back(std::max(r.median_ms, 1e-6));
        }
        report.fit = fit_loglog(xs, ys);
    }
    return report;
}

}  // namespace giso
