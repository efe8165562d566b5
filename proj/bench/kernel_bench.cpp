// Compares the k-matrix kernels: serial rational Gauss-Jordan reference versus the
// fraction-free integer elimination with one thread and with all threads.
//
//   kernel_bench [n ...]        default sizes: 16 32 64 96

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "giso/generate.hpp"
#include "giso/weights.hpp"

namespace {

using namespace giso;

template <class F>
double time_ms(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

FractionFreeSolution run_kernel(const Graph& g, int threads) {
    const auto n = g.order();
    std::vector<BigInt> b(n * n, 0), rhs(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        b[i * n + i] = rhs[i * n + i] = static_cast<unsigned long>(g.degree(static_cast<Vertex>(i)) + 1);
    }
    for (auto [u, v] : g.edges()) b[u * n + v] = b[v * n + u] = -1;
    return fraction_free_solve(n, std::move(b), n, std::move(rhs), threads);
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    for (int a = 1; a < argc; ++a) sizes.push_back(static_cast<std::size_t>(std::strtoul(argv[a], nullptr, 10)));
    if (sizes.empty()) sizes = {16, 32, 64, 96};
#ifdef _OPENMP
    const int max_threads = omp_get_max_threads();
#else
    const int max_threads = 1;
#endif
    std::printf("%6s %14s %14s %14s %10s  (threads=%d)\n", "n", "reference_ms", "ff_serial_ms", "ff_parallel_ms",
                "agree", max_threads);
    for (auto n : sizes) {
        auto g = random_connected(n, 0.3, std::uint64_t{n});
        const int reps = n <= 32 ? 5 : 2;
        KMatrix ref;
        const double t_ref = time_ms([&] { ref = k_matrix_reference(g); }, reps);
        const double t_serial = time_ms([&] { run_kernel(g, 1); }, reps);
        const double t_par = time_ms([&] { run_kernel(g, max_threads); }, reps);
        const bool agree = ref == k_matrix(g);
        std::printf("%6zu %14.2f %14.2f %14.2f %10s\n", n, t_ref, t_serial, t_par, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
