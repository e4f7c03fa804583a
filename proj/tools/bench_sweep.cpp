// Benchmark: serial reference sweep vs the OpenMP driver on identical work.
// Exits nonzero when the two outcomes differ.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "skeweig/sweep.hpp"

using namespace skeweig;

namespace {

double run_timed(SweepOutcome (*driver)(const SweepConfig&), const SweepConfig& cfg,
                 SweepOutcome& out) {
    const auto start = std::chrono::steady_clock::now();
    out = driver(cfg);
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

bool identical(const SweepOutcome& a, const SweepOutcome& b) {
    if (a.stats.size() != b.stats.size() || a.ok != b.ok) return false;
    for (std::size_t i = 0; i < a.stats.size(); ++i)
        if (a.stats[i].max_deviation != b.stats[i].max_deviation ||
            a.stats[i].worst_sample != b.stats[i].worst_sample)
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    SweepConfig cfg;
    cfg.dim = 3;
    cfg.samples = 2000;
    cfg.seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        if (std::strcmp(argv[i], "--dim") == 0) cfg.dim = std::atoi(argv[i + 1]);
        else if (std::strcmp(argv[i], "--samples") == 0) cfg.samples = std::atol(argv[i + 1]);
        else if (std::strcmp(argv[i], "--seed") == 0) cfg.seed = std::strtoull(argv[i + 1], nullptr, 10);
        else {
            std::fprintf(stderr, "usage: skeweig-bench [--dim D] [--samples N] [--seed S]\n");
            return 1;
        }
    }

#ifdef _OPENMP
    const int threads = omp_get_max_threads();
#else
    const int threads = 1;
#endif
    std::printf("sweep benchmark: dim=%d samples=%ld seed=%llu threads=%d\n", cfg.dim,
                cfg.samples, static_cast<unsigned long long>(cfg.seed), threads);

    SweepOutcome serial, parallel;
    const double t_serial = run_timed(run_sweep_serial, cfg, serial);
    const double t_parallel = run_timed(run_sweep_parallel, cfg, parallel);

    std::printf("  serial    %8.3f s   (%.1f samples/s)\n", t_serial, cfg.samples / t_serial);
    std::printf("  parallel  %8.3f s   (%.1f samples/s)\n", t_parallel, cfg.samples / t_parallel);
    std::printf("  speedup   %8.2fx\n", t_serial / t_parallel);

    if (!identical(serial, parallel)) {
        std::fprintf(stderr, "FAIL: serial and parallel outcomes differ\n");
        return 1;
    }
    std::printf("  outcomes identical: yes   all checks %s (max deviation %.3g)\n",
                serial.ok ? "within tolerance" : "FAILED", serial.max_deviation);
    return serial.ok ? 0 : 1;
}
