#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skeweig/antisym.hpp"

namespace skeweig {

struct SweepCheck {
    std::string name;
    double tolerance = 0.0;  // +inf marks an informational (never-failing) check
};

struct SweepStat {
    double max_deviation = 0.0;
    long worst_sample = -1;
};

struct SweepConfig {
    int dim = 3;
    long samples = 200;
    std::uint64_t seed = 1;
    std::vector<double> thetas;  // fixed angles applied to every sample
    int random_thetas = 1;       // extra per-sample random angles
};

struct SweepOutcome {
    SweepConfig config;
    std::vector<SweepCheck> checks;
    std::vector<SweepStat> stats;  // aligned with checks
    double max_deviation = 0.0;    // over checks with finite tolerance
    bool ok = false;
};

/// The check list (names + pinned tolerances) run per sample for a dimension.
const std::vector<SweepCheck>& sweep_checks(int dim);

/// Parameter draw for sample `index`: deterministic per-index stream, so the
/// serial and parallel drivers see identical inputs. 4D cycles in the
/// degenerate u.v = 0 and u.v = ±1/2 families every tenth sample.
AntisymParams sweep_draw(int dim, long index, std::uint64_t seed);

/// Deviations for one sample, aligned with sweep_checks(dim).
std::vector<double> sweep_sample(int dim, const AntisymParams& p,
                                 const std::vector<double>& thetas);

/// Straightforward loop over samples; the reference implementation.
SweepOutcome run_sweep_serial(const SweepConfig& cfg);

/// OpenMP-parallel driver. Per-sample work is independent and the reduction
/// runs in sample order, so the outcome is identical to the serial one.
SweepOutcome run_sweep_parallel(const SweepConfig& cfg);

}  // namespace skeweig
