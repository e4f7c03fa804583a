#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace skeweig {

/// Seeded random stream with a fixed cross-platform mapping to doubles
/// (mt19937_64 bit stream; the distribution code is hand-rolled so the same
/// seed yields the same draws on every standard library).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (cosine branch only).
    double gaussian() {
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793 * u2);
    }

    /// Uniform point on the unit sphere S^{n-1}.
    std::vector<double> unit_sphere(int n) {
        while (true) {
            std::vector<double> v(n);
            double norm_sq = 0.0;
            for (double& x : v) {
                x = gaussian();
                norm_sq += x * x;
            }
            if (norm_sq < 1e-12) continue;
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& x : v) x *= inv;
            return v;
        }
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace skeweig
