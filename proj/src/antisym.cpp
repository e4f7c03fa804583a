#include "skeweig/antisym.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace skeweig {

namespace {

int param_count(int dim) {
    switch (dim) {
        case 2: return 0;
        case 3: return 3;
        case 4: return 6;
        default:
            throw std::invalid_argument("dimension must be 2, 3 or 4, got " + std::to_string(dim));
    }
}

double sum_sq(const std::array<double, 6>& p, int count) {
    double s = 0.0;
    for (int i = 0; i < count; ++i) s += p[i] * p[i];
    return s;
}

}  // namespace

void AntisymParams::check_normalized(int dim, const std::array<double, 6>& p) {
    const int count = param_count(dim);
    if (count == 0) return;
    const double s = sum_sq(p, count);
    if (std::fabs(s - 1.0) > 1e-12)
        throw std::invalid_argument("parameters must have unit sum of squares, got " +
                                    std::to_string(s));
}

AntisymParams AntisymParams::dim2() { return AntisymParams(2, {}); }

AntisymParams AntisymParams::dim3(double a, double b, double c) {
    std::array<double, 6> p{a, b, c, 0.0, 0.0, 0.0};
    check_normalized(3, p);
    return AntisymParams(3, p);
}

AntisymParams AntisymParams::dim4(double a, double b, double c, double e, double f, double g) {
    std::array<double, 6> p{a, b, c, e, f, g};
    check_normalized(4, p);
    return AntisymParams(4, p);
}

AntisymParams AntisymParams::normalized(int dim, const std::vector<double>& values,
                                        bool* rescaled) {
    const int count = param_count(dim);
    if (static_cast<int>(values.size()) != count)
        throw std::invalid_argument("expected " + std::to_string(count) + " parameters for " +
                                    std::to_string(dim) + "D, got " +
                                    std::to_string(values.size()));
    if (rescaled) *rescaled = false;
    std::array<double, 6> p{};
    if (count == 0) return AntisymParams(2, p);

    double s = 0.0;
    for (int i = 0; i < count; ++i) {
        p[i] = values[i];
        s += p[i] * p[i];
    }
    if (s < 1e-24) throw std::invalid_argument("parameters are all zero; cannot normalize");
    if (std::fabs(s - 1.0) > 1e-9 && rescaled) *rescaled = true;
    const double inv = 1.0 / std::sqrt(s);
    for (int i = 0; i < count; ++i) p[i] *= inv;
    // One rounding pass can still leave |s-1| slightly above the ctor gate.
    const double s2 = sum_sq(p, count);
    if (std::fabs(s2 - 1.0) > 1e-15) {
        const double inv2 = 1.0 / std::sqrt(s2);
        for (int i = 0; i < count; ++i) p[i] *= inv2;
    }
    check_normalized(dim, p);
    return AntisymParams(dim, p);
}

AntisymParams AntisymParams::random(int dim, Rng& rng) {
    const int count = param_count(dim);
    if (count == 0) return dim2();
    const std::vector<double> v = rng.unit_sphere(count);
    std::array<double, 6> p{};
    for (int i = 0; i < count; ++i) p[i] = v[i];
    return AntisymParams(dim, p);
}

AntisymParams AntisymParams::random4_orthogonal(Rng& rng) {
    // u random, v random with its u-component removed, magnitudes split so
    // |u|^2 + |v|^2 = 1 while u.v = 0 exactly by construction.
    while (true) {
        std::vector<double> u = rng.unit_sphere(3);
        std::vector<double> w = rng.unit_sphere(3);
        const double dot = u[0] * w[0] + u[1] * w[1] + u[2] * w[2];
        double v[3] = {w[0] - dot * u[0], w[1] - dot * u[1], w[2] - dot * u[2]};
        const double vn = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
        if (vn < 1e-6) continue;
        const double su = std::sqrt(rng.uniform(0.05, 0.95));
        const double sv = std::sqrt(1.0 - su * su);
        return dim4(su * u[0], su * u[1], su * u[2], sv * v[0] / vn, sv * v[1] / vn,
                    sv * v[2] / vn);
    }
}

AntisymParams AntisymParams::random4_parallel(Rng& rng, int sign) {
    // v = ±u with |u| = |v| = 1/sqrt(2) gives u.v = ±1/2.
    const std::vector<double> u = rng.unit_sphere(3);
    const double s = 1.0 / std::sqrt(2.0);
    const double t = (sign < 0 ? -s : s);
    return dim4(s * u[0], s * u[1], s * u[2], t * u[0], t * u[1], t * u[2]);
}

std::vector<double> AntisymParams::values() const {
    const int count = param_count(dim_);
    return std::vector<double>(p_.begin(), p_.begin() + count);
}

double AntisymParams::u_sq() const { return p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2]; }

double AntisymParams::uv() const { return p_[0] * p_[3] + p_[1] * p_[4] + p_[2] * p_[5]; }

RealMatrix build_U(const AntisymParams& p) {
    switch (p.dim()) {
        case 2: {
            RealMatrix m(2);
            m(0, 1) = -1.0;
            m(1, 0) = 1.0;
            return m;
        }
        case 3: {
            RealMatrix m(3);
            m(0, 1) = -p.c(); m(0, 2) =  p.b();
            m(1, 0) =  p.c(); m(1, 2) = -p.a();
            m(2, 0) = -p.b(); m(2, 1) =  p.a();
            return m;
        }
        default: {
            RealMatrix m(4);
            m(0, 1) = -p.e(); m(0, 2) = -p.f(); m(0, 3) = -p.g();
            m(1, 0) =  p.e(); m(1, 2) = -p.c(); m(1, 3) =  p.b();
            m(2, 0) =  p.f(); m(2, 1) =  p.c(); m(2, 3) = -p.a();
            m(3, 0) =  p.g(); m(3, 1) = -p.b(); m(3, 2) =  p.a();
            return m;
        }
    }
}

std::vector<double> char_poly(const AntisymParams& p) {
    switch (p.dim()) {
        case 2: return {1.0, 0.0, 1.0};
        case 3: return {1.0, 0.0, 1.0, 0.0};
        default: {
            const double q = p.uv();
            return {1.0, 0.0, 1.0, 0.0, q * q};
        }
    }
}

}  // namespace skeweig
