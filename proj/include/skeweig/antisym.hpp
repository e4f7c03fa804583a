#pragma once

#include <array>
#include <vector>

#include "skeweig/linalg.hpp"
#include "skeweig/rng.hpp"

namespace skeweig {

/// Normalized parameter set for the canonical anti-symmetric matrix:
/// none in 2D, (a,b,c) on the unit sphere in 3D, (a,b,c,e,f,g) with unit
/// sum of squares in 4D.
class AntisymParams {
public:
    static AntisymParams dim2();
    static AntisymParams dim3(double a, double b, double c);
    static AntisymParams dim4(double a, double b, double c, double e, double f, double g);

    /// Builds from a raw value list (size 0, 3 or 6), rescaling to unit sum of
    /// squares. Sets *rescaled when the input deviated by more than 1e-9.
    static AntisymParams normalized(int dim, const std::vector<double>& values,
                                    bool* rescaled = nullptr);

    static AntisymParams random(int dim, Rng& rng);
    /// 4D family with u.v = 0 (eigenvalues {±j, 0, 0}).
    static AntisymParams random4_orthogonal(Rng& rng);
    /// 4D family with u.v = ±1/2 (repeated eigenvalues ±j/sqrt(2)).
    static AntisymParams random4_parallel(Rng& rng, int sign);

    int dim() const { return dim_; }
    /// Parameter values in (a,b,c[,e,f,g]) order; empty for 2D.
    std::vector<double> values() const;

    double a() const { return p_[0]; }
    double b() const { return p_[1]; }
    double c() const { return p_[2]; }
    double e() const { return p_[3]; }
    double f() const { return p_[4]; }
    double g() const { return p_[5]; }

    std::array<double, 3> u() const { return {p_[0], p_[1], p_[2]}; }
    std::array<double, 3> v() const { return {p_[3], p_[4], p_[5]}; }
    /// u^2 = a^2 + b^2 + c^2.
    double u_sq() const;
    /// u.v = ae + bf + cg (4D coupling scalar).
    double uv() const;

private:
    AntisymParams(int dim, std::array<double, 6> p) : dim_(dim), p_(p) {}
    static void check_normalized(int dim, const std::array<double, 6>& p);

    int dim_;
    std::array<double, 6> p_{};
};

/// The canonical anti-symmetric matrix for the given parameters:
/// 2D [[0,-1],[1,0]]; 3D rows [[0,-c,b],[c,0,-a],[-b,a,0]];
/// 4D rows [[0,-e,-f,-g],[e,0,-c,b],[f,c,0,-a],[g,-b,a,0]].
RealMatrix build_U(const AntisymParams& p);

/// Characteristic polynomial coefficients, highest degree first:
/// 2D [1,0,1]; 3D [1,0,1,0]; 4D [1,0,1,0,(ae+bf+cg)^2].
std::vector<double> char_poly(const AntisymParams& p);

}  // namespace skeweig
