#pragma once

#include <optional>
#include <vector>

#include "skeweig/eigen.hpp"

namespace skeweig {

/// Rotation angle restricted to (-pi, pi) with |theta| < pi - 1e-9; the Cayley
/// parameter k = tan(theta/2) diverges at ±pi.
class RotationAngle {
public:
    explicit RotationAngle(double radians);
    double radians() const { return theta_; }

private:
    double theta_;
};

/// k = tan(theta/2), analytically equal to (1 - cos theta)/sin theta with the
/// removable singularity at theta = 0 filled in.
double k_of_theta(RotationAngle theta);

enum class CayleyMethod { definitional, closed_form, eigen_map };

/// 4D closed-form denominator variants: 1 + k^2 + (u.v) k^4 (linear coupling)
/// versus 1 + k^2 + (u.v)^2 k^4 (squared coupling). Only the squared variant
/// is consistent with the Cayley-Hamilton identity U^4 = -U^2 - (u.v)^2 E;
/// the linear one is retained for the formula cross-check suite.
enum class Cayley4Denominator { linear_coupling, squared_coupling };

struct CayleyResult {
    RealMatrix matrix;
    double k = 0.0;
    CayleyMethod method = CayleyMethod::definitional;
    double discrepancy = 0.0;  // max entrywise diff vs the definitional solve
};

/// Ground truth: (E - kU)^{-1} (E + kU) by Gaussian elimination with partial
/// pivoting. Always solvable for anti-symmetric U (spectrum is imaginary).
RealMatrix cayley_definitional(const RealMatrix& u, double k);

/// Polynomial-in-U closed form for the given dimension, with the measured
/// discrepancy against the definitional solve. 2D/3D use
/// E - 2/(1+k^2) (-kU - k^2 U^2); 4D uses
/// E + 2 (k(1+k^2)U + k^2(1+k^2)U^2 + k^3 U^3 + k^4 U^4) / denominator.
CayleyResult cayley_closed_form(const AntisymParams& p, RotationAngle theta,
                                Cayley4Denominator den = Cayley4Denominator::linear_coupling);

/// Maps an eigenvalue of U to the corresponding eigenvalue of C(-kU):
/// lambda_c = 1 + 2 k lambda (1 + k lambda) / (1 + k^2) in 2D/3D, and the
/// degree-4 polynomial form in 4D. The 4D default is the squared-coupling
/// denominator, which keeps |lambda_c| = 1 and C x = lambda_c x.
Complex cayley_eigenvalue_map(Complex lambda, double k, const AntisymParams& p,
                              Cayley4Denominator den = Cayley4Denominator::squared_coupling);

/// Spectral reconstruction C = sum_n lambda_c(lambda_n) x_n x_n^H over an
/// orthonormalized eigenbasis of U; discrepancy vs definitional is recorded.
CayleyResult cayley_eigen_map(const AntisymParams& p, RotationAngle theta);

struct RotationReport {
    double orthogonality_defect = 0.0;  // max-norm of C^T C - E
    double determinant = 0.0;
    std::optional<std::vector<double>> fixed_axis;  // 3D only; unset when C ~ E
};

RotationReport rotation_properties(const RealMatrix& c);

/// Entry-by-entry tabulated 3x3 closed form. Its three diagonal entries
/// disagree with the orthogonality-verified operator form (sign of the
/// (1 - cos theta) term, and (3,3) repeating 1-b^2 instead of 1-c^2);
/// kept only for the formula cross-check suite.
RealMatrix cayley3_tabulated(const AntisymParams& p, RotationAngle theta);

}  // namespace skeweig
