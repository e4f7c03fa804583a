#pragma once

#include "skeweig/eigen.hpp"

namespace skeweig {

/// Brute-force eigen decomposition of an anti-symmetric matrix, independent of
/// the closed forms: characteristic polynomial coefficients via
/// Faddeev-LeVerrier, roots via the quadratic formula in lambda^2, and
/// eigenvectors via complex Gaussian elimination null-space extraction.
/// All pairs are flagged oracle_sourced. Throws when U is not anti-symmetric
/// or a null space does not match the root multiplicity.
EigenSystem oracle_eigen(const RealMatrix& u);

/// Characteristic polynomial coefficients of any square matrix, highest
/// degree first (monic), via Faddeev-LeVerrier.
std::vector<double> char_poly_of_matrix(const RealMatrix& a);

/// Max |p(lambda)| over the given values for a monic coefficient list.
double poly_residual(const std::vector<double>& coeffs, const std::vector<Complex>& values);

}  // namespace skeweig
