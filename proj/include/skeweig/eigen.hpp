#pragma once

#include <vector>

#include "skeweig/antisym.hpp"
#include "skeweig/linalg.hpp"

namespace skeweig {

struct EigenPair {
    Complex value;
    std::vector<Complex> vector;
    double residual = 0.0;      // max-norm of U x - lambda x
    bool oracle_sourced = false;  // true when the closed form degenerated and
                                  // the vector came from null-space extraction
};

struct EigenSystem {
    int dim = 0;
    std::vector<EigenPair> pairs;
    int representation = 0;  // 3D: which equivalent closed form was used (1..3)
};

/// Closed-form eigenvalues, ordered by descending |imag|, positive first:
/// 2D {j,-j}; 3D {j,-j,0}; 4D ±j/sqrt(2)*sqrt(1±sqrt(1-4(u.v)^2)).
std::vector<Complex> eigenvalues(const AntisymParams& p);

/// Closed-form eigenvectors. For 3D, z_choice in {1,2,3} picks one of the
/// three equivalent forms; 0 selects the form with the largest real leading
/// entry (1-a^2, 1-b^2, 1-c^2). A degenerate explicit choice falls back to
/// the selection rule. 4D repeated or vanished representations fall back to
/// null-space extraction and are flagged oracle_sourced. Vectors are the
/// raw closed forms unless unit_norm is set.
EigenSystem eigenvectors(const AntisymParams& p, int z_choice = 0, bool unit_norm = false);

/// Max-norm of U x - lambda x.
double verify_eigenpair(const RealMatrix& u, Complex lambda, const std::vector<Complex>& x);

/// Multiset distance between two eigenvalue lists of equal length, via greedy
/// nearest matching (near-ties may order differently across routes).
double eigenvalue_multiset_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Default 3D representation per the selection rule (1, 2 or 3).
int default_representation(const AntisymParams& p);

/// The raw 3D closed-form vector for eigenvalue +j in the given representation
/// (1-based); does not check degeneracy.
std::vector<Complex> eigvec3_form(const AntisymParams& p, int form);

/// Indices of `lambdas` grouped into clusters of mutual distance below tol.
std::vector<std::vector<std::size_t>> cluster_eigenvalues(const std::vector<Complex>& lambdas,
                                                          double tol);

/// Orthonormal basis of the invariant subspace belonging to cluster `which`,
/// computed as the range of the spectral projector polynomial over the other
/// clusters. Exact to rounding even when the in-cluster gap is at rounding
/// scale, where null-space extraction at any fixed tolerance is not.
std::vector<std::vector<Complex>> cluster_subspace(
    const RealMatrix& u, const std::vector<Complex>& lambdas,
    const std::vector<std::vector<std::size_t>>& clusters, std::size_t which);

/// Eigenpairs of U restricted to the (1- or 2-dimensional) invariant subspace
/// spanned by `basis`: diagonalizes the skew-Hermitian restriction in closed
/// form, so the returned pairs are true eigenpairs of U to rounding accuracy
/// even when the cluster's roots cannot be separated from coefficients.
std::vector<std::pair<Complex, std::vector<Complex>>> cluster_eigenpairs(
    const RealMatrix& u, const std::vector<std::vector<Complex>>& basis);

}  // namespace skeweig
