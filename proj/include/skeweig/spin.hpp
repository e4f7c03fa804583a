#pragma once

#include <string>
#include <vector>

#include "skeweig/cayley.hpp"
#include "skeweig/multivector.hpp"

namespace skeweig {

/// Unit oriented area element of the rotation plane; squares to -1.
struct AreaElement {
    int dim = 0;
    Multivector bivector;
};

/// Eigenvector components reinterpreted as spinors: each entry is of
/// scalar+bivector grade, a geometric product of two frame vectors.
struct SpinorComponents {
    std::vector<Multivector> components;
};

/// Factorization of the eigenspinor over a reference vector z in the plane:
/// components[k] = frame[k] * z.
struct SpinorFactorization {
    AntisymParams params;
    int z_choice = 1;                 // which projected basis vector is z
    Multivector z;
    std::vector<Multivector> frame;   // projected basis (sigma_k parallel), grade 1
    SpinorComponents components;
};

enum class Side { left, right };

/// 2D: sigma1 sigma2. 3D: a sigma2 sigma3 + b sigma3 sigma1 + c sigma1 sigma2.
/// Throws for 4D (no plane interpretation is implemented there).
AreaElement area_element(const AntisymParams& p);

/// (v . i) i^{-1} with i^{-1} = -i: the component of v in the i-plane.
/// Idempotent; annihilates the rotation axis.
Multivector project_onto_plane(const Multivector& v, const AreaElement& plane);

/// Eigenvector with the imaginary unit replaced by the area element.
/// which = 1 or 2 (the second is the componentwise reverse of the first);
/// z_choice picks the 3D representation (ignored in 2D). Throws when the
/// chosen representation is degenerate, naming the usable alternatives.
SpinorComponents ga_eigenspinor(const AntisymParams& p, int which, int z_choice = 0);

/// Projects the basis onto the i-plane and factors the eigenspinor over
/// z = frame[z_choice-1]; z_choice = 0 applies the default selection rule.
SpinorFactorization factorize(const AntisymParams& p, int z_choice = 0);

/// Rotor R = z^{-1} z' carrying one representation into the other:
/// x1(z') = x1(z) R componentwise.
Multivector representation_rotor(const SpinorFactorization& from, const SpinorFactorization& to);

/// Componentwise one-sided geometric product with a scalar+bivector rotor.
SpinorComponents apply_eigenvalue(const Multivector& rotor, const SpinorComponents& s, Side side);

struct FrameRotation {
    SpinorFactorization rotated;                   // one-sided rotor action (normative)
    std::vector<std::vector<double>> matrix_path;  // Cayley-matrix route, per frame vector
    double path_deviation = 0.0;                   // max coordinate difference
};

/// Rotates the frame by -theta in the i-plane two ways: the one-sided product
/// (cos theta + i sin theta) n_k, and the transposed Cayley rotation matrix
/// applied to the coordinates. Both are returned for comparison.
FrameRotation rotate_frame(const SpinorFactorization& f, RotationAngle theta);

struct CheckResult {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct RealInterpretationReport {
    std::vector<CheckResult> checks;
    double max_deviation = 0.0;
    bool ok = false;
};

/// End-to-end consistency of the rotor reading of the eigen-system:
/// one-sided eigenvalue action = frame rotation by -theta (both routes),
/// the left/right transfer identity, the quarter-turn special case, the
/// representation-rotor transition, and plane-commutation of the rotor.
RealInterpretationReport verify_real_interpretation(const AntisymParams& p, RotationAngle theta);

}  // namespace skeweig
