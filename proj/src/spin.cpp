#include "skeweig/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "skeweig/eigen.hpp"

namespace skeweig {

namespace {

constexpr double kDegenerateTol = 1e-12;

Multivector rotor_of_angle(const AreaElement& plane, double theta) {
    return Multivector::scalar(plane.dim, std::cos(theta)) + plane.bivector * std::sin(theta);
}

double max_component_diff(const SpinorComponents& a, const SpinorComponents& b) {
    double m = 0.0;
    for (std::size_t k = 0; k < a.components.size(); ++k)
        m = std::max(m, (a.components[k] - b.components[k]).max_abs());
    return m;
}

std::string usable_choices(const AntisymParams& p, int excluded) {
    const double lead[3] = {1.0 - p.a() * p.a(), 1.0 - p.b() * p.b(), 1.0 - p.c() * p.c()};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (i + 1 == excluded || lead[i] <= kDegenerateTol) continue;
        if (!s.empty()) s += ", ";
        s += std::to_string(i + 1);
    }
    return s;
}

}  // namespace

AreaElement area_element(const AntisymParams& p) {
    switch (p.dim()) {
        case 2:
            return {2, Multivector::blade(2, 0b11, 1.0)};
        case 3: {
            Multivector i(3);
            i[0b110] = p.a();   // i1 = sigma2 sigma3
            i[0b101] = -p.b();  // i2 = sigma3 sigma1 = -sigma1 sigma3
            i[0b011] = p.c();   // i3 = sigma1 sigma2
            return {3, i};
        }
        default:
            throw std::invalid_argument(
                "area_element: no plane interpretation is implemented in 4D");
    }
}

Multivector project_onto_plane(const Multivector& v, const AreaElement& plane) {
    const Multivector contracted = left_contract(v, plane.bivector);
    return grade_project(contracted * -plane.bivector, 1);  // i^{-1} = -i
}

SpinorComponents ga_eigenspinor(const AntisymParams& p, int which, int z_choice) {
    if (which != 1 && which != 2) throw std::invalid_argument("ga_eigenspinor: which must be 1 or 2");
    const AreaElement plane = area_element(p);

    SpinorComponents x1;
    if (p.dim() == 2) {
        x1.components.push_back(Multivector::scalar(2, 1.0));
        x1.components.push_back(-plane.bivector);
    } else {
        const int form = (z_choice >= 1 && z_choice <= 3) ? z_choice : default_representation(p);
        const std::vector<Complex> xc = eigvec3_form(p, form);
        if (std::fabs(xc[form - 1].real()) < kDegenerateTol)
            throw std::domain_error("ga_eigenspinor: representation " + std::to_string(form) +
                                    " is degenerate for these parameters; use z_choice in {" +
                                    usable_choices(p, form) + "}");
        for (const Complex& comp : xc)
            x1.components.push_back(Multivector::scalar(3, comp.real()) +
                                    plane.bivector * comp.imag());
    }
    if (which == 1) return x1;
    SpinorComponents x2;
    for (const Multivector& comp : x1.components) x2.components.push_back(reverse(comp));
    return x2;
}

SpinorFactorization factorize(const AntisymParams& p, int z_choice) {
    const AreaElement plane = area_element(p);
    const int choice = (p.dim() == 2)                     ? 1
                       : (z_choice >= 1 && z_choice <= 3) ? z_choice
                                                          : default_representation(p);

    std::vector<Multivector> frame;
    for (int k = 0; k < p.dim(); ++k)
        frame.push_back(project_onto_plane(Multivector::basis_vector(p.dim(), k), plane));

    const Multivector& z = frame[choice - 1];
    const double z_sq = (z * z).scalar_part();
    if (std::fabs(z_sq) <= kDegenerateTol)
        throw std::domain_error("factorize: projected reference vector " + std::to_string(choice) +
                                " is null for these parameters; use z_choice in {" +
                                usable_choices(p, choice) + "}");

    SpinorFactorization f{p, choice, z, frame, {}};
    for (const Multivector& n : frame) f.components.components.push_back(n * z);
    return f;
}

Multivector representation_rotor(const SpinorFactorization& from, const SpinorFactorization& to) {
    if (from.params.dim() != to.params.dim() || from.params.values() != to.params.values())
        throw std::invalid_argument("representation_rotor: factorizations have different parameters");
    return vector_inverse(from.z) * to.z;
}

SpinorComponents apply_eigenvalue(const Multivector& rotor, const SpinorComponents& s, Side side) {
    const Multivector rest = rotor - grade_project(rotor, 0) - grade_project(rotor, 2);
    if (rest.max_abs() > 1e-12)
        throw std::invalid_argument("apply_eigenvalue: rotor is not of scalar+bivector grade");
    SpinorComponents out;
    for (const Multivector& comp : s.components)
        out.components.push_back(side == Side::left ? rotor * comp : comp * rotor);
    return out;
}

FrameRotation rotate_frame(const SpinorFactorization& f, RotationAngle theta) {
    const AreaElement plane = area_element(f.params);
    const Multivector lc1 = rotor_of_angle(plane, theta.radians());

    FrameRotation out{f, {}, 0.0};
    out.rotated.frame.clear();
    out.rotated.components.components.clear();

    // Matrix route: C(-kU) rotates by +theta about the axis, so its transpose
    // realizes the -theta frame rotation.
    const RealMatrix c = cayley_definitional(build_U(f.params), k_of_theta(theta));
    const RealMatrix r_minus = c.transposed();

    for (const Multivector& n : f.frame) {
        Multivector rotated = grade_project(lc1 * n, 1);
        const std::vector<double> by_matrix = r_minus.apply(n.vector_coords());
        const std::vector<double> by_rotor = rotated.vector_coords();
        for (std::size_t i = 0; i < by_matrix.size(); ++i)
            out.path_deviation = std::max(out.path_deviation, std::fabs(by_matrix[i] - by_rotor[i]));
        out.matrix_path.push_back(by_matrix);
        out.rotated.frame.push_back(std::move(rotated));
    }
    for (const Multivector& n : out.rotated.frame)
        out.rotated.components.components.push_back(n * f.z);
    return out;
}

RealInterpretationReport verify_real_interpretation(const AntisymParams& p, RotationAngle theta) {
    RealInterpretationReport report;
    auto add = [&report](const std::string& name, double dev, double tol) {
        report.checks.push_back({name, dev, tol, dev <= tol});
        report.max_deviation = std::max(report.max_deviation, dev);
    };

    const AreaElement plane = area_element(p);
    const SpinorFactorization f = factorize(p);
    const Multivector lc1 = rotor_of_angle(plane, theta.radians());
    const Multivector lc2 = reverse(lc1);

    // (1) One-sided eigenvalue action is the -theta rotation of the frame.
    const FrameRotation rot = rotate_frame(f, theta);
    const SpinorComponents lhs1 = apply_eigenvalue(lc1, f.components, Side::left);
    add("one_sided_action_matches_rotated_frame",
        max_component_diff(lhs1, rot.rotated.components), 1e-10);
    add("one_sided_vs_matrix_rotation", rot.path_deviation, 1e-10);

    // (2) Transfer identity: lc2 (z n_k) = z (lc1 n_k).
    SpinorComponents x2;
    for (const Multivector& comp : f.components.components) x2.components.push_back(reverse(comp));
    const SpinorComponents lhs2 = apply_eigenvalue(lc2, x2, Side::left);
    double dev2 = 0.0;
    for (std::size_t k = 0; k < f.frame.size(); ++k) {
        const Multivector rhs = f.z * grade_project(lc1 * f.frame[k], 1);
        dev2 = std::max(dev2, (lhs2.components[k] - rhs).max_abs());
    }
    add("left_right_transfer_identity", dev2, 1e-12);

    // (3) theta = pi/2 reproduces the pure area-element eigenvalue action.
    const RotationAngle quarter(1.5707963267948966);
    const Multivector lc_quarter = rotor_of_angle(plane, quarter.radians());
    double dev3 = (lc_quarter - plane.bivector).max_abs();
    const SpinorComponents via_rotor =
        rotate_frame(f, quarter).rotated.components;
    const SpinorComponents via_bivector = apply_eigenvalue(plane.bivector, f.components, Side::left);
    dev3 = std::max(dev3, max_component_diff(via_rotor, via_bivector));
    add("quarter_turn_pure_bivector_action", dev3, 1e-12);

    // (4) Representation transition x1(z') = x1(z) R for usable choices.
    if (p.dim() == 3) {
        double dev4 = 0.0;
        for (int zc = 1; zc <= 3; ++zc) {
            if (zc == f.z_choice) continue;
            const double lead = 1.0 - p.values()[zc - 1] * p.values()[zc - 1];
            if (lead <= 1e-9) continue;
            const SpinorFactorization g = factorize(p, zc);
            const Multivector rotor = representation_rotor(f, g);
            const SpinorComponents moved = apply_eigenvalue(rotor, f.components, Side::right);
            dev4 = std::max(dev4, max_component_diff(moved, g.components));
        }
        add("representation_rotor_transition", dev4, 1e-10);
    }

    // (5) z commutes through the plane: z lc = reverse(lc) z.
    const double dev5 = (f.z * lc1 - lc2 * f.z).max_abs();
    add("plane_commutation", dev5, 1e-12);

    // (6) Rotation preserves the frame metric.
    double dev6 = 0.0;
    for (std::size_t i = 0; i < f.frame.size(); ++i)
        for (std::size_t j = i; j < f.frame.size(); ++j) {
            const double before = (f.frame[i] * f.frame[j]).scalar_part();
            const double after =
                (rot.rotated.frame[i] * rot.rotated.frame[j]).scalar_part();
            dev6 = std::max(dev6, std::fabs(before - after));
        }
    add("frame_metric_preserved", dev6, 1e-12);

    report.ok = true;
    for (const CheckResult& c : report.checks) report.ok = report.ok && c.pass;
    return report;
}

}  // namespace skeweig
