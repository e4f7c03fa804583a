#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>

#include "skeweig/rng.hpp"
#include "skeweig/spin.hpp"

using namespace skeweig;

namespace {

constexpr double kPi = 3.14159265358979323846;

Multivector sigma(int dim, int k) { return Multivector::basis_vector(dim, k - 1); }

}  // namespace

TEST_CASE("area element") {
    const AreaElement i2 = area_element(AntisymParams::dim2());
    CHECK((i2.bivector - Multivector::blade(2, 0b11, 1.0)).max_abs() == 0.0);
    CHECK(std::fabs((i2.bivector * i2.bivector).scalar_part() + 1.0) == 0.0);

    const AreaElement iz = area_element(AntisymParams::dim3(0, 0, 1));
    CHECK((iz.bivector - Multivector::blade(3, 0b011, 1.0)).max_abs() == 0.0);

    const double s = 1.0 / std::sqrt(3.0);
    const AreaElement idiag = area_element(AntisymParams::dim3(s, s, s));
    const Multivector sq = idiag.bivector * idiag.bivector;
    CHECK(std::fabs(sq.scalar_part() + 1.0) < 1e-15);
    CHECK(sq.off_grade(0) < 1e-15);

    Rng rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const AreaElement i = area_element(AntisymParams::random(3, rng));
        CHECK(std::fabs((i.bivector * i.bivector).scalar_part() + 1.0) <= 1e-12);
    }

    CHECK_THROWS_AS(area_element(AntisymParams::random(4, rng)), std::invalid_argument);
}

TEST_CASE("projection onto the plane") {
    Rng rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const double a = p.a(), b = p.b(), c = p.c();
        const AreaElement plane = area_element(p);

        // sigma1 projects to (1-a^2) s1 - ab s2 - ac s3
        const Multivector proj = project_onto_plane(sigma(3, 1), plane);
        const Multivector expect =
            Multivector::from_vector({1.0 - a * a, -a * b, -a * c});
        CHECK((proj - expect).max_abs() <= 1e-15);

        // idempotent
        CHECK((project_onto_plane(proj, plane) - proj).max_abs() <= 1e-12);

        // annihilates the axis
        const Multivector axis = Multivector::from_vector({a, b, c});
        CHECK(project_onto_plane(axis, plane).max_abs() <= 1e-12);
    }

    // 2D: projection is the identity on the whole space
    const AreaElement i2 = area_element(AntisymParams::dim2());
    CHECK((project_onto_plane(sigma(2, 1), i2) - sigma(2, 1)).max_abs() == 0.0);
}

TEST_CASE("eigenspinor components in 2D") {
    const SpinorComponents x1 = ga_eigenspinor(AntisymParams::dim2(), 1);
    REQUIRE(x1.components.size() == 2);
    CHECK((x1.components[0] - Multivector::scalar(2, 1.0)).max_abs() == 0.0);
    CHECK((x1.components[1] + Multivector::blade(2, 0b11, 1.0)).max_abs() == 0.0);
    // -i = sigma2 sigma1
    CHECK((x1.components[1] - sigma(2, 2) * sigma(2, 1)).max_abs() == 0.0);

    const SpinorComponents x2 = ga_eigenspinor(AntisymParams::dim2(), 2);
    for (int k = 0; k < 2; ++k)
        CHECK((x2.components[k] - reverse(x1.components[k])).max_abs() == 0.0);
}

TEST_CASE("eigenspinor components in 3D follow the closed form") {
    Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const double a = p.a(), b = p.b(), c = p.c();
        const Multivector i = area_element(p).bivector;

        const SpinorComponents x1 = ga_eigenspinor(p, 1, 1);
        CHECK((x1.components[0] - Multivector::scalar(3, 1.0 - a * a)).max_abs() <= 1e-15);
        CHECK((x1.components[1] - (Multivector::scalar(3, -a * b) + i * -c)).max_abs() <= 1e-15);
        CHECK((x1.components[2] - (Multivector::scalar(3, -a * c) + i * b)).max_abs() <= 1e-15);

        const SpinorComponents x2 = ga_eigenspinor(p, 2, 1);
        for (int k = 0; k < 3; ++k) {
            CHECK((x2.components[k] - reverse(x1.components[k])).max_abs() == 0.0);
            // scalar+bivector grade only
            const Multivector rest = x1.components[k] - grade_project(x1.components[k], 0) -
                                     grade_project(x1.components[k], 2);
            CHECK(rest.max_abs() <= 1e-12);
        }
    }

    CHECK_THROWS_AS(ga_eigenspinor(AntisymParams::dim3(1, 0, 0), 1, 1), std::domain_error);
    try {
        ga_eigenspinor(AntisymParams::dim3(1, 0, 0), 1, 1);
    } catch (const std::domain_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("2, 3") != std::string::npos);  // names the usable choices
    }
}

TEST_CASE("factorization in 2D") {
    const SpinorFactorization f = factorize(AntisymParams::dim2());
    CHECK((f.z - sigma(2, 1)).max_abs() == 0.0);
    REQUIRE(f.frame.size() == 2);
    CHECK((f.frame[0] - sigma(2, 1)).max_abs() == 0.0);
    CHECK((f.frame[1] - sigma(2, 2)).max_abs() == 0.0);
    CHECK((f.components.components[0] - Multivector::scalar(2, 1.0)).max_abs() == 0.0);
    CHECK((f.components.components[1] + Multivector::blade(2, 0b11, 1.0)).max_abs() == 0.0);
}

TEST_CASE("factorization at the c = 1 pole") {
    const SpinorFactorization f = factorize(AntisymParams::dim3(0, 0, 1), 1);
    CHECK((f.z - sigma(3, 1)).max_abs() == 0.0);
    CHECK((f.frame[0] - sigma(3, 1)).max_abs() == 0.0);
    CHECK((f.frame[1] - sigma(3, 2)).max_abs() == 0.0);
    CHECK(f.frame[2].max_abs() == 0.0);  // sigma3 is the axis, projects away
    CHECK((f.components.components[0] - Multivector::scalar(3, 1.0)).max_abs() == 0.0);
    CHECK((f.components.components[1] - sigma(3, 2) * sigma(3, 1)).max_abs() == 0.0);
    CHECK(f.components.components[2].max_abs() == 0.0);
}

TEST_CASE("factorization reconstructs the eigenspinor for every usable choice") {
    Rng rng(54);
    for (int trial = 0; trial < 500; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        for (int zc = 1; zc <= 3; ++zc) {
            const double lead = 1.0 - p.values()[zc - 1] * p.values()[zc - 1];
            if (lead <= 1e-9) continue;
            const SpinorFactorization f = factorize(p, zc);
            const SpinorComponents spinor = ga_eigenspinor(p, 1, zc);
            for (int k = 0; k < 3; ++k)
                CHECK((f.components.components[k] - spinor.components[k]).max_abs() <= 1e-12);

            // z is fixed by plane projection
            const AreaElement plane = area_element(p);
            CHECK((project_onto_plane(f.z, plane) - f.z).max_abs() <= 1e-10);
        }
    }

    CHECK_THROWS_AS(factorize(AntisymParams::dim3(1, 0, 0), 1), std::domain_error);
}

TEST_CASE("representation rotor moves between factorizations") {
    const AntisymParams pole = AntisymParams::dim3(0, 0, 1);
    const SpinorFactorization f1 = factorize(pole, 1);
    const SpinorFactorization f2 = factorize(pole, 2);

    // same factorization: rotor is 1
    const Multivector r_id = representation_rotor(f1, f1);
    CHECK((r_id - Multivector::scalar(3, 1.0)).max_abs() == 0.0);

    // z = s1, z' = s2: rotor is s1 s2 = i3
    const Multivector r12 = representation_rotor(f1, f2);
    CHECK((r12 - Multivector::blade(3, 0b011, 1.0)).max_abs() == 0.0);

    Rng rng(55);
    for (int trial = 0; trial < 400; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        for (int zc = 1; zc <= 3; ++zc)
            for (int zc2 = 1; zc2 <= 3; ++zc2) {
                const double l1 = 1.0 - p.values()[zc - 1] * p.values()[zc - 1];
                const double l2 = 1.0 - p.values()[zc2 - 1] * p.values()[zc2 - 1];
                if (l1 <= 1e-9 || l2 <= 1e-9 || zc == zc2) continue;
                const SpinorFactorization a = factorize(p, zc);
                const SpinorFactorization b = factorize(p, zc2);
                const Multivector rotor = representation_rotor(a, b);
                const SpinorComponents moved = apply_eigenvalue(rotor, a.components, Side::right);
                for (int k = 0; k < 3; ++k)
                    CHECK((moved.components[k] - b.components.components[k]).max_abs() <= 1e-10);
            }
    }

    const AntisymParams other = AntisymParams::dim3(0, 1, 0);
    CHECK_THROWS_AS(representation_rotor(f1, factorize(other, 1)), std::invalid_argument);
}

TEST_CASE("one-sided eigenvalue action in 2D is the quarter turn") {
    const AntisymParams p = AntisymParams::dim2();
    const Multivector i = area_element(p).bivector;
    const SpinorComponents x1 = ga_eigenspinor(p, 1);

    const SpinorComponents turned = apply_eigenvalue(i, x1, Side::left);
    // (1, -i) -> (i, 1), i.e. ((-s2) s1, s1 s1)
    CHECK((turned.components[0] - (-sigma(2, 2)) * sigma(2, 1)).max_abs() == 0.0);
    CHECK((turned.components[1] - sigma(2, 1) * sigma(2, 1)).max_abs() == 0.0);

    // identity rotor leaves everything alone
    const SpinorComponents same =
        apply_eigenvalue(Multivector::scalar(2, 1.0), x1, Side::left);
    for (int k = 0; k < 2; ++k) CHECK((same.components[k] - x1.components[k]).max_abs() == 0.0);

    CHECK_THROWS_AS(apply_eigenvalue(sigma(2, 1), x1, Side::left), std::invalid_argument);
}

TEST_CASE("frame rotation: fixed points and quarter turns") {
    const SpinorFactorization f2 = factorize(AntisymParams::dim2());
    const FrameRotation none = rotate_frame(f2, RotationAngle(0.0));
    for (int k = 0; k < 2; ++k)
        CHECK((none.rotated.frame[k] - f2.frame[k]).max_abs() == 0.0);

    // theta = pi/2 maps (s1, s2) to (-s2, s1): rotation by -90 degrees
    const FrameRotation quarter = rotate_frame(f2, RotationAngle(kPi / 2));
    CHECK((quarter.rotated.frame[0] + sigma(2, 2)).max_abs() <= 1e-15);
    CHECK((quarter.rotated.frame[1] - sigma(2, 1)).max_abs() <= 1e-15);
    CHECK(quarter.path_deviation <= 1e-10);

    // embedded 2D case in the i3 plane
    const SpinorFactorization f3 = factorize(AntisymParams::dim3(0, 0, 1), 1);
    const FrameRotation q3 = rotate_frame(f3, RotationAngle(kPi / 2));
    CHECK((q3.rotated.frame[0] + sigma(3, 2)).max_abs() <= 1e-15);
    CHECK((q3.rotated.frame[1] - sigma(3, 1)).max_abs() <= 1e-15);
    CHECK(q3.path_deviation <= 1e-10);
}

TEST_CASE("both rotation routes agree on random input") {
    Rng rng(56);
    for (int trial = 0; trial < 400; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const double theta = rng.uniform(-kPi + 0.01, kPi - 0.01);
        const FrameRotation rot = rotate_frame(factorize(p), RotationAngle(theta));
        CHECK(rot.path_deviation <= 1e-10);
    }
}

TEST_CASE("rotor commutes through plane vectors via reversal") {
    Rng rng(57);
    for (int trial = 0; trial < 300; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const AreaElement plane = area_element(p);
        const double theta = rng.uniform(-3.0, 3.0);
        const Multivector rotor = Multivector::scalar(3, std::cos(theta)) +
                                  plane.bivector * std::sin(theta);
        // any vector of the plane
        const Multivector z =
            project_onto_plane(Multivector::from_vector(rng.unit_sphere(3)), plane);
        CHECK((z * rotor - reverse(rotor) * z).max_abs() <= 1e-12);
    }
}

TEST_CASE("verify_real_interpretation passes across dimensions and angles") {
    const RealInterpretationReport flat =
        verify_real_interpretation(AntisymParams::dim2(), RotationAngle(kPi / 2));
    CHECK(flat.ok);
    CHECK(flat.max_deviation <= 1e-12);

    const RealInterpretationReport pole =
        verify_real_interpretation(AntisymParams::dim3(0, 0, 1), RotationAngle(kPi / 3));
    CHECK(pole.ok);

    Rng rng(58);
    int passed = 0;
    const double angles[] = {kPi / 2, -kPi / 2, kPi / 3, -kPi / 3, 0.1, -0.1};
    for (int trial = 0; trial < 200; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        bool all = true;
        for (double theta : angles)
            all = all && verify_real_interpretation(p, RotationAngle(theta)).ok;
        passed += all ? 1 : 0;
    }
    CHECK(passed == 200);
}

TEST_CASE("report names every check with its deviation") {
    const RealInterpretationReport rep =
        verify_real_interpretation(AntisymParams::dim3(0, 0, 1), RotationAngle(0.5));
    REQUIRE(rep.checks.size() == 7);
    for (const CheckResult& c : rep.checks) {
        CHECK(!c.name.empty());
        CHECK(c.pass);
        CHECK(c.deviation <= c.tolerance);
    }
}
