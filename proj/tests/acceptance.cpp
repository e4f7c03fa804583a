// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Each criterion aggregates named sub-checks with pinned tolerances and
// reports the worst deviation observed.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "skeweig/cayley.hpp"
#include "skeweig/eigen.hpp"
#include "skeweig/multivector.hpp"
#include "skeweig/oracle.hpp"
#include "skeweig/rng.hpp"
#include "skeweig/spin.hpp"

using namespace skeweig;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
    std::string title;
    bool pass = true;
    double worst = 0.0;
    std::string worst_check;
    std::vector<std::string> notes;

    void check(const std::string& name, double deviation, double tolerance) {
        if (deviation > worst) {
            worst = deviation;
            worst_check = name;
        }
        if (deviation > tolerance) {
            pass = false;
            notes.push_back(name + " deviated " + std::to_string(deviation) + " > " +
                            std::to_string(tolerance));
        }
    }
    void require(const std::string& name, bool ok) {
        if (!ok) {
            pass = false;
            notes.push_back(name + " failed");
        }
    }
};

std::vector<Criterion> criteria;

Criterion& begin(const std::string& title) {
    criteria.push_back(Criterion{title});
    return criteria.back();
}

double max_cnorm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

double collinearity(const std::vector<Complex>& x, const std::vector<Complex>& y) {
    const double nx = max_cnorm(x), ny = max_cnorm(y);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            worst = std::max(worst, std::abs(x[i] * y[j] - x[j] * y[i]) / (nx * ny));
    return worst;
}

// ---------------------------------------------------------------------------

void criterion1_2d_exactness() {
    Criterion& c = begin("2D exactness: eigenpairs and trig Cayley form");

    const AntisymParams p = AntisymParams::dim2();
    const EigenSystem sys = eigenvectors(p);
    c.require("eigenvalues are ±j", sys.pairs[0].value == Complex(0, 1) &&
                                        sys.pairs[1].value == Complex(0, -1));
    c.require("eigenvectors are (1, -j) and (1, j)",
              sys.pairs[0].vector == std::vector<Complex>{{1, 0}, {0, -1}} &&
              sys.pairs[1].vector == std::vector<Complex>{{1, 0}, {0, 1}});
    for (const EigenPair& pair : sys.pairs) c.check("2D residual", pair.residual, 1e-15);

    for (int i = 0; i < 100; ++i) {
        const double theta = -kPi + 0.01 + i * (2 * kPi - 0.02) / 99.0;
        const CayleyResult r = cayley_closed_form(p, RotationAngle(theta));
        RealMatrix trig(2);
        trig(0, 0) = std::cos(theta);
        trig(0, 1) = -std::sin(theta);
        trig(1, 0) = std::sin(theta);
        trig(1, 1) = std::cos(theta);
        c.check("closed form vs [[cos,-sin],[sin,cos]]", max_abs_diff(r.matrix, trig), 1e-12);
    }
}

void criterion2_3d_consistency() {
    Criterion& c = begin("3D consistency over 1000 random parameter sets");
    Rng rng(1001);
    for (int trial = 0; trial < 1000; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const RealMatrix u = build_U(p);

        const std::vector<double> x3{p.a(), p.b(), p.c()};
        const auto ux3 = u.apply(x3);
        c.check("U x3 = 0", std::max({std::fabs(ux3[0]), std::fabs(ux3[1]), std::fabs(ux3[2])}),
                1e-14);

        const EigenSystem sys = eigenvectors(p);
        for (const EigenPair& pair : sys.pairs) c.check("eigenpair residual", pair.residual, 1e-10);

        for (int f1 = 1; f1 <= 3; ++f1)
            for (int f2 = f1 + 1; f2 <= 3; ++f2)
                c.check("representation collinearity",
                        collinearity(eigvec3_form(p, f1), eigvec3_form(p, f2)), 1e-9);

        const RotationAngle theta(rng.uniform(-kPi + 0.01, kPi - 0.01));
        const CayleyResult closed = cayley_closed_form(p, theta);
        c.check("closed form vs definitional", closed.discrepancy, 1e-10);

        const RealMatrix def = cayley_definitional(u, k_of_theta(theta));
        const RotationReport props = rotation_properties(def);
        c.check("C^T C = E", props.orthogonality_defect, 1e-10);
        c.check("det C = 1", std::fabs(props.determinant - 1.0), 1e-10);

        const auto cx3 = def.apply(x3);
        double axis_dev = 0.0;
        for (int i = 0; i < 3; ++i) axis_dev = std::max(axis_dev, std::fabs(cx3[i] - x3[i]));
        c.check("C x3 = x3", axis_dev, 1e-12);
    }
}

void criterion3_eigenvalue_map() {
    Criterion& c = begin("eigenvalue map: C x = lambda_c x, unit modulus, lambda_c3 = 1");
    Rng rng(1002);
    const double thetas[] = {0.1,  -0.1,  kPi / 3, -kPi / 3, kPi / 2,
                             -kPi / 2, 1.9, -1.9,  2.6,      -2.6};
    for (int dim : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            AntisymParams p = AntisymParams::random(dim, rng);
            if (dim == 4 && trial % 10 == 7) p = AntisymParams::random4_orthogonal(rng);
            if (dim == 4 && trial % 10 == 8) p = AntisymParams::random4_parallel(rng, +1);
            if (dim == 4 && trial % 10 == 9) p = AntisymParams::random4_parallel(rng, -1);
            const RealMatrix u = build_U(p);
            const EigenSystem sys = eigenvectors(p);
            const double theta = thetas[trial % 10];
            const double k = k_of_theta(RotationAngle(theta));
            const RealMatrix def = cayley_definitional(u, k);

            for (const EigenPair& pair : sys.pairs) {
                const Complex lc = cayley_eigenvalue_map(pair.value, k, p);
                const auto cx = def.apply(pair.vector);
                double dev = 0.0;
                for (std::size_t i = 0; i < cx.size(); ++i)
                    dev = std::max(dev, std::abs(cx[i] - lc * pair.vector[i]));
                c.check("C x = lambda_c x", dev, 1e-9);
                c.check("|lambda_c| = 1", std::fabs(std::abs(lc) - 1.0), 1e-12);
            }
            if (dim == 3) {
                const Complex lc3 = cayley_eigenvalue_map(Complex(0, 0), k, p);
                c.require("lambda_c3 = 1 exactly", lc3 == Complex(1.0, 0.0));
            }
        }
    }
}

// Frozen Cl(4) blade sign table (result bitmask is a ^ b); hand-verified on
// sigma2 sigma1, (e12)^2, (e123)^2, (e1234)^2 and cross-checked in the unit
// suite against an independent transposition-sort oracle.
const int kSignTable[16][16] = {
    {+1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1},
    {+1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1},
    {+1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1, +1, -1},
    {+1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1},
    {+1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1, +1, +1, -1, -1},
    {+1, -1, -1, +1, -1, +1, +1, -1, +1, -1, -1, +1, -1, +1, +1, -1},
    {+1, -1, -1, +1, -1, +1, +1, -1, +1, -1, -1, +1, -1, +1, +1, -1},
    {+1, +1, -1, -1, -1, -1, +1, +1, +1, +1, -1, -1, -1, -1, +1, +1},
    {+1, +1, -1, -1, -1, -1, +1, +1, +1, +1, -1, -1, -1, -1, +1, +1},
    {+1, +1, +1, +1, -1, -1, -1, -1, +1, +1, +1, +1, -1, -1, -1, -1},
    {+1, +1, +1, +1, -1, -1, -1, -1, +1, +1, +1, +1, -1, -1, -1, -1},
    {+1, -1, +1, -1, -1, +1, -1, +1, +1, -1, +1, -1, -1, +1, -1, +1},
    {+1, -1, +1, -1, -1, +1, -1, +1, +1, -1, +1, -1, -1, +1, -1, +1}};

void criterion4_ga_kernel() {
    Criterion& c = begin("GA kernel: blade table, associativity, reversal, i^2 = -1");

    bool table_ok = true;
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = 0; b < 16; ++b) {
            const Blade r = blade_product(a, b);
            table_ok = table_ok && r.bitmask == (a ^ b) && r.sign == kSignTable[a][b];
        }
    c.require("product matches the 16x16 table", table_ok);

    Rng rng(1004);
    for (int trial = 0; trial < 1000; ++trial) {
        const int dim = 2 + trial % 3;
        Multivector a(dim), b(dim), m(dim);
        for (unsigned i = 0; i < a.size(); ++i) {
            a[i] = rng.uniform(-1, 1);
            b[i] = rng.uniform(-1, 1);
            m[i] = rng.uniform(-1, 1);
        }
        c.check("associativity", ((a * b) * m - a * (b * m)).max_abs(), 1e-12);
        c.check("reverse anti-homomorphism", (reverse(a * b) - reverse(b) * reverse(a)).max_abs(),
                1e-12);

        const auto abc = rng.unit_sphere(3);
        Multivector i(3);
        i[0b110] = abc[0];
        i[0b101] = -abc[1];
        i[0b011] = abc[2];
        const Multivector sq = i * i;
        c.check("i^2 = -1", std::max(std::fabs(sq.scalar_part() + 1.0), sq.off_grade(0)), 1e-12);
    }
}

void criterion5_real_interpretation() {
    Criterion& c = begin("real interpretation end-to-end (2D and 200 random 3D sets)");
    const double angles[] = {kPi / 2, -kPi / 2, kPi / 3, -kPi / 3, 0.1, -0.1};

    for (double theta : angles) {
        const RealInterpretationReport rep =
            verify_real_interpretation(AntisymParams::dim2(), RotationAngle(theta));
        for (const CheckResult& sub : rep.checks) c.check("2D " + sub.name, sub.deviation, sub.tolerance);
    }

    Rng rng(1005);
    int passes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        bool all = true;
        for (double theta : angles) {
            const RealInterpretationReport rep = verify_real_interpretation(p, RotationAngle(theta));
            all = all && rep.ok;
            for (const CheckResult& sub : rep.checks)
                c.check("3D " + sub.name, sub.deviation, sub.tolerance);
        }
        passes += all ? 1 : 0;
    }
    c.require("pass rate 100%", passes == 200);
}

void criterion6_4d() {
    Criterion& c = begin("4D: quartic roots, eigenpairs, Cayley-Hamilton, transform consistency");
    Rng rng(1006);
    double linear_min_offzero = 1e300, linear_max_zero = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        AntisymParams p = AntisymParams::random(4, rng);
        if (trial % 10 == 7) p = AntisymParams::random4_orthogonal(rng);
        if (trial % 10 == 8) p = AntisymParams::random4_parallel(rng, +1);
        if (trial % 10 == 9) p = AntisymParams::random4_parallel(rng, -1);
        const RealMatrix u = build_U(p);

        c.check("quartic residual", poly_residual(char_poly(p), eigenvalues(p)), 1e-10);

        const EigenSystem sys = eigenvectors(p);
        for (const EigenPair& pair : sys.pairs) c.check("U x = lambda x", pair.residual, 1e-9);

        const double q = p.uv();
        const RealMatrix u2 = u * u;
        c.check("U^4 + U^2 + (u.v)^2 E = 0",
                (u2 * u2 + u2 + RealMatrix::identity(4) * (q * q)).max_abs(), 1e-12);

        const RotationAngle theta(rng.uniform(-2.9, 2.9));
        const double k = k_of_theta(theta);
        const RealMatrix def = cayley_definitional(u, k);
        const RotationReport props = rotation_properties(def);
        c.check("definitional orthogonality", props.orthogonality_defect, 1e-10);
        c.check("definitional determinant", std::fabs(props.determinant - 1.0), 1e-10);

        for (const EigenPair& pair : sys.pairs) {
            const Complex lc = cayley_eigenvalue_map(pair.value, k, p);
            const auto cx = def.apply(pair.vector);
            double dev = 0.0;
            for (std::size_t i = 0; i < cx.size(); ++i)
                dev = std::max(dev, std::abs(cx[i] - lc * pair.vector[i]));
            c.check("lambda_cn x_n = C x_n", dev, 1e-9);
        }

        // measure the printed closed form against the definitional solve
        const double linear =
            cayley_closed_form(p, theta, Cayley4Denominator::linear_coupling).discrepancy;
        const double squared =
            cayley_closed_form(p, theta, Cayley4Denominator::squared_coupling).discrepancy;
        c.check("squared-coupling closed form vs definitional", squared, 1e-10);
        if (std::fabs(q) > 0.05 && std::fabs(theta.radians()) > 0.4)
            linear_min_offzero = std::min(linear_min_offzero, linear);
        if (std::fabs(q) < 1e-12) linear_max_zero = std::max(linear_max_zero, linear);
    }

    // documented conclusion: the linear-coupling denominator deviates from the
    // definitional transform whenever u.v != 0, and coincides when u.v = 0
    c.require("linear-coupling form deviates off the u.v = 0 family",
              linear_min_offzero > 1e-8);
    c.check("linear-coupling form on the u.v = 0 family", linear_max_zero, 1e-10);
    char note[160];
    std::snprintf(note, sizeof(note),
                  "linear-coupling discrepancy >= %.3e off-family, <= %.3e on-family",
                  linear_min_offzero, linear_max_zero);
    c.notes.push_back(note);
}

void criterion7_formula_ledger() {
    Criterion& c = begin("formula cross-check ledger: 3x3 tabulated form and 4D denominator");
    Rng rng(1007);

    double max_offdiag = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const AntisymParams p = AntisymParams::random(3, rng);
        const RotationAngle theta(rng.uniform(-3.1, 3.1));
        const RealMatrix tab = cayley3_tabulated(p, theta);
        const RealMatrix op = cayley_closed_form(p, theta).matrix;
        const double ver = 1.0 - std::cos(theta.radians());
        const double lead[3] = {1.0 - p.a() * p.a(), 1.0 - p.b() * p.b(), 1.0 - p.c() * p.c()};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                const double dev = std::fabs(tab(i, j) - op(i, j));
                if (i != j) {
                    max_offdiag = std::max(max_offdiag, dev);
                } else {
                    const double predicted = (i < 2) ? 2.0 * ver * lead[i] : ver * (lead[1] + lead[2]);
                    c.check("diagonal deviation matches the predicted pattern",
                            std::fabs(dev - predicted), 1e-10);
                }
            }
        if (std::fabs(theta.radians()) > 0.5)
            c.require("tabulated form is not orthogonal",
                      rotation_properties(tab).orthogonality_defect > 1e-2);
    }
    c.check("off-diagonal entries agree", max_offdiag, 1e-12);
    c.notes.push_back(
        "3x3 table: diagonal signs flipped on the (1-cos) term and (3,3) repeats 1-b^2; "
        "operator form verified orthogonal");

    AntisymParams p = AntisymParams::random(4, rng);
    while (std::fabs(p.uv()) < 0.2) p = AntisymParams::random(4, rng);
    const RotationAngle theta(1.0471975511965976);
    const double linear =
        cayley_closed_form(p, theta, Cayley4Denominator::linear_coupling).discrepancy;
    const double squared =
        cayley_closed_form(p, theta, Cayley4Denominator::squared_coupling).discrepancy;
    c.require("4D denominator: squared coupling matches (<=1e-12), linear deviates (>1e-4)",
              squared <= 1e-12 && linear > 1e-4);
    char note[160];
    std::snprintf(note, sizeof(note),
                  "4D closed form at u.v = %.3f: linear-coupling discrepancy %.3e, "
                  "squared-coupling discrepancy %.3e",
                  p.uv(), linear, squared);
    c.notes.push_back(note);
}

}  // namespace

int main() {
    criterion1_2d_exactness();
    criterion2_3d_consistency();
    criterion3_eigenvalue_map();
    criterion4_ga_kernel();
    criterion5_real_interpretation();
    criterion6_4d();
    criterion7_formula_ledger();

    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        std::printf("%s criterion %zu: %s (worst %.3e in %s)\n", c.pass ? "PASS" : "FAIL", i + 1,
                    c.title.c_str(), c.worst, c.worst_check.empty() ? "-" : c.worst_check.c_str());
        for (const std::string& note : c.notes) std::printf("       %s\n", note.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
