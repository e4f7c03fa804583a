#include "skeweig/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "skeweig/cayley.hpp"
#include "skeweig/eigen.hpp"
#include "skeweig/oracle.hpp"
#include "skeweig/spin.hpp"

namespace skeweig {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = 3.14159265358979323846;

struct Acc {
    const std::vector<SweepCheck>* checks;
    std::vector<double> dev;

    explicit Acc(const std::vector<SweepCheck>& c) : checks(&c), dev(c.size(), 0.0) {}

    void note(const std::string& name, double d) {
        for (std::size_t i = 0; i < checks->size(); ++i)
            if ((*checks)[i].name == name) {
                dev[i] = std::max(dev[i], d);
                return;
            }
        throw std::logic_error("sweep: unknown check " + name);
    }
};

double multiset_match(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    // Greedy nearest matching: near-ties may order differently across the
    // two routes, so positional comparison would report a spurious gap.
    std::vector<bool> used(b.size(), false);
    double worst = 0.0;
    for (const Complex& x : a) {
        int best = -1;
        double best_d = 0.0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - b[j]);
            if (best < 0 || d < best_d) {
                best = static_cast<int>(j);
                best_d = d;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

void eigen_checks(Acc& acc, const AntisymParams& p, const RealMatrix& u) {
    const std::vector<Complex> lambdas = eigenvalues(p);
    const EigenSystem sys = eigenvectors(p);

    double res = 0.0;
    for (const EigenPair& pair : sys.pairs) res = std::max(res, pair.residual);
    acc.note("eig_residual", res);
    acc.note("char_poly_residual", poly_residual(char_poly(p), lambdas));

    Complex sum(0.0, 0.0);
    for (Complex l : lambdas) sum += l;
    acc.note("eig_conjugate_sum", std::abs(sum));

    const EigenSystem ora = oracle_eigen(u);
    std::vector<Complex> ora_vals;
    for (const EigenPair& pair : ora.pairs) ora_vals.push_back(pair.value);
    acc.note("oracle_eigenvalue_match", multiset_match(lambdas, ora_vals));
}

void cayley_checks(Acc& acc, const AntisymParams& p, const RealMatrix& u, double theta) {
    const RotationAngle angle(theta);
    const double k = k_of_theta(angle);

    const RealMatrix c = cayley_definitional(u, k);
    const RotationReport props = rotation_properties(c);
    acc.note("cayley_orthogonality", props.orthogonality_defect);
    acc.note("cayley_determinant", std::fabs(props.determinant - 1.0));

    const EigenSystem sys = eigenvectors(p);
    double consistency = 0.0, modulus = 0.0;
    for (const EigenPair& pair : sys.pairs) {
        const Complex lc = cayley_eigenvalue_map(pair.value, k, p);
        std::vector<Complex> lhs = c.apply(pair.vector);
        double dev = 0.0;
        for (std::size_t i = 0; i < lhs.size(); ++i)
            dev = std::max(dev, std::abs(lhs[i] - lc * pair.vector[i]));
        consistency = std::max(consistency, dev);
        modulus = std::max(modulus, std::fabs(std::abs(lc) - 1.0));
    }
    acc.note("eigmap_consistency", consistency);
    acc.note("eigmap_unit_modulus", modulus);

    if (p.dim() <= 3) {
        acc.note("cayley_closed_vs_definitional", cayley_closed_form(p, angle).discrepancy);
    } else {
        acc.note("c4_squared_coupling_vs_definitional",
                 cayley_closed_form(p, angle, Cayley4Denominator::squared_coupling).discrepancy);
        acc.note("c4_linear_coupling_discrepancy",
                 cayley_closed_form(p, angle, Cayley4Denominator::linear_coupling).discrepancy);
    }

    if (p.dim() == 2) {
        RealMatrix trig(2);
        trig(0, 0) = std::cos(theta);
        trig(0, 1) = -std::sin(theta);
        trig(1, 0) = std::sin(theta);
        trig(1, 1) = std::cos(theta);
        acc.note("cayley2_trig_match",
                 max_abs_diff(cayley_closed_form(p, angle).matrix, trig));
        const RealMatrix half1 = cayley_definitional(u, k_of_theta(RotationAngle(theta / 2)));
        acc.note("cayley2_composition", max_abs_diff(half1 * half1, c));
    }

    if (p.dim() == 3) {
        const std::vector<double> axis{p.a(), p.b(), p.c()};
        const std::vector<double> mapped = c.apply(axis);
        double dev = 0.0;
        for (int i = 0; i < 3; ++i) dev = std::max(dev, std::fabs(mapped[i] - axis[i]));
        acc.note("axis_invariance", dev);
        acc.note("lambda_c3_exact",
                 std::abs(cayley_eigenvalue_map(Complex(0.0, 0.0), k, p) - Complex(1.0, 0.0)));
    }
}

void dim3_checks(Acc& acc, const AntisymParams& p, const RealMatrix& u) {
    const std::vector<double> x3{p.a(), p.b(), p.c()};
    const std::vector<double> ux3 = u.apply(x3);
    acc.note("x3_annihilation",
             std::max({std::fabs(ux3[0]), std::fabs(ux3[1]), std::fabs(ux3[2])}));

    // Pairwise collinearity of the equivalent closed forms via 2x2 minors.
    double worst = 0.0;
    for (int f1 = 1; f1 <= 3; ++f1)
        for (int f2 = f1 + 1; f2 <= 3; ++f2) {
            const std::vector<Complex> x = eigvec3_form(p, f1);
            const std::vector<Complex> y = eigvec3_form(p, f2);
            double nx = 0.0, ny = 0.0;
            for (int i = 0; i < 3; ++i) {
                nx = std::max(nx, std::abs(x[i]));
                ny = std::max(ny, std::abs(y[i]));
            }
            if (nx < 1e-12 || ny < 1e-12) continue;  // degenerate form, exempt
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    worst = std::max(worst, std::abs(x[i] * y[j] - x[j] * y[i]) / (nx * ny));
        }
    acc.note("representation_collinearity", worst);
}

void dim4_checks(Acc& acc, const AntisymParams& p, const RealMatrix& u) {
    const double q = p.uv();
    const RealMatrix u2 = u * u;
    const RealMatrix lhs = u2 * u2 + u2 + RealMatrix::identity(4) * (q * q);
    acc.note("cayley_hamilton", lhs.max_abs());
}

void spin_checks(Acc& acc, const AntisymParams& p, double theta) {
    const RealInterpretationReport report = verify_real_interpretation(p, RotationAngle(theta));
    for (const CheckResult& c : report.checks) acc.note(c.name, c.deviation);
}

std::vector<SweepCheck> make_checks(int dim) {
    std::vector<SweepCheck> checks{
        {"eig_residual", dim == 2 ? 1e-15 : (dim == 3 ? 1e-10 : 1e-9)},
        {"char_poly_residual", 1e-10},
        {"eig_conjugate_sum", 1e-12},
        // 4D sweeps include the u.v = 0 and ±1/2 families, where locating a
        // (near-)double root from polynomial coefficients is sqrt(eps)-limited
        // on both routes; generic draws stay at 1e-10 (see the unit suite).
        {"oracle_eigenvalue_match", dim == 4 ? 2e-7 : 1e-10},
        {"cayley_orthogonality", 1e-10},
        {"cayley_determinant", 1e-10},
        {"eigmap_consistency", 1e-9},
        // checking |lambda_c| = 1 for the quartic map costs ~eps k^2 in
        // doubles; random theta reaches k ~ 200, so 4D gets headroom while
        // the acceptance gate pins 1e-12 on a well-conditioned angle set
        {"eigmap_unit_modulus", dim == 4 ? 1e-11 : 1e-12},
    };
    if (dim <= 3) checks.push_back({"cayley_closed_vs_definitional", 1e-10});
    if (dim == 2) {
        checks.push_back({"cayley2_trig_match", 1e-12});
        checks.push_back({"cayley2_composition", 1e-10});
    }
    if (dim == 3) {
        checks.push_back({"x3_annihilation", 1e-14});
        checks.push_back({"representation_collinearity", 1e-9});
        checks.push_back({"axis_invariance", 1e-12});
        checks.push_back({"lambda_c3_exact", 0.0});
    }
    if (dim <= 3) {
        checks.push_back({"one_sided_action_matches_rotated_frame", 1e-10});
        checks.push_back({"one_sided_vs_matrix_rotation", 1e-10});
        checks.push_back({"left_right_transfer_identity", 1e-12});
        checks.push_back({"quarter_turn_pure_bivector_action", 1e-12});
        if (dim == 3) checks.push_back({"representation_rotor_transition", 1e-10});
        checks.push_back({"plane_commutation", 1e-12});
        checks.push_back({"frame_metric_preserved", 1e-12});
    }
    if (dim == 4) {
        checks.push_back({"cayley_hamilton", 1e-12});
        checks.push_back({"c4_squared_coupling_vs_definitional", 1e-10});
        checks.push_back({"c4_linear_coupling_discrepancy", kInf});
    }
    return checks;
}

}  // namespace

const std::vector<SweepCheck>& sweep_checks(int dim) {
    static const std::vector<SweepCheck> d2 = make_checks(2);
    static const std::vector<SweepCheck> d3 = make_checks(3);
    static const std::vector<SweepCheck> d4 = make_checks(4);
    switch (dim) {
        case 2: return d2;
        case 3: return d3;
        case 4: return d4;
        default: throw std::invalid_argument("sweep dimension must be 2, 3 or 4");
    }
}

AntisymParams sweep_draw(int dim, long index, std::uint64_t seed) {
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(index + 1)));
    if (dim == 4) {
        switch (index % 10) {
            case 7: return AntisymParams::random4_orthogonal(rng);
            case 8: return AntisymParams::random4_parallel(rng, +1);
            case 9: return AntisymParams::random4_parallel(rng, -1);
            default: break;
        }
    }
    return AntisymParams::random(dim, rng);
}

std::vector<double> sweep_sample(int dim, const AntisymParams& p,
                                 const std::vector<double>& thetas) {
    Acc acc(sweep_checks(dim));
    const RealMatrix u = build_U(p);

    eigen_checks(acc, p, u);
    if (dim == 3) dim3_checks(acc, p, u);
    if (dim == 4) dim4_checks(acc, p, u);
    for (double theta : thetas) {
        cayley_checks(acc, p, u, theta);
        if (dim <= 3) spin_checks(acc, p, theta);
    }
    return acc.dev;
}

namespace {

std::vector<double> sample_thetas(const SweepConfig& cfg, long index) {
    std::vector<double> thetas = cfg.thetas;
    Rng rng(cfg.seed ^ (0xD1B54A32D192ED03ULL * static_cast<std::uint64_t>(index + 1)));
    for (int i = 0; i < cfg.random_thetas; ++i) thetas.push_back(rng.uniform(-kPi + 0.01, kPi - 0.01));
    if (thetas.empty()) thetas.push_back(kPi / 3.0);
    return thetas;
}

SweepOutcome reduce(const SweepConfig& cfg, const std::vector<std::vector<double>>& per_sample,
                    const std::vector<std::string>& errors) {
    for (long s = 0; s < cfg.samples; ++s)
        if (!errors[s].empty())
            throw std::runtime_error("sweep sample " + std::to_string(s) + ": " + errors[s]);

    SweepOutcome out;
    out.config = cfg;
    out.checks = sweep_checks(cfg.dim);
    out.stats.assign(out.checks.size(), SweepStat{});
    for (long s = 0; s < cfg.samples; ++s)
        for (std::size_t c = 0; c < out.checks.size(); ++c)
            if (per_sample[s][c] > out.stats[c].max_deviation) {
                out.stats[c].max_deviation = per_sample[s][c];
                out.stats[c].worst_sample = s;
            }

    out.ok = true;
    for (std::size_t c = 0; c < out.checks.size(); ++c) {
        if (out.checks[c].tolerance == kInf) continue;
        out.max_deviation = std::max(out.max_deviation, out.stats[c].max_deviation);
        out.ok = out.ok && out.stats[c].max_deviation <= out.checks[c].tolerance;
    }
    return out;
}

}  // namespace

SweepOutcome run_sweep_serial(const SweepConfig& cfg) {
    std::vector<std::vector<double>> per_sample(cfg.samples);
    std::vector<std::string> errors(cfg.samples);
    for (long s = 0; s < cfg.samples; ++s) {
        try {
            per_sample[s] = sweep_sample(cfg.dim, sweep_draw(cfg.dim, s, cfg.seed),
                                         sample_thetas(cfg, s));
        } catch (const std::exception& e) {
            errors[s] = e.what();
        }
    }
    return reduce(cfg, per_sample, errors);
}

SweepOutcome run_sweep_parallel(const SweepConfig& cfg) {
    std::vector<std::vector<double>> per_sample(cfg.samples);
    std::vector<std::string> errors(cfg.samples);
#pragma omp parallel for schedule(dynamic, 8)
    for (long s = 0; s < cfg.samples; ++s) {
        try {
            per_sample[s] = sweep_sample(cfg.dim, sweep_draw(cfg.dim, s, cfg.seed),
                                         sample_thetas(cfg, s));
        } catch (const std::exception& e) {
            errors[s] = e.what();
        }
    }
    return reduce(cfg, per_sample, errors);
}

}  // namespace skeweig
