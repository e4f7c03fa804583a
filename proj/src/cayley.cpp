#include "skeweig/cayley.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace skeweig {

namespace {

constexpr double kPi = 3.14159265358979323846;

RealMatrix matrix_power(const RealMatrix& u, int n) {
    RealMatrix out = RealMatrix::identity(u.dim());
    for (int i = 0; i < n; ++i) out = out * u;
    return out;
}

}  // namespace

RotationAngle::RotationAngle(double radians) : theta_(radians) {
    if (!(std::fabs(radians) < kPi - 1e-9))
        throw std::out_of_range("rotation angle must satisfy |theta| < pi - 1e-9 (k = tan(theta/2) "
                                "diverges); got " +
                                std::to_string(radians));
}

double k_of_theta(RotationAngle theta) { return std::tan(0.5 * theta.radians()); }

RealMatrix cayley_definitional(const RealMatrix& u, double k) {
    const int n = u.dim();
    const RealMatrix e = RealMatrix::identity(n);
    return solve_lu(e - u * k, e + u * k);
}

CayleyResult cayley_closed_form(const AntisymParams& p, RotationAngle theta,
                                Cayley4Denominator den) {
    const double k = k_of_theta(theta);
    const RealMatrix u = build_U(p);
    const RealMatrix e = RealMatrix::identity(u.dim());

    RealMatrix c(u.dim());
    if (p.dim() <= 3) {
        // E - 2/(1+k^2) (-kU - (-kU)^2); the 3D prefactor 1 + k^2(a^2+b^2+c^2)
        // coincides with 1 + k^2 for normalized parameters.
        const double s = 2.0 / (1.0 + k * k);
        c = e + (u * k + u * u * (k * k)) * s;
    } else {
        const double q = p.uv();
        const double coupling = (den == Cayley4Denominator::linear_coupling) ? q : q * q;
        const double d = 1.0 + k * k + coupling * std::pow(k, 4);
        const RealMatrix u2 = u * u;
        const RealMatrix u3 = u2 * u;
        const RealMatrix u4 = u3 * u;
        c = e + (u * (k * (1.0 + k * k)) + u2 * (k * k * (1.0 + k * k)) + u3 * (k * k * k) +
                 u4 * (k * k * k * k)) *
                    (2.0 / d);
    }

    CayleyResult result{c, k, CayleyMethod::closed_form, 0.0};
    result.discrepancy = max_abs_diff(c, cayley_definitional(u, k));
    return result;
}

Complex cayley_eigenvalue_map(Complex lambda, double k, const AntisymParams& p,
                              Cayley4Denominator den) {
    if (p.dim() <= 3) {
        return 1.0 + 2.0 * k * lambda * (1.0 + k * lambda) / (1.0 + k * k);
    }
    const double q = p.uv();
    const double coupling = (den == Cayley4Denominator::linear_coupling) ? q : q * q;
    const double d = 1.0 + k * k + coupling * std::pow(k, 4);
    // numerator k(1+k^2)L + k^2(1+k^2)L^2 + k^3 L^3 + k^4 L^4 in its exact
    // factored arrangement; the expanded sum cancels catastrophically for
    // large k (theta near ±pi)
    const Complex num =
        k * lambda * (1.0 + k * lambda) * (1.0 + k * k * (1.0 + lambda * lambda));
    return 1.0 + 2.0 * num / d;
}

CayleyResult cayley_eigen_map(const AntisymParams& p, RotationAngle theta) {
    const double k = k_of_theta(theta);
    const RealMatrix u = build_U(p);
    const int n = u.dim();

    // Eigenvalues within a cluster share an invariant subspace; treating the
    // cluster as a block keeps the reconstruction well conditioned even when
    // the gap is at rounding scale (u.v numerically at ±1/2 or 0).
    constexpr double kClusterTol = 1e-6;
    const std::vector<Complex> lambdas = eigenvalues(p);
    const EigenSystem sys = eigenvectors(p, 0, /*unit_norm=*/true);

    const auto clusters = cluster_eigenvalues(lambdas, kClusterTol);
    std::vector<std::vector<Complex>> acc(n, std::vector<Complex>(n, Complex(0.0, 0.0)));
    for (std::size_t t = 0; t < clusters.size(); ++t) {
        const std::size_t m = clusters[t].size();

        if (m == 1) {
            const Complex lc = cayley_eigenvalue_map(lambdas[clusters[t][0]], k, p);
            const auto& x = sys.pairs[clusters[t][0]].vector;
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) acc[r][s] += lc * x[r] * std::conj(x[s]);
            continue;
        }

        // Cayley transform of the restriction B = X^H U X on the cluster's
        // invariant subspace, an m x m solve.
        const auto basis = cluster_subspace(u, lambdas, clusters, t);
        std::vector<std::vector<Complex>> restriction(m, std::vector<Complex>(m, Complex(0, 0)));
        for (std::size_t a = 0; a < m; ++a) {
            const std::vector<Complex> ux = u.apply(basis[a]);
            for (std::size_t b = 0; b < m; ++b)
                for (int r = 0; r < n; ++r) restriction[b][a] += std::conj(basis[b][r]) * ux[r];
        }
        std::vector<std::vector<Complex>> lhs(m, std::vector<Complex>(m));
        std::vector<std::vector<Complex>> rhs(m, std::vector<Complex>(m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                lhs[a][b] = (a == b ? Complex(1, 0) : Complex(0, 0)) - k * restriction[a][b];
                rhs[a][b] = (a == b ? Complex(1, 0) : Complex(0, 0)) + k * restriction[a][b];
            }
        const std::vector<std::vector<Complex>> f = complex_solve(std::move(lhs), std::move(rhs));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                for (int r = 0; r < n; ++r)
                    for (int s = 0; s < n; ++s)
                        acc[r][s] += basis[a][r] * f[a][b] * std::conj(basis[b][s]);
    }

    RealMatrix c(n);
    double imag_defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            c(i, j) = acc[i][j].real();
            imag_defect = std::max(imag_defect, std::fabs(acc[i][j].imag()));
        }

    CayleyResult result{c, k, CayleyMethod::eigen_map, 0.0};
    result.discrepancy =
        std::max(imag_defect, max_abs_diff(c, cayley_definitional(u, k)));
    return result;
}

RotationReport rotation_properties(const RealMatrix& c) {
    RotationReport report;
    report.orthogonality_defect = max_abs_diff(c.transposed() * c, RealMatrix::identity(c.dim()));
    report.determinant = det_lu(c);
    if (c.dim() == 3) {
        auto basis = real_nullspace(c - RealMatrix::identity(3));
        if (basis.size() == 1) {
            std::vector<double>& axis = basis[0];
            int lead = 0;
            for (int i = 1; i < 3; ++i)
                if (std::fabs(axis[i]) > std::fabs(axis[lead])) lead = i;
            if (axis[lead] < 0.0)
                for (double& x : axis) x = -x;
            report.fixed_axis = axis;
        }
    }
    return report;
}

RealMatrix cayley3_tabulated(const AntisymParams& p, RotationAngle theta) {
    if (p.dim() != 3) throw std::invalid_argument("cayley3_tabulated requires 3D parameters");
    const double a = p.a(), b = p.b(), c = p.c();
    const double sin_t = std::sin(theta.radians());
    const double ver = 1.0 - std::cos(theta.radians());
    RealMatrix m(3);
    m(0, 0) = 1.0 + ver * (1.0 - a * a);
    m(0, 1) = -c * sin_t + a * b * ver;
    m(0, 2) = b * sin_t + a * c * ver;
    m(1, 0) = c * sin_t + a * b * ver;
    m(1, 1) = 1.0 + ver * (1.0 - b * b);
    m(1, 2) = -a * sin_t + b * c * ver;
    m(2, 0) = -b * sin_t + a * c * ver;
    m(2, 1) = a * sin_t + b * c * ver;
    m(2, 2) = 1.0 + ver * (1.0 - b * b);
    return m;
}

}  // namespace skeweig
