#include "skeweig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace skeweig {

namespace {

void fix_phase(std::vector<Complex>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[k])) k = i;
    if (std::abs(v[k]) == 0.0) return;
    const Complex ph = v[k] / std::abs(v[k]);
    for (Complex& x : v) x /= ph;
}

// Roots of the even characteristic polynomial of an anti-symmetric matrix,
// solved in mu = lambda^2 (all mu real, <= 0).
std::vector<Complex> roots_from_coeffs(const std::vector<double>& c, double scale) {
    const int n = static_cast<int>(c.size()) - 1;
    const double odd_tol = 1e-10 * std::max(scale, 1.0);
    std::vector<double> mu;
    switch (n) {
        case 2:
            if (std::fabs(c[1]) > odd_tol)
                throw std::runtime_error("oracle: odd coefficient nonzero for anti-symmetric U");
            mu = {-c[2]};
            break;
        case 3:
            if (std::fabs(c[1]) > odd_tol || std::fabs(c[3]) > odd_tol)
                throw std::runtime_error("oracle: odd coefficient nonzero for anti-symmetric U");
            mu = {-c[2]};
            break;
        case 4: {
            if (std::fabs(c[1]) > odd_tol || std::fabs(c[3]) > odd_tol)
                throw std::runtime_error("oracle: odd coefficient nonzero for anti-symmetric U");
            // mu^2 + c2 mu + c4; c2 >= 0 for anti-symmetric input, so the
            // stable root is -(c2 + sqrt(disc))/2.
            const double disc = std::max(c[2] * c[2] - 4.0 * c[4], 0.0);
            const double q = -0.5 * (c[2] + std::sqrt(disc));
            mu = {q, (q != 0.0) ? c[4] / q : 0.0};
            break;
        }
        default: throw std::invalid_argument("oracle supports 2x2..4x4 matrices");
    }

    std::vector<Complex> lambdas;
    for (double m : mu) {
        const double w = std::sqrt(std::max(-m, 0.0));
        lambdas.emplace_back(0.0, w);
        lambdas.emplace_back(0.0, -w);
    }
    if (n == 3) lambdas.emplace_back(0.0, 0.0);
    std::sort(lambdas.begin(), lambdas.end(), [](Complex l, Complex r) {
        const double li = std::fabs(l.imag()), ri = std::fabs(r.imag());
        if (li != ri) return li > ri;
        return l.imag() > r.imag();
    });
    return lambdas;
}

}  // namespace

std::vector<double> char_poly_of_matrix(const RealMatrix& a) {
    const int n = a.dim();
    std::vector<double> c(n + 1, 0.0);
    c[0] = 1.0;
    RealMatrix m = a;
    for (int k = 1; k <= n; ++k) {
        c[k] = -m.trace() / k;
        if (k < n) {
            RealMatrix shifted = m;
            for (int i = 0; i < n; ++i) shifted(i, i) += c[k];
            m = a * shifted;
        }
    }
    return c;
}

double poly_residual(const std::vector<double>& coeffs, const std::vector<Complex>& values) {
    double worst = 0.0;
    for (Complex x : values) {
        Complex acc(0.0, 0.0);
        for (double c : coeffs) acc = acc * x + c;
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

EigenSystem oracle_eigen(const RealMatrix& u) {
    if (u.antisymmetry_defect() > 1e-12)
        throw std::invalid_argument("oracle_eigen: matrix is not anti-symmetric");

    const std::vector<double> coeffs = char_poly_of_matrix(u);
    const std::vector<Complex> lambdas = roots_from_coeffs(coeffs, u.max_abs());

    EigenSystem sys;
    sys.dim = u.dim();
    // Root locations of (near-)multiple roots carry the usual sqrt(eps)
    // sensitivity, so cluster at 1e-7 and resolve null spaces at the same
    // tolerance; well-separated spectra are unaffected.
    const double cluster_tol = 1e-7 * (1.0 + u.max_abs());

    std::vector<int> done(lambdas.size(), 0);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> cluster{i};
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (!done[j] && std::abs(lambdas[j] - lambdas[i]) < cluster_tol) cluster.push_back(j);

        std::vector<std::vector<Complex>> rows(u.dim(), std::vector<Complex>(u.dim()));
        for (int r = 0; r < u.dim(); ++r)
            for (int col = 0; col < u.dim(); ++col)
                rows[r][col] =
                    Complex(u(r, col), 0.0) - (r == col ? lambdas[i] : Complex(0.0, 0.0));
        auto basis = complex_nullspace(std::move(rows), 1e-7);
        if (basis.size() != cluster.size())
            throw std::runtime_error("oracle_eigen: null space dimension " +
                                     std::to_string(basis.size()) + " != multiplicity " +
                                     std::to_string(cluster.size()) + " for eigenvalue imag " +
                                     std::to_string(lambdas[i].imag()));
        for (std::size_t k = 0; k < cluster.size(); ++k) {
            fix_phase(basis[k]);
            sys.pairs.push_back({lambdas[cluster[k]], basis[k], 0.0, true});
            done[cluster[k]] = 1;
        }
    }

    std::stable_sort(sys.pairs.begin(), sys.pairs.end(), [](const EigenPair& l, const EigenPair& r) {
        const double li = std::fabs(l.value.imag()), ri = std::fabs(r.value.imag());
        if (li != ri) return li > ri;
        return l.value.imag() > r.value.imag();
    });
    for (EigenPair& pair : sys.pairs) pair.residual = verify_eigenpair(u, pair.value, pair.vector);
    return sys;
}

}  // namespace skeweig
