#include "skeweig/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace skeweig {

namespace {

const Complex kJ(0.0, 1.0);

double max_norm(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

void normalize2(std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& x : v) s += std::norm(x);
    s = std::sqrt(s);
    if (s > 0.0)
        for (Complex& x : v) x /= s;
}

// Deterministic phase: largest-magnitude component made real positive.
void fix_phase(std::vector<Complex>& v) {
    std::size_t k = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (std::abs(v[i]) > std::abs(v[k])) k = i;
    if (std::abs(v[k]) == 0.0) return;
    const Complex ph = v[k] / std::abs(v[k]);
    for (Complex& x : v) x /= ph;
}

}  // namespace

std::vector<std::vector<std::size_t>> cluster_eigenvalues(const std::vector<Complex>& lambdas,
                                                          double tol) {
    std::vector<std::vector<std::size_t>> clusters;
    std::vector<int> done(lambdas.size(), 0);
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (done[i]) continue;
        std::vector<std::size_t> cluster{i};
        done[i] = 1;
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (!done[j] && std::abs(lambdas[j] - lambdas[i]) < tol) {
                cluster.push_back(j);
                done[j] = 1;
            }
        clusters.push_back(std::move(cluster));
    }
    return clusters;
}

std::vector<std::vector<Complex>> cluster_subspace(
    const RealMatrix& u, const std::vector<Complex>& lambdas,
    const std::vector<std::vector<std::size_t>>& clusters, std::size_t which) {
    const int n = u.dim();
    const Complex rep = lambdas[clusters[which][0]];
    const std::size_t m = clusters[which].size();

    // prod over other clusters of (U - rep_s E)^{m_s} / (rep - rep_s)^{m_s}
    std::vector<std::vector<Complex>> proj(n, std::vector<Complex>(n, Complex(0, 0)));
    for (int r = 0; r < n; ++r) proj[r][r] = Complex(1, 0);
    for (std::size_t s = 0; s < clusters.size(); ++s) {
        if (s == which) continue;
        const Complex shift = lambdas[clusters[s][0]];
        for (std::size_t reps = 0; reps < clusters[s].size(); ++reps) {
            std::vector<std::vector<Complex>> next(n, std::vector<Complex>(n, Complex(0, 0)));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    Complex sum(0, 0);
                    for (int q = 0; q < n; ++q)
                        sum += (Complex(u(r, q), 0.0) - (r == q ? shift : Complex(0, 0))) *
                               proj[q][c];
                    next[r][c] = sum / (rep - shift);
                }
            proj = std::move(next);
        }
    }

    // column-pivoted Gram-Schmidt on the projector columns
    std::vector<std::vector<Complex>> cols(n, std::vector<Complex>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) cols[c][r] = proj[r][c];
    std::vector<std::vector<Complex>> basis;
    for (std::size_t picked = 0; picked < m; ++picked) {
        std::size_t best = 0;
        double best_norm = -1.0;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            double norm = 0.0;
            for (int r = 0; r < n; ++r) norm += std::norm(cols[c][r]);
            if (norm > best_norm) {
                best_norm = norm;
                best = c;
            }
        }
        if (best_norm < 1e-12)
            throw std::runtime_error("cluster_subspace: projector rank below multiplicity");
        std::vector<Complex> v = cols[best];
        const double inv = 1.0 / std::sqrt(best_norm);
        for (Complex& x : v) x *= inv;
        for (auto& col : cols) {
            Complex overlap(0, 0);
            for (int r = 0; r < n; ++r) overlap += std::conj(v[r]) * col[r];
            for (int r = 0; r < n; ++r) col[r] -= overlap * v[r];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::pair<Complex, std::vector<Complex>>> cluster_eigenpairs(
    const RealMatrix& u, const std::vector<std::vector<Complex>>& basis) {
    const int n = u.dim();
    const std::size_t m = basis.size();
    std::vector<std::pair<Complex, std::vector<Complex>>> out;

    if (m == 1) {
        Complex rayleigh(0, 0);
        const std::vector<Complex> ux = u.apply(basis[0]);
        for (int r = 0; r < n; ++r) rayleigh += std::conj(basis[0][r]) * ux[r];
        out.emplace_back(rayleigh, basis[0]);
        return out;
    }
    if (m != 2)
        throw std::runtime_error("cluster_eigenpairs: unexpected multiplicity " +
                                 std::to_string(m));

    // 2x2 skew-Hermitian restriction B = X^H U X, diagonalized in closed form.
    Complex b[2][2];
    for (std::size_t a = 0; a < 2; ++a) {
        const std::vector<Complex> ux = u.apply(basis[a]);
        for (std::size_t c = 0; c < 2; ++c) {
            b[c][a] = Complex(0, 0);
            for (int r = 0; r < n; ++r) b[c][a] += std::conj(basis[c][r]) * ux[r];
        }
    }
    const Complex tr = b[0][0] + b[1][1];
    const Complex det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    const Complex root = std::sqrt(tr * tr - 4.0 * det);
    const Complex l1 = 0.5 * (tr + root);
    const Complex l2 = 0.5 * (tr - root);

    Complex y1[2] = {b[0][1], l1 - b[0][0]};
    const Complex alt[2] = {l1 - b[1][1], b[1][0]};
    if (std::norm(alt[0]) + std::norm(alt[1]) > std::norm(y1[0]) + std::norm(y1[1])) {
        y1[0] = alt[0];
        y1[1] = alt[1];
    }
    double norm = std::sqrt(std::norm(y1[0]) + std::norm(y1[1]));
    if (norm < 1e-300) {  // B is (numerically) scalar: any orthonormal pair works
        y1[0] = Complex(1, 0);
        y1[1] = Complex(0, 0);
        norm = 1.0;
    }
    y1[0] /= norm;
    y1[1] /= norm;
    const Complex y2[2] = {-std::conj(y1[1]), std::conj(y1[0])};  // orthogonal complement

    for (const auto& y : {std::array<Complex, 2>{y1[0], y1[1]}, std::array<Complex, 2>{y2[0], y2[1]}}) {
        std::vector<Complex> x(n, Complex(0, 0));
        for (int r = 0; r < n; ++r) x[r] = y[0] * basis[0][r] + y[1] * basis[1][r];
        Complex rayleigh(0, 0);
        const std::vector<Complex> ux = u.apply(x);
        for (int r = 0; r < n; ++r) rayleigh += std::conj(x[r]) * ux[r];
        out.emplace_back(rayleigh, std::move(x));
    }
    return out;
}

std::vector<Complex> eigenvalues(const AntisymParams& p) {
    switch (p.dim()) {
        case 2: return {kJ, -kJ};
        case 3: return {kJ, -kJ, Complex(0.0, 0.0)};
        default: {
            const double q = p.uv();
            const double disc = 1.0 - 4.0 * q * q;
            if (disc < -1e-12)
                throw std::domain_error("|u.v| > 1/2 violates normalization (Cauchy-Schwarz)");
            const double root = std::sqrt(std::max(disc, 0.0));
            const double w_hi = std::sqrt(0.5 * (1.0 + root));
            const double w_lo = std::sqrt(std::max(0.5 * (1.0 - root), 0.0));
            std::vector<Complex> out{Complex(0.0, w_hi), Complex(0.0, -w_hi),
                                     Complex(0.0, w_lo), Complex(0.0, -w_lo)};
            // canonical order incl. ties: descending |imag|, positive first
            std::stable_sort(out.begin(), out.end(), [](Complex l, Complex r) {
                const double li = std::fabs(l.imag()), ri = std::fabs(r.imag());
                if (li != ri) return li > ri;
                return l.imag() > r.imag();
            });
            return out;
        }
    }
}

int default_representation(const AntisymParams& p) {
    const double lead[3] = {1.0 - p.a() * p.a(), 1.0 - p.b() * p.b(), 1.0 - p.c() * p.c()};
    int best = 0;
    for (int i = 1; i < 3; ++i)
        if (lead[i] > lead[best]) best = i;
    return best + 1;
}

std::vector<Complex> eigvec3_form(const AntisymParams& p, int form) {
    const double a = p.a(), b = p.b(), c = p.c();
    switch (form) {
        case 1: return {Complex(1.0 - a * a, 0.0), Complex(-a * b, -c), Complex(-a * c, b)};
        case 2: return {Complex(-a * b, c), Complex(1.0 - b * b, 0.0), Complex(-b * c, -a)};
        case 3: return {Complex(-a * c, -b), Complex(-b * c, a), Complex(1.0 - c * c, 0.0)};
        default: throw std::invalid_argument("representation must be 1, 2 or 3");
    }
}

double verify_eigenpair(const RealMatrix& u, Complex lambda, const std::vector<Complex>& x) {
    if (static_cast<int>(x.size()) != u.dim())
        throw std::invalid_argument("eigenvector length does not match matrix dimension");
    std::vector<Complex> r = u.apply(x);
    for (int i = 0; i < u.dim(); ++i) r[i] -= lambda * x[i];
    return max_norm(r);
}

EigenSystem eigenvectors(const AntisymParams& p, int z_choice, bool unit_norm) {
    const RealMatrix u = build_U(p);
    const std::vector<Complex> lambdas = eigenvalues(p);
    EigenSystem sys;
    sys.dim = p.dim();

    switch (p.dim()) {
        case 2: {
            sys.pairs.push_back({kJ, {Complex(1.0, 0.0), Complex(0.0, -1.0)}, 0.0, false});
            sys.pairs.push_back({-kJ, {Complex(1.0, 0.0), Complex(0.0, 1.0)}, 0.0, false});
            break;
        }
        case 3: {
            int form = (z_choice >= 1 && z_choice <= 3) ? z_choice : default_representation(p);
            std::vector<Complex> x1 = eigvec3_form(p, form);
            if (max_norm(x1) < 1e-12) {  // explicit choice degenerated; use the rule
                form = default_representation(p);
                x1 = eigvec3_form(p, form);
            }
            sys.representation = form;
            std::vector<Complex> x2(x1.size());
            for (std::size_t i = 0; i < x1.size(); ++i) x2[i] = std::conj(x1[i]);
            sys.pairs.push_back({kJ, x1, 0.0, false});
            sys.pairs.push_back({-kJ, x2, 0.0, false});
            sys.pairs.push_back(
                {Complex(0.0, 0.0), {Complex(p.a(), 0.0), Complex(p.b(), 0.0), Complex(p.c(), 0.0)},
                 0.0, false});
            break;
        }
        default: {
            const auto uvec = p.u();
            const auto vvec = p.v();
            const double usq = p.u_sq();
            const double q = p.uv();
            const double cross[3] = {uvec[1] * vvec[2] - uvec[2] * vvec[1],
                                     uvec[2] * vvec[0] - uvec[0] * vvec[2],
                                     uvec[0] * vvec[1] - uvec[1] * vvec[0]};
            // Repeated (or numerically fused) eigenvalues cannot be separated
            // by the coordinate representation; those clusters fall back to
            // the invariant-subspace route, which also refines the eigenvalue
            // beyond the sqrt(eps) limit of the radical formula.
            const auto clusters = cluster_eigenvalues(lambdas, 1e-9);
            for (std::size_t t = 0; t < clusters.size(); ++t) {
                bool use_closed = clusters[t].size() == 1;
                std::vector<Complex> x;
                if (use_closed) {
                    const Complex ln = lambdas[clusters[t][0]];
                    const Complex l2 = ln * ln;
                    x.assign(4, Complex(0.0, 0.0));
                    x[0] = ln * (l2 + usq);
                    for (int k = 0; k < 3; ++k)
                        x[k + 1] = l2 * vvec[k] + ln * cross[k] + q * uvec[k];
                    if (max_norm(x) < 1e-9) use_closed = false;
                }
                if (use_closed) {
                    sys.pairs.push_back({lambdas[clusters[t][0]], std::move(x), 0.0, false});
                } else {
                    const auto basis = cluster_subspace(u, lambdas, clusters, t);
                    auto refined = cluster_eigenpairs(u, basis);
                    for (auto& [value, vec] : refined) {
                        fix_phase(vec);
                        sys.pairs.push_back({value, std::move(vec), 0.0, true});
                    }
                }
            }
            // Restore the canonical ordering (clusters may have reordered).
            std::stable_sort(sys.pairs.begin(), sys.pairs.end(),
                             [](const EigenPair& l, const EigenPair& r) {
                                 const double li = std::fabs(l.value.imag());
                                 const double ri = std::fabs(r.value.imag());
                                 if (li != ri) return li > ri;
                                 return l.value.imag() > r.value.imag();
                             });
            break;
        }
    }

    for (EigenPair& pair : sys.pairs) {
        if (max_norm(pair.vector) < 1e-12)
            throw std::runtime_error("eigenvectors: zero eigenvector for dim " +
                                     std::to_string(p.dim()));
        if (unit_norm) normalize2(pair.vector);
        pair.residual = verify_eigenpair(u, pair.value, pair.vector);
    }
    return sys;
}

}  // namespace skeweig
