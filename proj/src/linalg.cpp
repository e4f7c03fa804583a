#include "skeweig/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace skeweig {

RealMatrix RealMatrix::identity(int n) {
    RealMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

RealMatrix RealMatrix::operator+(const RealMatrix& rhs) const {
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) + rhs(i, j);
    return out;
}

RealMatrix RealMatrix::operator-(const RealMatrix& rhs) const {
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) - rhs(i, j);
    return out;
}

RealMatrix RealMatrix::operator*(const RealMatrix& rhs) const {
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const double aik = (*this)(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < n_; ++j) out(i, j) += aik * rhs(k, j);
        }
    return out;
}

RealMatrix RealMatrix::operator*(double s) const {
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j) * s;
    return out;
}

RealMatrix RealMatrix::transposed() const {
    RealMatrix out(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

std::vector<double> RealMatrix::apply(const std::vector<double>& v) const {
    std::vector<double> out(n_, 0.0);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

std::vector<Complex> RealMatrix::apply(const std::vector<Complex>& v) const {
    std::vector<Complex> out(n_, Complex(0.0, 0.0));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

double RealMatrix::max_abs() const {
    double m = 0.0;
    for (double x : a_) m = std::max(m, std::fabs(x));
    return m;
}

double RealMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double RealMatrix::antisymmetry_defect() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m = std::max(m, std::fabs((*this)(i, j) + (*this)(j, i)));
    return m;
}

double max_abs_diff(const RealMatrix& a, const RealMatrix& b) { return (a - b).max_abs(); }

RealMatrix solve_lu(RealMatrix a, RealMatrix b) {
    const int n = a.dim();
    const double scale = a.max_abs();
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
        if (std::fabs(a(piv, col)) <= 1e-14 * std::max(scale, 1.0))
            throw std::runtime_error("solve_lu: singular system (pivot " +
                                     std::to_string(a(piv, col)) + " at column " +
                                     std::to_string(col) + ")");
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(piv, j), a(col, j));
                std::swap(b(piv, j), b(col, j));
            }
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (int j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
        }
    }
    RealMatrix x(n);
    for (int col = n - 1; col >= 0; --col)
        for (int j = 0; j < n; ++j) {
            double s = b(col, j);
            for (int k = col + 1; k < n; ++k) s -= a(col, k) * x(k, j);
            x(col, j) = s / a(col, col);
        }
    return x;
}

double det_lu(RealMatrix a) {
    const int n = a.dim();
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::fabs(a(r, col)) > std::fabs(a(piv, col))) piv = r;
        if (a(piv, col) == 0.0) return 0.0;
        if (piv != col) {
            det = -det;
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            const double f = a(r, col) / a(col, col);
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

namespace {

// Shared row-echelon null-space extraction for real and complex scalars.
// Complete (row + column) pivoting: plain partial pivoting can hide a
// rank-2 deficiency behind one small leading pivot and amplify the noise
// floor above any fixed threshold.
template <typename T>
std::vector<std::vector<T>> nullspace_impl(std::vector<std::vector<T>> rows, double rel_tol) {
    const int m = static_cast<int>(rows.size());
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    double scale = 0.0;
    for (const auto& r : rows)
        for (const T& x : r) scale = std::max(scale, std::abs(x));
    const double tol = rel_tol * std::max(scale, 1.0);

    std::vector<int> colperm(n);
    for (int c = 0; c < n; ++c) colperm[c] = c;

    int rank = 0;
    for (int step = 0; step < n && rank < m; ++step) {
        int best_r = rank, best_c = step;
        double best = -1.0;
        for (int r = rank; r < m; ++r)
            for (int c = step; c < n; ++c)
                if (std::abs(rows[r][colperm[c]]) > best) {
                    best = std::abs(rows[r][colperm[c]]);
                    best_r = r;
                    best_c = c;
                }
        if (best <= tol) break;  // the remaining block is numerically zero
        std::swap(colperm[step], colperm[best_c]);
        std::swap(rows[best_r], rows[rank]);
        const int pc = colperm[step];
        const T inv = T(1.0) / rows[rank][pc];
        for (int j = 0; j < n; ++j) rows[rank][j] *= inv;
        for (int r = 0; r < m; ++r) {
            if (r == rank) continue;
            const T f = rows[r][pc];
            if (std::abs(f) == 0.0) continue;
            for (int j = 0; j < n; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }

    std::vector<std::vector<T>> basis;
    for (int k = rank; k < n; ++k) {
        const int free_col = colperm[k];
        std::vector<T> v(n, T(0.0));
        v[free_col] = T(1.0);
        for (int r = 0; r < rank; ++r) v[colperm[r]] = -rows[r][free_col];
        double norm = 0.0;
        for (const T& x : v) norm += std::norm(x);
        norm = std::sqrt(norm);
        for (T& x : v) x /= norm;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::vector<std::vector<double>> real_nullspace(RealMatrix a, double rel_tol) {
    std::vector<std::vector<double>> rows(a.dim(), std::vector<double>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) rows[i][j] = a(i, j);
    return nullspace_impl<double>(std::move(rows), rel_tol);
}

std::vector<std::vector<Complex>> complex_nullspace(std::vector<std::vector<Complex>> rows,
                                                    double rel_tol) {
    return nullspace_impl<Complex>(std::move(rows), rel_tol);
}

std::vector<std::vector<Complex>> complex_solve(std::vector<std::vector<Complex>> a,
                                                std::vector<std::vector<Complex>> b) {
    const int n = static_cast<int>(a.size());
    double scale = 0.0;
    for (const auto& row : a)
        for (const Complex& x : row) scale = std::max(scale, std::abs(x));
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) <= 1e-14 * std::max(scale, 1.0))
            throw std::runtime_error("complex_solve: singular system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (int r = col + 1; r < n; ++r) {
            const Complex f = a[r][col] / a[col][col];
            if (std::abs(f) == 0.0) continue;
            for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
            for (int j = 0; j < n; ++j) b[r][j] -= f * b[col][j];
        }
    }
    std::vector<std::vector<Complex>> x(n, std::vector<Complex>(n));
    for (int col = n - 1; col >= 0; --col)
        for (int j = 0; j < n; ++j) {
            Complex s = b[col][j];
            for (int k = col + 1; k < n; ++k) s -= a[col][k] * x[k][j];
            x[col][j] = s / a[col][col];
        }
    return x;
}

}  // namespace skeweig
