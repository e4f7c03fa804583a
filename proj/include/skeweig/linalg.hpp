#pragma once

#include <complex>
#include <vector>

namespace skeweig {

using Complex = std::complex<double>;

/// Small dense square real matrix, row-major.
class RealMatrix {
public:
    explicit RealMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    static RealMatrix identity(int n);

    int dim() const { return n_; }
    double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    RealMatrix operator+(const RealMatrix& rhs) const;
    RealMatrix operator-(const RealMatrix& rhs) const;
    RealMatrix operator*(const RealMatrix& rhs) const;
    RealMatrix operator*(double s) const;
    RealMatrix transposed() const;

    std::vector<double> apply(const std::vector<double>& v) const;
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    double max_abs() const;
    double trace() const;
    /// Max |antisymmetry defect|: entries of A + A^T.
    double antisymmetry_defect() const;

private:
    int n_;
    std::vector<double> a_;
};

/// Max entrywise |A - B|.
double max_abs_diff(const RealMatrix& a, const RealMatrix& b);

/// Solves A X = B by Gaussian elimination with partial pivoting.
/// Throws std::runtime_error if a pivot falls below tolerance.
RealMatrix solve_lu(RealMatrix a, RealMatrix b);

/// Determinant via LU with partial pivoting.
double det_lu(RealMatrix a);

/// Orthonormal-ish basis of the null space of A, via row reduction with
/// partial pivoting; entries below rel_tol * max|A| are treated as zero.
std::vector<std::vector<double>> real_nullspace(RealMatrix a, double rel_tol = 1e-9);

/// Null space of the complex matrix (rows of length n), same pivoting scheme.
std::vector<std::vector<Complex>> complex_nullspace(std::vector<std::vector<Complex>> rows,
                                                    double rel_tol = 1e-9);

/// Solves the complex system A X = B (square, rows-of-rows layout) by Gaussian
/// elimination with partial pivoting on |.|.
std::vector<std::vector<Complex>> complex_solve(std::vector<std::vector<Complex>> a,
                                                std::vector<std::vector<Complex>> b);

}  // namespace skeweig
