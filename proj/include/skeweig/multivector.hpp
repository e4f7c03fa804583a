#pragma once

#include <cstddef>
#include <vector>

namespace skeweig {

/// Basis blade of a Euclidean Clifford algebra: bitmask with bit k set iff
/// sigma_{k+1} is a factor, plus the sign picked up when bringing a product
/// into canonical (ascending) factor order.
struct Blade {
    unsigned bitmask = 0;
    int sign = 1;
};

/// Product of two canonical basis blades. Result bitmask is a ^ b; the sign
/// counts basis-vector transpositions (Euclidean metric, sigma_k^2 = +1).
Blade blade_product(unsigned a, unsigned b);

/// Dense multivector over Cl(n), n in {2,3,4}: 2^n coefficients indexed by
/// blade bitmask.
class Multivector {
public:
    explicit Multivector(int dim);

    static Multivector scalar(int dim, double value);
    static Multivector basis_vector(int dim, int k);  // sigma_{k+1}, k in [0, dim)
    static Multivector blade(int dim, unsigned bitmask, double coeff);
    /// Grade-1 element with the given coordinates (coords.size() == dim).
    static Multivector from_vector(const std::vector<double>& coords);

    int dim() const { return dim_; }
    std::size_t size() const { return coeffs_.size(); }

    double operator[](unsigned bitmask) const { return coeffs_[bitmask]; }
    double& operator[](unsigned bitmask) { return coeffs_[bitmask]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    Multivector operator+(const Multivector& rhs) const;
    Multivector operator-(const Multivector& rhs) const;
    Multivector operator-() const;
    Multivector operator*(double s) const;
    friend Multivector operator*(double s, const Multivector& m) { return m * s; }

    double max_abs() const;
    bool is_zero(double tol = 0.0) const;
    /// Max |coefficient| outside grade k.
    double off_grade(int k) const;
    double scalar_part() const { return coeffs_[0]; }
    /// Grade-1 coordinates (length dim).
    std::vector<double> vector_coords() const;

private:
    int dim_;
    std::vector<double> coeffs_;
};

/// Full geometric product. Throws std::invalid_argument on dimension mismatch.
Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
    return geometric_product(a, b);
}

/// Reverse: grade-k part scaled by (-1)^{k(k-1)/2}.
Multivector reverse(const Multivector& a);

/// Keep only the grade-k coefficients. Throws if k is outside [0, dim].
Multivector grade_project(const Multivector& a, int k);

/// Left contraction of a grade-1 vector onto a grade-2 bivector,
/// v . B = (vB - Bv)/2. Throws if the arguments are not of pure grade.
Multivector left_contract(const Multivector& v, const Multivector& bivec);

/// v^{-1} = v / v^2 for grade-1 v. Throws std::domain_error when |v^2| < 1e-12.
Multivector vector_inverse(const Multivector& v);

}  // namespace skeweig
