#include "skeweig/multivector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace skeweig {

namespace {

void check_dim(int dim) {
    if (dim < 2 || dim > 4)
        throw std::invalid_argument("multivector dimension must be 2, 3 or 4, got " +
                                    std::to_string(dim));
}

constexpr double kPureGradeTol = 1e-12;

}  // namespace

Blade blade_product(unsigned a, unsigned b) {
    // Transposition count: each factor of a (above the lowest) hops over the
    // factors of b below it when merging into ascending order.
    int swaps = 0;
    for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
    return Blade{a ^ b, (swaps & 1) ? -1 : +1};
}

Multivector::Multivector(int dim) : dim_(dim) {
    check_dim(dim);
    coeffs_.assign(std::size_t{1} << dim, 0.0);
}

Multivector Multivector::scalar(int dim, double value) {
    Multivector m(dim);
    m.coeffs_[0] = value;
    return m;
}

Multivector Multivector::basis_vector(int dim, int k) {
    check_dim(dim);
    if (k < 0 || k >= dim) throw std::invalid_argument("basis vector index out of range");
    Multivector m(dim);
    m.coeffs_[1u << k] = 1.0;
    return m;
}

Multivector Multivector::blade(int dim, unsigned bitmask, double coeff) {
    Multivector m(dim);
    if (bitmask >= m.size()) throw std::invalid_argument("blade bitmask out of range");
    m.coeffs_[bitmask] = coeff;
    return m;
}

Multivector Multivector::from_vector(const std::vector<double>& coords) {
    Multivector m(static_cast<int>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) m.coeffs_[1u << k] = coords[k];
    return m;
}

Multivector Multivector::operator+(const Multivector& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in +");
    Multivector out(dim_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + rhs.coeffs_[i];
    return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("dimension mismatch in -");
    Multivector out(dim_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - rhs.coeffs_[i];
    return out;
}

Multivector Multivector::operator-() const {
    Multivector out(dim_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = -coeffs_[i];
    return out;
}

Multivector Multivector::operator*(double s) const {
    Multivector out(dim_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * s;
    return out;
}

double Multivector::max_abs() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::fabs(c));
    return m;
}

bool Multivector::is_zero(double tol) const { return max_abs() <= tol; }

double Multivector::off_grade(int k) const {
    double m = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (std::popcount(i) != k) m = std::max(m, std::fabs(coeffs_[i]));
    return m;
}

std::vector<double> Multivector::vector_coords() const {
    std::vector<double> v(dim_);
    for (int k = 0; k < dim_; ++k) v[k] = coeffs_[1u << k];
    return v;
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch in geometric product");
    Multivector out(a.dim());
    const std::size_t n = a.size();
    for (unsigned i = 0; i < n; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (unsigned j = 0; j < n; ++j) {
            const double bj = b[j];
            if (bj == 0.0) continue;
            const Blade r = blade_product(i, j);
            out[r.bitmask] += r.sign * ai * bj;
        }
    }
    return out;
}

Multivector reverse(const Multivector& a) {
    Multivector out(a.dim());
    for (unsigned i = 0; i < a.size(); ++i) {
        const int k = std::popcount(i);
        const int s = (k % 4 == 2 || k % 4 == 3) ? -1 : +1;  // (-1)^{k(k-1)/2}
        out[i] = s * a[i];
    }
    return out;
}

Multivector grade_project(const Multivector& a, int k) {
    if (k < 0 || k > a.dim())
        throw std::invalid_argument("grade " + std::to_string(k) + " out of range for Cl(" +
                                    std::to_string(a.dim()) + ")");
    Multivector out(a.dim());
    for (unsigned i = 0; i < a.size(); ++i)
        if (std::popcount(i) == k) out[i] = a[i];
    return out;
}

Multivector left_contract(const Multivector& v, const Multivector& bivec) {
    if (v.dim() != bivec.dim()) throw std::invalid_argument("dimension mismatch in contraction");
    if (v.off_grade(1) > kPureGradeTol) throw std::invalid_argument("left_contract: v is not grade 1");
    if (bivec.off_grade(2) > kPureGradeTol)
        throw std::invalid_argument("left_contract: second argument is not grade 2");
    const Multivector comm = (v * bivec - bivec * v) * 0.5;
    return grade_project(comm, 1);
}

Multivector vector_inverse(const Multivector& v) {
    if (v.off_grade(1) > kPureGradeTol) throw std::invalid_argument("vector_inverse: not grade 1");
    const double vsq = (v * v).scalar_part();
    if (std::fabs(vsq) < 1e-12) throw std::domain_error("vector_inverse: null vector (v^2 ~ 0)");
    return v * (1.0 / vsq);
}

}  // namespace skeweig
