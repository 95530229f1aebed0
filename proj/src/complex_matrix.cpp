#include "spinpair/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

void require_finite(Complex v, std::size_t i, std::size_t j) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("ComplexMatrix: non-finite entry at (" + std::to_string(i) +
                                    "," + std::to_string(j) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), e_(std::move(entries)) {
    if (dim == 0) throw std::invalid_argument("ComplexMatrix: dimension must be positive");
    if (e_.size() != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                    " entries, got " + std::to_string(e_.size()));
    }
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) require_finite(e_[i * dim_ + j], i, j);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.e_[i * dim + i] = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
    ComplexMatrix m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        require_finite(entries[i], i, i);
        m.e_[i * m.dim_ + i] = entries[i];
    }
    return m;
}

void ComplexMatrix::set(std::size_t i, std::size_t j, Complex v) {
    if (i >= dim_ || j >= dim_) throw std::out_of_range("ComplexMatrix::set: index out of range");
    require_finite(v, i, j);
    e_[i * dim_ + j] = v;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m.e_[j * dim_ + i] = std::conj(e_[i * dim_ + j]);
    return m;
}

Complex ComplexMatrix::trace() const {
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += e_[i * dim_ + i];
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& v : e_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& v : e_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_imag() const {
    double m = 0.0;
    for (const Complex& v : e_) m = std::max(m, std::abs(v.imag()));
    return m;
}

double ComplexMatrix::hermitian_defect() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i; j < dim_; ++j)
            m = std::max(m, std::abs(e_[i * dim_ + j] - std::conj(e_[j * dim_ + i])));
    return m;
}

void ComplexMatrix::require_same_dim(const ComplexMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw std::invalid_argument("ComplexMatrix: dimension mismatch (" + std::to_string(dim_) +
                                    " vs " + std::to_string(rhs.dim_) + ")");
    }
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& v : e_) v *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a.e_[i * n + k];
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) out.e_[i * n + j] += aik * b.e_[k * n + j];
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    ComplexMatrix out(da * db);
    for (std::size_t ia = 0; ia < da; ++ia)
        for (std::size_t ja = 0; ja < da; ++ja) {
            const Complex av = a(ia, ja);
            if (av == Complex{0.0, 0.0}) continue;
            for (std::size_t ib = 0; ib < db; ++ib)
                for (std::size_t jb = 0; jb < db; ++jb)
                    out.set(ia * db + ib, ja * db + jb, av * b(ib, jb));
        }
    return out;
}

}  // namespace spinpair
