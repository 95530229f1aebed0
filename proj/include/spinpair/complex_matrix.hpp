#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spinpair {

using Complex = std::complex<double>;

// Dense square complex matrix, row-major storage.  Entries entering through
// the public constructors or set() must be finite; arithmetic on valid
// matrices stays inside that contract for the parameter ranges used here.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t dim);
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<double>& entries);

    std::size_t dim() const { return dim_; }

    Complex operator()(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, Complex v);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    double max_abs_imag() const;

    // max_ij |a_ij - conj(a_ji)|, the distance from being Hermitian
    double hermitian_defect() const;
    bool is_hermitian(double tol = 1e-12) const { return hermitian_defect() <= tol; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
        a *= s;
        return a;
    }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    void require_same_dim(const ComplexMatrix& rhs) const;

    std::size_t dim_ = 0;
    std::vector<Complex> e_;
};

// Kronecker product, first factor major:
// out(ia*db + ib, ja*db + jb) = a(ia, ja) * b(ib, jb).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace spinpair
