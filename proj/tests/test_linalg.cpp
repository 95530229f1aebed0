#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "spinpair/complex_matrix.hpp"
#include "spinpair/eigen_jacobi.hpp"

using namespace spinpair;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.set(i, i, Complex{g(rng), 0.0});
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v{g(rng), g(rng)};
            a.set(i, j, v);
            a.set(j, i, std::conj(v));
        }
    }
    return a;
}

ComplexMatrix random_matrix(std::size_t n, std::mt19937& rng) {
    std::normal_distribution<double> g;
    ComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a.set(i, j, Complex{g(rng), g(rng)});
    return a;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) { return (a - b).max_abs(); }

}  // namespace

TEST_CASE("matrix construction and accessors") {
    ComplexMatrix z(3);
    CHECK(z.dim() == 3);
    CHECK(z.max_abs() == 0.0);

    const ComplexMatrix id = ComplexMatrix::identity(4);
    CHECK(id.trace() == Complex{4.0, 0.0});
    CHECK(id(2, 2) == Complex{1.0, 0.0});
    CHECK(id(0, 1) == Complex{0.0, 0.0});

    const ComplexMatrix d = ComplexMatrix::diagonal({1.0, -2.0, 0.5});
    CHECK(d(1, 1) == Complex{-2.0, 0.0});
    CHECK(d.trace().real() == doctest::Approx(-0.5));

    CHECK_THROWS_AS(ComplexMatrix(0), std::invalid_argument);
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), std::invalid_argument);

    ComplexMatrix m(2);
    m.set(0, 1, Complex{1.5, -0.5});
    CHECK(m(0, 1) == Complex{1.5, -0.5});
    CHECK_THROWS_AS(m.set(2, 0, Complex{}), std::out_of_range);
    const double nan = std::nan("");
    CHECK_THROWS_AS(m.set(0, 0, Complex{nan, 0.0}), std::invalid_argument);
}

TEST_CASE("adjoint, trace, norms, hermiticity") {
    ComplexMatrix m(2);
    m.set(0, 0, {1.0, 0.0});
    m.set(0, 1, {2.0, 3.0});
    m.set(1, 0, {0.0, -1.0});
    m.set(1, 1, {0.0, 4.0});

    const ComplexMatrix ma = m.adjoint();
    CHECK(ma(1, 0) == Complex{2.0, -3.0});
    CHECK(ma(0, 1) == Complex{0.0, 1.0});
    CHECK(ma(1, 1) == Complex{0.0, -4.0});

    CHECK(m.trace() == Complex{1.0, 4.0});
    CHECK(m.frobenius_norm() ==
          doctest::Approx(std::sqrt(1.0 + 4.0 + 9.0 + 1.0 + 16.0)));
    CHECK(m.max_abs() == doctest::Approx(4.0));  // the 4i entry
    CHECK(m.max_abs_imag() == doctest::Approx(4.0));
    CHECK(!m.is_hermitian());

    ComplexMatrix h(2);
    h.set(0, 0, {2.0, 0.0});
    h.set(0, 1, {1.0, 1.0});
    h.set(1, 0, {1.0, -1.0});
    h.set(1, 1, {-3.0, 0.0});
    CHECK(h.is_hermitian());
    CHECK(h.hermitian_defect() == 0.0);
}

TEST_CASE("matrix arithmetic") {
    std::mt19937 rng(11);
    const ComplexMatrix a = random_matrix(4, rng);
    const ComplexMatrix b = random_matrix(4, rng);
    const ComplexMatrix id = ComplexMatrix::identity(4);

    CHECK(max_abs_diff(a * id, a) == 0.0);
    CHECK(max_abs_diff(id * a, a) == 0.0);
    CHECK(max_abs_diff((a + b) - b, a) <= 1e-15);
    CHECK(max_abs_diff(Complex{2.0, 0.0} * a, a + a) <= 1e-15);

    // associativity to roundoff
    CHECK(max_abs_diff((a * b) * a, a * (b * a)) <= 1e-12);

    // hand-checked 2x2 product
    ComplexMatrix p(2), q(2);
    p.set(0, 0, {1, 0});
    p.set(0, 1, {0, 1});
    p.set(1, 0, {2, 0});
    p.set(1, 1, {0, 0});
    q.set(0, 0, {0, 1});
    q.set(0, 1, {1, 0});
    q.set(1, 0, {1, 0});
    q.set(1, 1, {0, -1});
    const ComplexMatrix pq = p * q;
    CHECK(pq(0, 0) == Complex{0.0, 2.0});
    CHECK(pq(0, 1) == Complex{2.0, 0.0});
    CHECK(pq(1, 0) == Complex{0.0, 2.0});
    CHECK(pq(1, 1) == Complex{2.0, 0.0});
}

TEST_CASE("kronecker product layout and mixed-product rule") {
    ComplexMatrix a(2);
    a.set(0, 0, {1, 0});
    a.set(0, 1, {2, 0});
    a.set(1, 0, {3, 0});
    a.set(1, 1, {4, 0});
    ComplexMatrix b(2);
    b.set(0, 0, {0, 1});
    b.set(1, 1, {5, 0});

    const ComplexMatrix k = kron(a, b);
    REQUIRE(k.dim() == 4);
    // first factor major: block (ia, ja) holds a(ia, ja) * b
    CHECK(k(0, 0) == Complex{0, 1});
    CHECK(k(1, 1) == Complex{5, 0});
    CHECK(k(0, 2) == Complex{0, 2});
    CHECK(k(1, 3) == Complex{10, 0});
    CHECK(k(2, 0) == Complex{0, 3});
    CHECK(k(3, 3) == Complex{20, 0});
    CHECK(k(0, 1) == Complex{0, 0});

    std::mt19937 rng(7);
    const ComplexMatrix c = random_matrix(2, rng);
    const ComplexMatrix d = random_matrix(3, rng);
    const ComplexMatrix e = random_matrix(2, rng);
    const ComplexMatrix f = random_matrix(3, rng);
    // (C (x) D)(E (x) F) = CE (x) DF
    CHECK(max_abs_diff(kron(c, d) * kron(e, f), kron(c * e, d * f)) <= 1e-12);
}

TEST_CASE("jacobi eigensolver on known matrices") {
    SUBCASE("diagonal input") {
        const ComplexMatrix d = ComplexMatrix::diagonal({3.0, -1.0, 2.0});
        const EigenDecomposition e = hermitian_eig(d);
        REQUIRE(e.values.size() == 3);
        CHECK(e.values[0] == doctest::Approx(-1.0));
        CHECK(e.values[1] == doctest::Approx(2.0));
        CHECK(e.values[2] == doctest::Approx(3.0));
    }

    SUBCASE("2x2 exchange") {
        ComplexMatrix m(2);
        m.set(0, 1, {1, 0});
        m.set(1, 0, {1, 0});
        const EigenDecomposition e = hermitian_eig(m);
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.values[1] == doctest::Approx(1.0).epsilon(1e-14));
        // eigenvectors (1, -/+1)/sqrt2 up to the canonical phase
        const std::vector<Complex> v0 = e.vector(0);
        const std::vector<Complex> v1 = e.vector(1);
        CHECK(std::abs(v0[0] * v0[1] + 0.5) <= 1e-14);
        CHECK(std::abs(v1[0] * v1[1] - 0.5) <= 1e-14);
    }

    SUBCASE("complex 2x2") {
        ComplexMatrix m(2);
        m.set(0, 0, {1, 0});
        m.set(0, 1, {0, 2});
        m.set(1, 0, {0, -2});
        m.set(1, 1, {1, 0});
        const EigenDecomposition e = hermitian_eig(m);
        CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
        CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    }
}

TEST_CASE("jacobi eigensolver properties on random hermitian matrices") {
    std::mt19937 rng(42);
    for (std::size_t n : {2, 3, 5, 9, 12}) {
        const ComplexMatrix a = random_hermitian(n, rng);
        const EigenDecomposition e = hermitian_eig(a);
        REQUIRE(e.values.size() == n);

        CHECK(std::is_sorted(e.values.begin(), e.values.end()));

        // orthonormal columns
        const ComplexMatrix gram = e.vectors.adjoint() * e.vectors;
        CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) <= 1e-13);

        // A v = lambda v and full reconstruction
        const ComplexMatrix lam = ComplexMatrix::diagonal(e.values);
        const ComplexMatrix recon = e.vectors * lam * e.vectors.adjoint();
        CHECK(max_abs_diff(recon, a) <= 1e-12 * std::max(1.0, a.frobenius_norm()));

        double sum = 0.0, sq = 0.0;
        for (double v : e.values) {
            sum += v;
            sq += v * v;
        }
        CHECK(sum == doctest::Approx(a.trace().real()).epsilon(1e-12));
        CHECK(std::sqrt(sq) == doctest::Approx(a.frobenius_norm()).epsilon(1e-12));
    }
}

TEST_CASE("jacobi eigensolver handles degenerate spectra") {
    // projector onto a 2-dim subspace rotated by a random unitary-ish basis:
    // build A = V diag(1,1,0,0) V^H from a QR-free construction, here just a
    // hand-picked degenerate Hermitian matrix
    ComplexMatrix a(3);
    a.set(0, 0, {2, 0});
    a.set(1, 1, {2, 0});
    a.set(2, 2, {5, 0});
    const EigenDecomposition e = hermitian_eig(a);
    CHECK(e.values[0] == doctest::Approx(2.0));
    CHECK(e.values[1] == doctest::Approx(2.0));
    CHECK(e.values[2] == doctest::Approx(5.0));
    const ComplexMatrix gram = e.vectors.adjoint() * e.vectors;
    CHECK(max_abs_diff(gram, ComplexMatrix::identity(3)) <= 1e-13);
}

TEST_CASE("jacobi eigensolver input gates") {
    std::mt19937 rng(3);
    const ComplexMatrix nonherm = random_matrix(3, rng);
    CHECK_THROWS_AS(hermitian_eig(nonherm), std::invalid_argument);

    const ComplexMatrix a = random_hermitian(6, rng);
    CHECK_THROWS_AS(hermitian_eig(a, 1e-12, 0), NoConvergenceError);
    try {
        hermitian_eig(a, 1e-12, 0);
    } catch (const NoConvergenceError& ex) {
        CHECK(ex.residual > 0.0);
    }
}

TEST_CASE("trace norm") {
    const ComplexMatrix d = ComplexMatrix::diagonal({-2.0, 0.5, 1.0});
    CHECK(trace_norm(d) == doctest::Approx(3.5).epsilon(1e-13));

    std::mt19937 rng(8);
    const ComplexMatrix a = random_hermitian(5, rng);
    const EigenDecomposition e = hermitian_eig(a);
    double expect = 0.0;
    for (double v : e.values) expect += std::abs(v);
    CHECK(trace_norm(a) == doctest::Approx(expect).epsilon(1e-13));
}
