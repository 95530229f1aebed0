#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "spinpair/analytic.hpp"
#include "spinpair/eigen_jacobi.hpp"
#include "spinpair/spin_model.hpp"
#include "spinpair/thermal.hpp"

using namespace spinpair;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix hamiltonian(double b, double theta) {
    return build_xy_field_hamiltonian(ModelParams{1.0, b, theta});
}

}  // namespace

TEST_CASE("derived scalars at hand-checked points") {
    SUBCASE("zero field") {
        const DerivedQuantities q = derived_quantities(0.0, 0.3);
        CHECK(q.b_plus == 0.0);
        CHECK(q.b_minus == 0.0);
        CHECK(q.xi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(q.zeta == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(q.m_plus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(q.m_minus == doctest::Approx(-1.0).epsilon(1e-15));
        CHECK(q.r_plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(q.r_minus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(q.s_plus == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(q.s_minus == doctest::Approx(-1.0).epsilon(1e-15));
    }

    SUBCASE("equal fields, b = 1") {
        const DerivedQuantities q = derived_quantities(1.0, kPi / 4.0);
        CHECK(q.b_plus == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(q.b_minus == doctest::Approx(0.0).epsilon(1e-15));
        CHECK(std::abs(q.b_minus) <= 1e-15);
        CHECK(q.xi == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        CHECK(q.zeta == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(q.m_plus == doctest::Approx((std::sqrt(2.0) + 2.0) / 2.0).epsilon(1e-14));
        CHECK(q.m_minus == doctest::Approx((std::sqrt(2.0) - 2.0) / 2.0).epsilon(1e-14));
    }

    SUBCASE("opposed fields, b = 1") {
        const DerivedQuantities q = derived_quantities(1.0, 3.0 * kPi / 4.0);
        CHECK(std::abs(q.b_plus) <= 1e-15);
        CHECK(q.b_minus == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-14));
        CHECK(q.xi == doctest::Approx(2.0).epsilon(1e-14));
        CHECK(q.zeta == doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
        CHECK(q.m_plus == doctest::Approx(std::sqrt(6.0) / 2.0).epsilon(1e-14));
        CHECK(q.m_minus == doctest::Approx(-std::sqrt(6.0) / 2.0).epsilon(1e-14));
    }
}

TEST_CASE("derived scalar identities on random parameters") {
    std::mt19937 rng(21);
    std::uniform_real_distribution<double> ub(-6.0, 6.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);
    for (int k = 0; k < 200; ++k) {
        const DerivedQuantities q = derived_quantities(ub(rng), uth(rng));
        CHECK(q.zeta * q.zeta - q.xi * q.xi == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(q.r_plus * q.r_minus == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(q.s_plus * q.s_minus == doctest::Approx(-1.0).epsilon(1e-12));
        CHECK(q.m_plus - q.m_minus == doctest::Approx(q.zeta).epsilon(1e-12));
        CHECK(q.m_plus + q.m_minus == doctest::Approx(q.b_plus).epsilon(1e-12));
    }
}

TEST_CASE("analytic levels are eigenpairs") {
    std::mt19937 rng(33);
    std::uniform_real_distribution<double> ub(-6.0, 6.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);
    for (int k = 0; k < 40; ++k) {
        const double b = ub(rng);
        const double theta = uth(rng);
        const ComplexMatrix h = hamiltonian(b, theta);
        const AnalyticSpectrum spec = analytic_spectrum(derived_quantities(b, theta));

        ComplexMatrix completeness(9);
        for (const AnalyticLevel& lvl : spec) {
            // unit norm
            double norm2 = 0.0;
            for (const Complex& c : lvl.vec) norm2 += std::norm(c);
            CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-12));

            // H v = E v
            double residual = 0.0;
            for (std::size_t i = 0; i < 9; ++i) {
                Complex acc{0.0, 0.0};
                for (std::size_t j = 0; j < 9; ++j) acc += h(i, j) * lvl.vec[j];
                residual = std::max(residual, std::abs(acc - lvl.energy * lvl.vec[i]));
            }
            CHECK(residual <= 1e-11);

            for (std::size_t i = 0; i < 9; ++i) {
                for (std::size_t j = 0; j < 9; ++j) {
                    completeness.set(i, j, completeness(i, j) +
                                               lvl.vec[i] * std::conj(lvl.vec[j]));
                }
            }
        }
        // the nine levels resolve the identity
        CHECK((completeness - ComplexMatrix::identity(9)).max_abs() <= 1e-12);
    }
}

TEST_CASE("analytic energies match the numeric spectrum") {
    std::mt19937 rng(34);
    std::uniform_real_distribution<double> ub(-6.0, 6.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);
    for (int k = 0; k < 40; ++k) {
        const double b = ub(rng);
        const double theta = uth(rng);
        const AnalyticSpectrum spec = analytic_spectrum(derived_quantities(b, theta));
        std::array<double, 9> analytic;
        for (std::size_t i = 0; i < 9; ++i) analytic[i] = spec[i].energy;
        std::sort(analytic.begin(), analytic.end());
        const std::vector<double> numeric = hermitian_eig(hamiltonian(b, theta)).values;
        for (std::size_t i = 0; i < 9; ++i) {
            CHECK(std::abs(analytic[i] - numeric[i]) <= 1e-12);
        }
    }
}

TEST_CASE("level labels") {
    CHECK(std::string(level_name(Level::psi1)) == "psi1");
    CHECK(std::string(level_name(Level::psi6m)) == "psi6-");
    const AnalyticSpectrum spec = analytic_spectrum(derived_quantities(1.3, 0.9));
    CHECK(spec[0].label == Level::psi1);
    CHECK(spec[0].energy == 0.0);
    CHECK(spec[1].label == Level::psi2);
    CHECK(spec[2].label == Level::psi3);
}

TEST_CASE("partition function") {
    // zero field: Z = 3 + 2 cosh(beta sqrt2) + 4 cosh(beta) at beta = 1
    const DerivedQuantities q0 = derived_quantities(0.0, 0.0);
    CHECK(partition_function(q0, 1.0) ==
          doctest::Approx(3.0 + 2.0 * std::cosh(std::sqrt(2.0)) + 4.0 * std::cosh(1.0))
              .epsilon(1e-15));

    // matches the direct sum over the nine analytic energies
    std::mt19937 rng(55);
    std::uniform_real_distribution<double> ub(-6.0, 6.0);
    std::uniform_real_distribution<double> uth(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> ut(0.05, 1.2);
    for (int k = 0; k < 60; ++k) {
        const DerivedQuantities q = derived_quantities(ub(rng), uth(rng));
        const double t = ut(rng);
        const AnalyticSpectrum spec = analytic_spectrum(q);
        double direct = 0.0;
        for (const AnalyticLevel& lvl : spec) direct += std::exp(-lvl.energy / t);
        const double z = partition_function(q, t);
        CHECK(std::abs(z - direct) / direct <= 1e-13);
        CHECK(z > 0.0);
    }

    CHECK_THROWS_AS(partition_function(q0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(partition_function(q0, -0.4), std::invalid_argument);
}

TEST_CASE("closed-form partial transpose") {
    const double temps[4] = {0.05, 0.2, 0.6, 1.2};
    const double bs[5] = {0.0, 0.7, 1.5, 3.0, 6.0};
    const double thetas[4] = {0.0, kPi / 4.0, 3.0 * kPi / 4.0, 1.1};

    double worst = 0.0;
    for (double b : bs) {
        for (double theta : thetas) {
            for (double t : temps) {
                const ClosedFormPT cf = closed_form_pt(derived_quantities(b, theta), t);

                // a valid partial transpose of a state: hermitian, unit trace
                CHECK(cf.matrix.is_hermitian(1e-13));
                CHECK(std::abs(cf.matrix.trace().real() - 1.0) <= 1e-12);

                // entries away from the structural pattern are exactly zero
                const bool nonzero[9][9] = {
                    {1, 0, 0, 0, 1, 0, 0, 0, 1},  //
                    {0, 1, 0, 0, 0, 1, 0, 0, 0},  //
                    {0, 0, 1, 0, 0, 0, 0, 0, 0},  //
                    {0, 0, 0, 1, 0, 0, 0, 1, 0},  //
                    {1, 0, 0, 0, 1, 0, 0, 0, 1},  //
                    {0, 1, 0, 0, 0, 1, 0, 0, 0},  //
                    {0, 0, 0, 0, 0, 0, 1, 0, 0},  //
                    {0, 0, 0, 1, 0, 0, 0, 1, 0},  //
                    {1, 0, 0, 0, 1, 0, 0, 0, 1},  //
                };
                for (std::size_t i = 0; i < 9; ++i) {
                    for (std::size_t j = 0; j < 9; ++j) {
                        if (!nonzero[i][j]) CHECK(cf.matrix(i, j) == Complex{0.0, 0.0});
                    }
                }

                worst = std::max(worst, cf.max_deviation_from_numeric);
            }
        }
    }
    // coefficient formulas reproduce the numerically built transpose
    CHECK(worst <= 1e-12);
}
