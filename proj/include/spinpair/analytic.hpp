#pragma once

#include <array>

#include "spinpair/complex_matrix.hpp"

namespace spinpair {

// Scalars the closed-form solution is written in terms of (energies in units
// of J, so J = 1 throughout this module).
struct DerivedQuantities {
    double b_plus;   // B (cos theta + sin theta)
    double b_minus;  // B (cos theta - sin theta)
    double xi;       // sqrt(2 + b_minus^2)
    double zeta;     // sqrt(4 + b_minus^2)
    double m_plus;   // (b_plus + zeta)/2
    double m_minus;  // (b_plus - zeta)/2
    double r_plus;   // +b_minus + xi
    double r_minus;  // -b_minus + xi
    double s_plus;   // (b_minus + zeta)/2
    double s_minus;  // (b_minus - zeta)/2
};

// zeta^2 - xi^2 = 2 and r_plus * r_minus = 2 hold identically; both are
// asserted to 1e-12 on construction.
DerivedQuantities derived_quantities(double b, double theta);

enum class Level { psi1, psi2, psi3, psi4p, psi4m, psi5p, psi5m, psi6p, psi6m };
const char* level_name(Level l);

struct AnalyticLevel {
    Level label;
    double energy;
    std::array<Complex, 9> vec;  // unit norm, product-basis components
};

// The nine exact levels of the XY + split-field Hamiltonian:
//   psi1              E = 0
//   psi2 = |-1,-1>    E = -b_plus
//   psi3 = |+1,+1>    E = +b_plus
//   psi4(+/-)         E = -m_minus / -m_plus   (span of |-1,0>, |0,-1>)
//   psi5(+/-)         E = +m_plus / +m_minus   (span of |0,+1>, |+1,0>)
//   psi6(+/-)         E = +xi / -xi            (span of |+1,-1>, |0,0>, |-1,+1>)
using AnalyticSpectrum = std::array<AnalyticLevel, 9>;
AnalyticSpectrum analytic_spectrum(const DerivedQuantities& q);

// Z = 1 + 2 cosh(beta xi) + 4 cosh(beta zeta/2) cosh(beta b_plus/2)
//       + 2 cosh(beta b_plus),  beta = 1/T (k_B = 1).
// Rejects T <= 0.
double partition_function(const DerivedQuantities& q, double t_temp);

// Closed-form partial transpose (over site 1) of the thermal state.
//
// Writing b = beta, the matrix is assembled from the coefficients below and
// divided by Z.  Diagonal, in product-basis order:
//   e^{-b B+},  M e^{-b B+ / 2},  W-,  Q-,  1 + 2(cosh(b xi) - 1)/xi^2,
//   M e^{+b B+ / 2},  W+,  Q+,  e^{+b B+}
// Nonzero off-diagonal entries:
//   (0,4) = q+        (4,8) = q-        (0,8) = (cosh(b xi) - 1)/xi^2
//   (1,5) = u-        (3,7) = u+        (all symmetric)
// with
//   M  = cosh(b zeta/2) - (B-/zeta) sinh(b zeta/2)
//   q+/- = -(2/zeta) e^{-/+ b B+ / 2} sinh(b zeta/2)
//        = -(1/zeta) e^{-(b/2)(zeta +/- B+)} (e^{b zeta} - 1)
//   u+/- = (+/- B-(1 - cosh(b xi)) - xi sinh(b xi)) / xi^2
//   W+/- = (1 + (1 + B-^2) cosh(b xi) +/- xi B- sinh(b xi)) / xi^2
//   Q+/- = (cosh(b zeta/2) + (B-/zeta) sinh(b zeta/2)) e^{+/- b B+ / 2}
// Every other entry is exactly zero.  max_deviation_from_numeric reports the
// largest entrywise gap to the partial transpose of the numerically built
// Gibbs state; with the forms above it sits at roundoff level.
struct ClosedFormPT {
    double m_coef;
    double q_plus, q_minus;
    double u_plus, u_minus;
    double w_plus, w_minus;
    double qq_plus, qq_minus;  // Q+ and Q-
    ComplexMatrix matrix{9};   // includes the 1/Z factor
    double max_deviation_from_numeric;
};
ClosedFormPT closed_form_pt(const DerivedQuantities& q, double t_temp);

}  // namespace spinpair
