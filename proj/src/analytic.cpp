#include "spinpair/analytic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinpair/spin_model.hpp"
#include "spinpair/thermal.hpp"

namespace spinpair {

namespace {

void require_identity(double lhs, double rhs, const char* what) {
    if (std::abs(lhs - rhs) > 1e-12) {
        throw std::runtime_error(std::string("derived_quantities: identity ") + what +
                                 " violated: " + std::to_string(lhs) + " vs " +
                                 std::to_string(rhs));
    }
}

void require_positive_norm(double n2, const char* which) {
    if (!(n2 > 0.0)) {
        throw std::runtime_error(std::string("analytic_spectrum: normalization of ") + which +
                                 " is not positive");
    }
}

double require_temperature(double t_temp) {
    if (!(t_temp > 0.0)) {
        throw std::invalid_argument("temperature must be positive, got " +
                                    std::to_string(t_temp));
    }
    return 1.0 / t_temp;
}

}  // namespace

DerivedQuantities derived_quantities(double b, double theta) {
    if (!std::isfinite(b) || !std::isfinite(theta)) {
        throw std::invalid_argument("derived_quantities: b and theta must be finite");
    }
    DerivedQuantities q;
    q.b_plus = b * std::cos(theta) + b * std::sin(theta);
    q.b_minus = b * std::cos(theta) - b * std::sin(theta);
    q.xi = std::sqrt(2.0 + q.b_minus * q.b_minus);
    q.zeta = std::sqrt(4.0 + q.b_minus * q.b_minus);
    q.m_plus = 0.5 * (q.b_plus + q.zeta);
    q.m_minus = 0.5 * (q.b_plus - q.zeta);
    q.r_plus = q.b_minus + q.xi;
    q.r_minus = -q.b_minus + q.xi;
    q.s_plus = 0.5 * (q.b_minus + q.zeta);
    q.s_minus = 0.5 * (q.b_minus - q.zeta);
    require_identity(q.zeta * q.zeta - q.xi * q.xi, 2.0, "zeta^2 - xi^2 = 2");
    require_identity(q.r_plus * q.r_minus, 2.0, "r+ r- = 2");
    return q;
}

const char* level_name(Level l) {
    switch (l) {
        case Level::psi1: return "psi1";
        case Level::psi2: return "psi2";
        case Level::psi3: return "psi3";
        case Level::psi4p: return "psi4+";
        case Level::psi4m: return "psi4-";
        case Level::psi5p: return "psi5+";
        case Level::psi5m: return "psi5-";
        case Level::psi6p: return "psi6+";
        case Level::psi6m: return "psi6-";
    }
    return "?";
}

AnalyticSpectrum analytic_spectrum(const DerivedQuantities& q) {
    AnalyticSpectrum levels;
    auto idx = [](int m1, int m2) { return product_basis_index(m1, m2); };
    auto normalize = [](AnalyticLevel& l) {
        double n2 = 0.0;
        for (const Complex& c : l.vec) n2 += std::norm(c);
        require_positive_norm(n2, level_name(l.label));
        const double n = std::sqrt(n2);
        for (Complex& c : l.vec) c /= n;
    };
    for (AnalyticLevel& l : levels) l.vec.fill(Complex{0.0, 0.0});

    // psi1 = (|-1,+1> + B- |0,0> - |+1,-1>)/xi, E = 0
    levels[0].label = Level::psi1;
    levels[0].energy = 0.0;
    levels[0].vec[idx(-1, 1)] = 1.0;
    levels[0].vec[idx(0, 0)] = q.b_minus;
    levels[0].vec[idx(1, -1)] = -1.0;
    normalize(levels[0]);

    // psi2 = |-1,-1>, E = -B+        psi3 = |+1,+1>, E = +B+
    levels[1].label = Level::psi2;
    levels[1].energy = -q.b_plus;
    levels[1].vec[idx(-1, -1)] = 1.0;
    levels[2].label = Level::psi3;
    levels[2].energy = q.b_plus;
    levels[2].vec[idx(1, 1)] = 1.0;

    // psi4(s) = (|-1,0> + S_s |0,-1>)/sqrt(1 + S_s^2), E = -m_(-s)
    // psi5(s) = (|0,+1> + S_s |+1,0>)/sqrt(1 + S_s^2), E = +m_s
    const double s_of[2] = {q.s_plus, q.s_minus};
    const Level l4[2] = {Level::psi4p, Level::psi4m};
    const Level l5[2] = {Level::psi5p, Level::psi5m};
    const double e4[2] = {-q.m_minus, -q.m_plus};
    const double e5[2] = {q.m_plus, q.m_minus};
    for (int s = 0; s < 2; ++s) {
        AnalyticLevel& a = levels[3 + s];
        a.label = l4[s];
        a.energy = e4[s];
        a.vec[idx(-1, 0)] = 1.0;
        a.vec[idx(0, -1)] = s_of[s];
        normalize(a);

        AnalyticLevel& b = levels[5 + s];
        b.label = l5[s];
        b.energy = e5[s];
        b.vec[idx(0, 1)] = 1.0;
        b.vec[idx(1, 0)] = s_of[s];
        normalize(b);
    }

    // psi6(+/-) = (|-1,+1> +/- R(+/-) |0,0> + (1 +/- B- R(+/-)) |+1,-1>) / n,
    // E = +/- xi
    const double r_of[2] = {q.r_plus, q.r_minus};
    const double sign[2] = {1.0, -1.0};
    const Level l6[2] = {Level::psi6p, Level::psi6m};
    for (int s = 0; s < 2; ++s) {
        AnalyticLevel& a = levels[7 + s];
        a.label = l6[s];
        a.energy = sign[s] * q.xi;
        a.vec[idx(-1, 1)] = 1.0;
        a.vec[idx(0, 0)] = sign[s] * r_of[s];
        a.vec[idx(1, -1)] = 1.0 + sign[s] * q.b_minus * r_of[s];
        normalize(a);
    }
    return levels;
}

double partition_function(const DerivedQuantities& q, double t_temp) {
    const double beta = require_temperature(t_temp);
    return 1.0 + 2.0 * std::cosh(beta * q.xi) +
           4.0 * std::cosh(0.5 * beta * q.zeta) * std::cosh(0.5 * beta * q.b_plus) +
           2.0 * std::cosh(beta * q.b_plus);
}

ClosedFormPT closed_form_pt(const DerivedQuantities& q, double t_temp) {
    const double beta = require_temperature(t_temp);
    const double bp = q.b_plus;
    const double bm = q.b_minus;
    const double xi = q.xi;
    const double zeta = q.zeta;
    const double xi2 = xi * xi;

    const double chz = std::cosh(0.5 * beta * zeta);
    const double shz = std::sinh(0.5 * beta * zeta);
    const double chx = std::cosh(beta * xi);
    const double shx = std::sinh(beta * xi);
    const double ep = std::exp(0.5 * beta * bp);   // e^{+beta B+/2}
    const double em = std::exp(-0.5 * beta * bp);  // e^{-beta B+/2}

    ClosedFormPT out;
    out.m_coef = chz - shz * bm / zeta;
    out.q_plus = -(2.0 / zeta) * em * shz;
    out.q_minus = -(2.0 / zeta) * ep * shz;
    out.u_plus = (bm * (1.0 - chx) - xi * shx) / xi2;
    out.u_minus = (-bm * (1.0 - chx) - xi * shx) / xi2;
    out.w_plus = (1.0 + chx * (1.0 + bm * bm) + xi * bm * shx) / xi2;
    out.w_minus = (1.0 + chx * (1.0 + bm * bm) - xi * bm * shx) / xi2;
    const double m_other = chz + shz * bm / zeta;
    out.qq_plus = m_other * ep;
    out.qq_minus = m_other * em;

    const double z = partition_function(q, t_temp);
    const double corner = (chx - 1.0) / xi2;
    const double center = 1.0 + 2.0 * (chx - 1.0) / xi2;
    const double diag[9] = {em * em,         out.m_coef * em, out.w_minus,
                            out.qq_minus,    center,          out.m_coef * ep,
                            out.w_plus,      out.qq_plus,     ep * ep};
    ComplexMatrix& m = out.matrix;
    for (std::size_t i = 0; i < 9; ++i) m.set(i, i, diag[i] / z);
    m.set(0, 4, out.q_plus / z);
    m.set(4, 0, out.q_plus / z);
    m.set(4, 8, out.q_minus / z);
    m.set(8, 4, out.q_minus / z);
    m.set(0, 8, corner / z);
    m.set(8, 0, corner / z);
    m.set(1, 5, out.u_minus / z);
    m.set(5, 1, out.u_minus / z);
    m.set(3, 7, out.u_plus / z);
    m.set(7, 3, out.u_plus / z);

    // Cross-check against the numeric route: Gibbs state of the same
    // Hamiltonian, partially transposed.  The Zeeman coefficients are
    // recoverable from B+ and B-.
    const SpinOperators ops = spin1_operators();
    const ComplexMatrix id3 = ComplexMatrix::identity(3);
    ComplexMatrix h = kron(ops.sx, ops.sx) + kron(ops.sy, ops.sy);
    h += (0.5 * (bp + bm)) * kron(ops.sz, id3);
    h += (0.5 * (bp - bm)) * kron(id3, ops.sz);
    const ThermalState st = gibbs_state(h, t_temp);
    const ComplexMatrix pt = partial_transpose_first(st.rho, 3, 3);
    out.max_deviation_from_numeric = (out.matrix - pt).max_abs();
    return out;
}

}  // namespace spinpair
