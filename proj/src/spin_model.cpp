#include "spinpair/spin_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinpair {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite_param(double v, const char* name) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " must be finite");
}

}  // namespace

SpinOperators spin1_operators() {
    const double r = 1.0 / std::sqrt(2.0);
    SpinOperators ops;
    ops.sx.set(0, 1, r);
    ops.sx.set(1, 0, r);
    ops.sx.set(1, 2, r);
    ops.sx.set(2, 1, r);

    ops.sy.set(0, 1, -kI * r);
    ops.sy.set(1, 0, kI * r);
    ops.sy.set(1, 2, -kI * r);
    ops.sy.set(2, 1, kI * r);

    ops.sz.set(0, 0, 1.0);
    ops.sz.set(2, 2, -1.0);
    return ops;
}

std::size_t product_basis_index(int m1, int m2) {
    if (m1 < -1 || m1 > 1 || m2 < -1 || m2 > 1) {
        throw std::invalid_argument("product_basis_index: m must be in {-1, 0, 1}");
    }
    return static_cast<std::size_t>(3 * (1 - m1) + (1 - m2));
}

void ModelParams::validate() const {
    require_finite_param(j_coupling, "j_coupling");
    require_finite_param(b_field, "b_field");
    require_finite_param(theta, "theta");
    if (!(j_coupling > 0.0)) throw std::invalid_argument("j_coupling must be positive");
}

ComplexMatrix build_xy_field_hamiltonian(const ModelParams& p) {
    p.validate();
    const SpinOperators ops = spin1_operators();
    const ComplexMatrix id3 = ComplexMatrix::identity(3);
    ComplexMatrix h = p.j_coupling * (kron(ops.sx, ops.sx) + kron(ops.sy, ops.sy));
    h += (p.b_field * std::cos(p.theta)) * kron(ops.sz, id3);
    h += (p.b_field * std::sin(p.theta)) * kron(id3, ops.sz);
    return h;
}

void BilinearBiquadraticParams::validate() const {
    require_finite_param(j, "j");
    require_finite_param(k, "k");
    require_finite_param(eps, "eps");
}

ComplexMatrix build_bilinear_biquadratic(const BilinearBiquadraticParams& p) {
    p.validate();
    const SpinOperators ops = spin1_operators();
    const ComplexMatrix dot =
        kron(ops.sx, ops.sx) + kron(ops.sy, ops.sy) + kron(ops.sz, ops.sz);
    ComplexMatrix h = p.eps * ComplexMatrix::identity(9);
    h += p.j * dot;
    h += p.k * (dot * dot);
    return h;
}

ComplexMatrix total_sz(const SpinOperators& ops) {
    const ComplexMatrix id3 = ComplexMatrix::identity(3);
    return kron(ops.sz, id3) + kron(id3, ops.sz);
}

}  // namespace spinpair
