#include "spinpair/thermal.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "spinpair/eigen_jacobi.hpp"

namespace spinpair {

ThermalState gibbs_state(const ComplexMatrix& h, double t_temp) {
    if (!(t_temp > 0.0)) {
        throw std::invalid_argument("gibbs_state: temperature must be positive, got " +
                                    std::to_string(t_temp));
    }
    const std::size_t n = h.dim();
    const EigenDecomposition eig = hermitian_eig(h);
    const double beta = 1.0 / t_temp;
    const double e0 = eig.values.front();

    // weights relative to the ground level: w_l = exp(-beta (E_l - E0))
    std::vector<double> w(n);
    double wsum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
        w[l] = std::exp(-beta * (eig.values[l] - e0));
        wsum += w[l];
    }

    ThermalState st;
    st.t_temp = t_temp;
    st.beta = beta;
    st.log_z = -beta * e0 + std::log(wsum);
    st.z = std::exp(st.log_z);
    st.rho = ComplexMatrix(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc{0.0, 0.0};
            for (std::size_t l = 0; l < n; ++l)
                acc += (w[l] / wsum) * eig.vectors(i, l) * std::conj(eig.vectors(j, l));
            if (i == j) {
                st.rho.set(i, i, acc.real());
            } else {
                st.rho.set(i, j, acc);
                st.rho.set(j, i, std::conj(acc));
            }
        }
    }
    return st;
}

ComplexMatrix partial_transpose_first(const ComplexMatrix& rho, std::size_t dim_a,
                                      std::size_t dim_b) {
    if (dim_a == 0 || dim_b == 0 || rho.dim() != dim_a * dim_b) {
        throw std::invalid_argument("partial_transpose_first: matrix dimension " +
                                    std::to_string(rho.dim()) + " does not factor as " +
                                    std::to_string(dim_a) + " x " + std::to_string(dim_b));
    }
    ComplexMatrix out(rho.dim());
    for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t b = 0; b < dim_b; ++b)
            for (std::size_t c = 0; c < dim_a; ++c)
                for (std::size_t d = 0; d < dim_b; ++d)
                    out.set(a * dim_b + b, c * dim_b + d, rho(c * dim_b + b, a * dim_b + d));
    return out;
}

NegativityResult negativity(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            bool validate) {
    if (dim_a == 0 || dim_b == 0 || rho.dim() != dim_a * dim_b) {
        throw std::invalid_argument("negativity: matrix dimension " + std::to_string(rho.dim()) +
                                    " does not factor as " + std::to_string(dim_a) + " x " +
                                    std::to_string(dim_b));
    }
    if (validate) {
        const double tr_err = std::abs(rho.trace() - Complex{1.0, 0.0});
        if (tr_err > 1e-10) {
            throw std::invalid_argument("negativity: input is not a state, |trace - 1| = " +
                                        std::to_string(tr_err));
        }
        const EigenDecomposition spec = hermitian_eig(rho);
        if (spec.values.front() < -1e-10) {
            throw std::invalid_argument("negativity: input is not a state, min eigenvalue " +
                                        std::to_string(spec.values.front()));
        }
    }

    const ComplexMatrix pt = partial_transpose_first(rho, dim_a, dim_b);
    const EigenDecomposition ptspec = hermitian_eig(pt);

    NegativityResult res;
    double abs_sum = 0.0;
    for (double mu : ptspec.values) {
        abs_sum += std::abs(mu);
        if (mu <= -1e-12) {  // anything closer to zero is roundoff
            res.negative_eigenvalues.push_back(mu);
            res.negativity += -mu;
        }
    }
    res.trace_norm_value = abs_sum;
    res.negativity_via_trace_norm = 0.5 * (abs_sum - 1.0);
    return res;
}

std::pair<ThermalState, NegativityResult> thermal_negativity(const ModelParams& p, double t_temp,
                                                             bool validate) {
    ThermalState st = gibbs_state(build_xy_field_hamiltonian(p), t_temp);
    st.params = p;
    NegativityResult res = negativity(st.rho, 3, 3, validate);
    return {std::move(st), std::move(res)};
}

}  // namespace spinpair
