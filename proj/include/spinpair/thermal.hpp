#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "spinpair/complex_matrix.hpp"
#include "spinpair/spin_model.hpp"

namespace spinpair {

struct ThermalState {
    std::optional<ModelParams> params;  // set when built through thermal_negativity
    double t_temp = 0.0;
    double beta = 0.0;
    ComplexMatrix rho{1};
    double z = 0.0;      // Tr exp(-beta H), un-shifted convention
    double log_z = 0.0;  // always finite, even where z itself overflows
};

// rho = exp(-beta h)/Z for Hermitian h.  Boltzmann weights are taken
// relative to the ground energy, so deep-cold temperatures (down to ~1e-3 in
// this model's parameter range) stay representable.  Rejects T <= 0.
ThermalState gibbs_state(const ComplexMatrix& h, double t_temp);

// Transpose only the first factor of a dim_a x dim_b product space:
// out((a,b),(c,d)) = rho((c,b),(a,d)).  Applying it twice returns the input
// exactly.
ComplexMatrix partial_transpose_first(const ComplexMatrix& rho, std::size_t dim_a,
                                      std::size_t dim_b);

struct NegativityResult {
    double negativity = 0.0;
    std::vector<double> negative_eigenvalues;  // ascending, the mu_i <= -1e-12
    double trace_norm_value = 0.0;             // ||rho^T1||_1
    double negativity_via_trace_norm = 0.0;    // (||rho^T1||_1 - 1)/2
};

// Sum of |mu_i| over the negative eigenvalues of rho^T1, zero for separable
// inputs.  Eigenvalues in (-1e-12, 0) count as zero.  With validate set, rho
// must be a state: unit trace to 1e-10 and spectrum >= -1e-10; sweeps that
// just built rho from gibbs_state may skip the gate for throughput.
NegativityResult negativity(const ComplexMatrix& rho, std::size_t dim_a, std::size_t dim_b,
                            bool validate = true);

// Gibbs state of the XY + split-field Hamiltonian at (p, T), then its
// negativity across the site split.
std::pair<ThermalState, NegativityResult> thermal_negativity(const ModelParams& p, double t_temp,
                                                             bool validate = true);

}  // namespace spinpair
