#pragma once

#include "spinpair/complex_matrix.hpp"

namespace spinpair {

// Spin-1 operators in the |+1>, |0>, |-1> basis:
//   Sx = (1/sqrt2) [[0,1,0],[1,0,1],[0,1,0]]
//   Sy = (1/sqrt2) [[0,-i,0],[i,0,-i],[0,i,0]]
//   Sz = diag(1, 0, -1)
struct SpinOperators {
    ComplexMatrix sx{3}, sy{3}, sz{3};
};
SpinOperators spin1_operators();

// Two-site product basis |m1,m2>, first factor major:
// (1,1),(1,0),(1,-1),(0,1),(0,0),(0,-1),(-1,1),(-1,0),(-1,-1).
std::size_t product_basis_index(int m1, int m2);

struct ModelParams {
    double j_coupling = 1.0;  // exchange strength, sets the energy unit
    double b_field = 0.0;     // field magnitude B
    double theta = 0.0;       // field split: B cos(theta) on site 1, B sin(theta) on site 2
    void validate() const;    // finite parameters, j_coupling > 0
};

// H = J (S1x S2x + S1y S2y) + B cos(theta) S1z + B sin(theta) S2z.
// Real symmetric in the product basis; commutes with S1z + S2z.
ComplexMatrix build_xy_field_hamiltonian(const ModelParams& p);

struct BilinearBiquadraticParams {
    double j = 1.0;    // S1.S2 coefficient
    double k = 0.0;    // (S1.S2)^2 coefficient
    double eps = 0.0;  // constant shift, eps * identity
    void validate() const;
};

// H = eps I + J (S1.S2) + K (S1.S2)^2 on the same 9-dim product space.
ComplexMatrix build_bilinear_biquadratic(const BilinearBiquadraticParams& p);

// S1z + S2z on the product space; diagonal with entries m1 + m2.
ComplexMatrix total_sz(const SpinOperators& ops);

}  // namespace spinpair
