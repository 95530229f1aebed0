#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinpair/complex_matrix.hpp"

namespace spinpair {

// Raised when the rotation sweeps fail to push the off-diagonal mass under
// tolerance within the sweep budget; carries the relative residual reached.
class NoConvergenceError : public std::runtime_error {
public:
    NoConvergenceError(const std::string& what, double residual_reached)
        : std::runtime_error(what), residual(residual_reached) {}
    double residual;
};

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]

    std::vector<Complex> vector(std::size_t k) const;
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.
//
// The input must be Hermitian to 1e-12 (max entry defect) and is symmetrized
// as (A + A^H)/2 before the sweeps.  A sweep rotates every (p, q) plane once;
// convergence is declared when the off-diagonal Frobenius mass drops below
// tol * ||A||_F, after which one extra sweep runs so the remaining mass sits
// at roundoff level.  Equal eigenvalues are ordered by the index of the
// largest-magnitude component of their eigenvector, and each eigenvector is
// rephased so that component is real positive.
EigenDecomposition hermitian_eig(const ComplexMatrix& a, double tol = 1e-12, int max_sweeps = 100);

// Sum of |eigenvalue| over the spectrum of a Hermitian matrix.
double trace_norm(const ComplexMatrix& a);

}  // namespace spinpair
