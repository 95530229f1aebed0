#include "spinpair/eigen_jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace spinpair {

std::vector<Complex> EigenDecomposition::vector(std::size_t k) const {
    const std::size_t n = vectors.dim();
    if (k >= n) throw std::out_of_range("EigenDecomposition::vector: index out of range");
    std::vector<Complex> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vectors(i, k);
    return v;
}

namespace {

// Column-major work layout would not buy anything at these sizes; keep the
// matrix row-major in a flat buffer and index by hand.
struct Work {
    std::size_t n;
    std::vector<Complex> a;  // current matrix, kept Hermitian
    std::vector<Complex> v;  // accumulated unitary, columns are eigenvectors

    Complex& A(std::size_t i, std::size_t j) { return a[i * n + j]; }
    Complex& V(std::size_t i, std::size_t j) { return v[i * n + j]; }

    double off_mass() const {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += std::norm(a[i * n + j]);
        return std::sqrt(s);
    }

    // One unitary plane rotation annihilating A(p, q).  With the phase of
    // A(p, q) pulled out, the (p, q) block is real symmetric and the classic
    // small-angle tangent t solves t^2 + 2 tau t - 1 = 0.
    void rotate(std::size_t p, std::size_t q) {
        const Complex apq = A(p, q);
        const double ab = std::abs(apq);
        if (ab == 0.0) return;
        const Complex phase = apq / ab;  // A(p,q) = ab * phase
        const double tau = (A(q, q).real() - A(p, p).real()) / (2.0 * ab);
        const double root = std::sqrt(1.0 + tau * tau);
        const double t = (tau >= 0.0) ? 1.0 / (tau + root) : 1.0 / (tau - root);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // U restricted to the (p, q) plane:
        //   U(p,p) = c       U(p,q) = s
        //   U(q,p) = -s ph*  U(q,q) = c ph*
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (std::size_t r = 0; r < n; ++r) {  // columns: A <- A U
            const Complex arp = A(r, p);
            const Complex arq = A(r, q);
            A(r, p) = c * arp + uqp * arq;
            A(r, q) = s * arp + uqq * arq;
        }
        for (std::size_t cidx = 0; cidx < n; ++cidx) {  // rows: A <- U^H A
            const Complex apc = A(p, cidx);
            const Complex aqc = A(q, cidx);
            A(p, cidx) = c * apc + std::conj(uqp) * aqc;
            A(q, cidx) = s * apc + std::conj(uqq) * aqc;
        }
        for (std::size_t r = 0; r < n; ++r) {  // eigenvectors: V <- V U
            const Complex vrp = V(r, p);
            const Complex vrq = V(r, q);
            V(r, p) = c * vrp + uqp * vrq;
            V(r, q) = s * vrp + uqq * vrq;
        }

        // The rotation zeroed these analytically; pin them to keep the
        // matrix exactly Hermitian.
        A(p, q) = 0.0;
        A(q, p) = 0.0;
        A(p, p) = A(p, p).real();
        A(q, q) = A(q, q).real();
    }

    void sweep() {
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(p, q);
    }
};

std::size_t dominant_component(const std::vector<Complex>& col) {
    std::size_t best = 0;
    double best_mag = std::abs(col[0]);
    for (std::size_t i = 1; i < col.size(); ++i) {
        const double m = std::abs(col[i]);
        if (m > best_mag) {
            best_mag = m;
            best = i;
        }
    }
    return best;
}

}  // namespace

EigenDecomposition hermitian_eig(const ComplexMatrix& input, double tol, int max_sweeps) {
    if (!(tol > 0.0)) throw std::invalid_argument("hermitian_eig: tol must be positive");
    if (max_sweeps < 0) throw std::invalid_argument("hermitian_eig: max_sweeps must be >= 0");

    const double defect = input.hermitian_defect();
    if (!(defect <= 1e-12)) {
        throw std::invalid_argument("hermitian_eig: input is not Hermitian (defect " +
                                    std::to_string(defect) + " > 1e-12)");
    }

    const std::size_t n = input.dim();
    Work w{n, std::vector<Complex>(n * n), std::vector<Complex>(n * n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            w.A(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));
        w.A(i, i) = w.A(i, i).real();
        w.V(i, i) = 1.0;
    }

    double norm_f = 0.0;
    for (const Complex& x : w.a) norm_f += std::norm(x);
    norm_f = std::sqrt(norm_f);

    const double threshold = tol * norm_f;
    bool converged = w.off_mass() <= threshold;
    int sweeps = 0;
    while (!converged) {
        if (sweeps >= max_sweeps) {
            const double rel = norm_f > 0.0 ? w.off_mass() / norm_f : 0.0;
            throw NoConvergenceError("hermitian_eig: no convergence after " +
                                         std::to_string(max_sweeps) +
                                         " sweeps, relative off-diagonal residual " +
                                         std::to_string(rel),
                                     rel);
        }
        w.sweep();
        ++sweeps;
        converged = w.off_mass() <= threshold;
    }
    // Quadratic convergence makes one polish sweep enough to land the
    // off-diagonal mass at roundoff rather than just under tol.
    w.sweep();

    struct Pair {
        double value;
        std::vector<Complex> col;
        std::size_t dom;
    };
    std::vector<Pair> pairs(n);
    for (std::size_t k = 0; k < n; ++k) {
        pairs[k].value = w.A(k, k).real();
        pairs[k].col.resize(n);
        for (std::size_t i = 0; i < n; ++i) pairs[k].col[i] = w.V(i, k);
        pairs[k].dom = dominant_component(pairs[k].col);
        // canonical phase: the dominant component becomes real positive
        const Complex d = pairs[k].col[pairs[k].dom];
        const double dm = std::abs(d);
        if (dm > 0.0) {
            const Complex ph = std::conj(d) / dm;
            for (Complex& x : pairs[k].col) x *= ph;
            pairs[k].col[pairs[k].dom] = dm;
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.dom < b.dom;
    });

    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = pairs[k].value;
        for (std::size_t i = 0; i < n; ++i) out.vectors.set(i, k, pairs[k].col[i]);
    }
    return out;
}

double trace_norm(const ComplexMatrix& a) {
    const EigenDecomposition d = hermitian_eig(a);
    return std::accumulate(d.values.begin(), d.values.end(), 0.0,
                           [](double s, double v) { return s + std::abs(v); });
}

}  // namespace spinpair
