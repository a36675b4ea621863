#include "cartanlab/ball/shilov.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/kernel/sampling.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {

double shilov_residual(const ComplexMatrix& z) {
    return max_abs_diff(z * z.adjoint(), ComplexMatrix::identity(z.rows()));
}

ComplexMatrix shilov_sample(int p, int q, std::uint64_t seed) {
    if (p < 1 || p > q) throw ContractError("shilov_sample: needs 1 <= p <= q");
    Rng rng(seed);
    for (int attempt = 0; attempt < 16; ++attempt) {
        ComplexMatrix z(p, q);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < q; ++j) z(i, j) = rng.complex_normal();
        bool ok = true;
        // Modified Gram-Schmidt on the rows, twice for stability.
        for (int pass = 0; pass < 2 && ok; ++pass) {
            for (int i = 0; i < p && ok; ++i) {
                for (int k = 0; k < i; ++k) {
                    cplx dot = 0.0;
                    for (int j = 0; j < q; ++j) dot += std::conj(z(k, j)) * z(i, j);
                    for (int j = 0; j < q; ++j) z(i, j) -= dot * z(k, j);
                }
                double nrm = 0.0;
                for (int j = 0; j < q; ++j) nrm += std::norm(z(i, j));
                nrm = std::sqrt(nrm);
                if (nrm < 1e-8) ok = false;
                else
                    for (int j = 0; j < q; ++j) z(i, j) /= nrm;
            }
        }
        if (ok && shilov_residual(z) <= kShilovTolerance) return z;
    }
    throw GenerationError("shilov_sample: repeated rank-deficient draws");
}

std::pair<ComplexMatrix, ComplexMatrix> shilov_pair(int p, int q, int alpha, std::uint64_t seed) {
    if (alpha < 0 || alpha > p) throw ContractError("shilov_pair: alpha must lie in 0..p");
    const ComplexMatrix z = shilov_sample(p, q, derive_seed(seed, 0));
    Rng rng(derive_seed(seed, 1));
    const ComplexMatrix W = haar_unitary(static_cast<std::size_t>(p), rng);
    ComplexMatrix V = ComplexMatrix::identity(p);
    for (int k = 0; k < alpha; ++k) {
        // Keep 1 - e^{i theta} away from zero so the rank is unambiguous.
        const double theta = rng.uniform(0.5, 2.0 * std::numbers::pi - 0.5);
        const cplx m = std::polar(1.0, theta) - 1.0;
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) V(i, j) += m * W(i, k) * std::conj(W(j, k));
    }
    return {z, (V * z).conjugate()};
}

int orbit_invariant(const ComplexMatrix& z, const ComplexMatrix& u, double tol) {
    if (z.rows() != u.rows() || z.cols() != u.cols()) throw ContractError("orbit_invariant: shapes differ");
    const ComplexMatrix diff = z - u.conjugate();
    const std::vector<double> sv = singular_values(diff);
    const double cut = tol * std::max(1.0, sv.empty() ? 0.0 : sv.front());
    return static_cast<int>(std::count_if(sv.begin(), sv.end(), [cut](double x) { return x > cut; }));
}

std::pair<ComplexMatrix, ComplexMatrix> act_on_pair(const GroupElement& g, const ComplexMatrix& z,
                                                    const ComplexMatrix& u) {
    const GroupElement gbar{g.type, g.p, g.q, g.matrix.conjugate()};
    return {mobius_boundary(g, z), mobius_boundary(gbar, u)};
}

}  // namespace cartan
