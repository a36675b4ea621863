#pragma once

#include <cmath>

#include "cartanlab/core/rng.hpp"
#include "cartanlab/numeric/complex_matrix.hpp"

namespace testing {

using cartan::ComplexMatrix;
using cartan::cplx;

inline ComplexMatrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
    cartan::Rng rng(seed);
    ComplexMatrix M(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) M(i, j) = rng.complex_normal();
    return M;
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
    const ComplexMatrix A = random_matrix(n, n, seed);
    return 0.5 * (A + A.adjoint());
}

// Gaussian elimination with partial pivoting, written independently of the
// library LU.
inline cplx naive_det(ComplexMatrix A) {
    const std::size_t n = A.rows();
    cplx det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > std::abs(A(piv, k))) piv = i;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(piv, j));
            det = -det;
        }
        det *= A(k, k);
        if (A(k, k) == cplx(0.0)) return 0.0;
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = A(i, k) / A(k, k);
            for (std::size_t j = k; j < n; ++j) A(i, j) -= f * A(k, j);
        }
    }
    return det;
}

// Largest singular value by power iteration on M* M.
inline double power_iteration_norm(const ComplexMatrix& M, int iters = 2000) {
    const ComplexMatrix A = M.adjoint() * M;
    ComplexMatrix v(A.rows(), 1);
    for (std::size_t i = 0; i < v.rows(); ++i) v(i, 0) = cplx(1.0 + 0.1 * i, 0.3);
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        ComplexMatrix w = A * v;
        const double n = w.frobenius_norm();
        lambda = n / v.frobenius_norm();
        v = (1.0 / n) * w;
    }
    return std::sqrt(lambda);
}

inline double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace testing
