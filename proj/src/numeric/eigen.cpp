#include "cartanlab/numeric/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cartanlab/core/error.hpp"

namespace cartan {

namespace {

void check_hermitian(const ComplexMatrix& M, double scale) {
    if (!M.is_square()) throw ContractError("hermitian_eigen: matrix not square");
    double dev = 0.0;
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = i; j < M.cols(); ++j)
            dev = std::max(dev, std::abs(M(i, j) - std::conj(M(j, i))));
    if (dev > 1e-10 * scale) throw ContractError("hermitian_eigen: matrix is not Hermitian");
}

double off_diagonal(const ComplexMatrix& A) {
    double s = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j)
            if (i != j) s += std::norm(A(i, j));
    return std::sqrt(s);
}

EigenResult jacobi(const ComplexMatrix& M, bool want_vectors) {
    const std::size_t n = M.rows();
    const double scale = M.frobenius_norm();
    check_hermitian(M, scale);

    ComplexMatrix A = M;
    for (std::size_t i = 0; i < n; ++i) A(i, i) = A(i, i).real();
    ComplexMatrix W = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();

    int sweep = 0;
    const double stop = kJacobiThreshold * scale;
    while (sweep < kJacobiMaxSweeps && off_diagonal(A) > stop) {
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = A(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-300 || mag < 1e-3 * stop / static_cast<double>(n)) continue;
                const cplx e = std::conj(apq / mag);
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx vpp = c, vpq = s, vqp = -s * e, vqq = c * e;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = A(k, p), akq = A(k, q);
                    A(k, p) = akp * vpp + akq * vqp;
                    A(k, q) = akp * vpq + akq * vqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = A(p, k), aqk = A(q, k);
                    A(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
                    A(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
                }
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                A(p, p) = app - t * mag;
                A(q, q) = aqq + t * mag;
                if (want_vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx wkp = W(k, p), wkq = W(k, q);
                        W(k, p) = wkp * vpp + wkq * vqp;
                        W(k, q) = wkp * vpq + wkq * vqq;
                    }
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return A(i, i).real() < A(j, j).real(); });
    EigenResult r;
    r.sweeps = sweep;
    r.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) r.eigenvalues[i] = A(order[i], order[i]).real();
    if (want_vectors) {
        r.vectors = ComplexMatrix(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r.vectors(k, j) = W(k, order[j]);
    }
    return r;
}

}  // namespace

EigenResult hermitian_eigen(const ComplexMatrix& M) { return jacobi(M, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& M) {
    return jacobi(M, false).eigenvalues;
}

}  // namespace cartan
