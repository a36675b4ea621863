#include "cartanlab/numeric/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/eigen.hpp"

namespace cartan {

namespace {

double norm_1(const ComplexMatrix& A) {
    double best = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < A.rows(); ++i) s += std::abs(A(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace

LuFactor lu_factor(const ComplexMatrix& A) {
    if (!A.is_square()) throw ContractError("lu_factor: matrix not square");
    const std::size_t n = A.rows();
    LuFactor f;
    f.lu = A;
    f.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.perm[i] = i;
    ComplexMatrix& m = f.lu;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                piv = i;
            }
        }
        if (best == 0.0) {
            f.singular = true;
            continue;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx l = m(i, k) / m(k, k);
            m(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
        }
    }
    return f;
}

cplx determinant(const ComplexMatrix& A) {
    const LuFactor f = lu_factor(A);
    if (f.singular) return 0.0;
    cplx d = static_cast<double>(f.sign);
    for (std::size_t i = 0; i < A.rows(); ++i) d *= f.lu(i, i);
    return d;
}

ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B) {
    if (A.rows() != B.rows()) throw ContractError("solve: dimension mismatch");
    const LuFactor f = lu_factor(A);
    if (f.singular) throw ConditioningError("solve: singular matrix");
    const std::size_t n = A.rows();
    ComplexMatrix X(n, B.cols());
    for (std::size_t c = 0; c < B.cols(); ++c) {
        std::vector<cplx> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            cplx v = B(f.perm[i], c);
            for (std::size_t j = 0; j < i; ++j) v -= f.lu(i, j) * y[j];
            y[i] = v;
        }
        for (std::size_t ii = n; ii-- > 0;) {
            cplx v = y[ii];
            for (std::size_t j = ii + 1; j < n; ++j) v -= f.lu(ii, j) * X(j, c);
            X(ii, c) = v / f.lu(ii, ii);
        }
    }
    return X;
}

ComplexMatrix inverse(const ComplexMatrix& A) {
    return solve(A, ComplexMatrix::identity(A.rows()));
}

double condition_number_1(const ComplexMatrix& A) {
    const LuFactor f = lu_factor(A);
    if (f.singular) return std::numeric_limits<double>::infinity();
    return norm_1(A) * norm_1(inverse(A));
}

double spectral_radius_bound(const ComplexMatrix& A) {
    if (!A.is_square()) throw ContractError("spectral_radius_bound: matrix not square");
    double best = operator_norm(A);
    ComplexMatrix P = A;
    double exponent = 1.0;
    for (int m = 0; m < 6 && best > 0.0; ++m) {
        const double nrm = P.frobenius_norm();
        if (nrm == 0.0) return 0.0;
        if (!std::isfinite(nrm) || nrm > 1e150) break;
        // Frobenius bounds the operator norm, so the root stays an upper bound.
        best = std::min(best, std::pow(nrm, 1.0 / exponent));
        P = P * P;
        exponent *= 2.0;
    }
    return best;
}

cplx trace_log_one_minus(const ComplexMatrix& A) {
    if (!A.is_square()) throw ContractError("principal_det_power: matrix not square");
    const double rho = spectral_radius_bound(A);
    if (rho >= 1.0 - 1e-12) {
        throw DivergenceError("principal_det_power: spectral radius not below 1");
    }
    cplx sum = 0.0;
    ComplexMatrix T = A;
    constexpr long kMaxTerms = 50'000'000;
    for (long k = 1; k <= kMaxTerms; ++k) {
        const double nrm = T.frobenius_norm();
        if (nrm / static_cast<double>(k) < 1e-16) return -sum;
        sum += T.trace() / static_cast<double>(k);
        T = T * A;
    }
    throw DivergenceError("principal_det_power: series did not converge");
}

cplx principal_det_power(const ComplexMatrix& A, double s) {
    if (s == 0.0) return 1.0;
    if (A.is_square() && A.max_abs() == 0.0) return 1.0;
    const cplx L = trace_log_one_minus(A);
    return std::exp(-s * L);
}

ComplexMatrix matrix_exp(const ComplexMatrix& X) {
    if (!X.is_square()) throw ContractError("matrix_exp: matrix not square");
    if (!X.all_finite()) throw ContractError("matrix_exp: non-finite entry");
    const std::size_t n = X.rows();
    const double nrm = norm_1(X);
    int squarings = 0;
    if (nrm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    const ComplexMatrix Y = X * cplx(std::ldexp(1.0, -squarings), 0.0);
    ComplexMatrix result = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 24; ++k) {
        term = term * Y;
        term *= cplx(1.0 / k, 0.0);
        result += term;
        if (term.max_abs() < 1e-18 * result.max_abs()) break;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

double operator_norm(const ComplexMatrix& M) {
    if (M.empty()) return 0.0;
    const ComplexMatrix G = M.rows() >= M.cols() ? M.adjoint() * M : M * M.adjoint();
    ComplexMatrix H = G;
    // Force exact Hermitian symmetry; the product is Hermitian only up to rounding.
    for (std::size_t i = 0; i < H.rows(); ++i) {
        H(i, i) = H(i, i).real();
        for (std::size_t j = i + 1; j < H.cols(); ++j) H(j, i) = std::conj(H(i, j));
    }
    const auto ev = hermitian_eigenvalues(H);
    return std::sqrt(std::max(0.0, ev.back()));
}

std::vector<double> singular_values(const ComplexMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    const std::size_t k = std::min(r, c);
    if (k == 0) return {};
    ComplexMatrix D(r + c, r + c);
    D.set_block(0, r, M);
    D.set_block(r, 0, M.adjoint());
    auto ev = hermitian_eigenvalues(D);
    std::vector<double> sv(ev.rbegin(), ev.rbegin() + static_cast<long>(k));
    for (auto& v : sv) v = std::max(0.0, v);
    return sv;
}

}  // namespace cartan
