#pragma once

#include <vector>

#include "cartanlab/ball/group.hpp"

namespace cartan {

// exp(-s log det M) with the principal logarithm of the determinant.
cplx det_power(const ComplexMatrix& M, double s);

// Relative residual of K_s(z^{[g]}, u^{[g]}) det^{-s}(a+zc) conj(det^{-s}(a+uc))
// against K_s(z, u). Integer s compares complex values; other s compare moduli,
// since the branch of det^{-s}(a+zc) is not fixed along the group.
double cocycle_residual(const GroupElement& g, const ComplexMatrix& z, const ComplexMatrix& u, double s);

// Relative residual of L_s(z^{[g]}, u^{[g]}) |det(a+zc)|^{-2s} |det(a+uc)|^{-2s}
// against L_s(z, u).
double kernel_rep_covariance(const GroupElement& g, const ComplexMatrix& z, const ComplexMatrix& u, double s);

// M(z1, z2; u1, u2) = det^{-s}(1 - z1 u1*) det^{-s}(1 - z2 u2*)
cplx doubled_kernel(const Domain& d, double s, const ComplexMatrix& z1, const ComplexMatrix& z2,
                    const ComplexMatrix& u1, const ComplexMatrix& u2);

// F(z1, z2) = sum_i alpha_i M(z1, z2; u1_i, u2_i)
struct DoubledExpansion {
    Domain domain;
    double s = 1.0;
    std::vector<ComplexMatrix> u1;
    std::vector<ComplexMatrix> u2;
    std::vector<cplx> coefficients;
};

cplx evaluate(const DoubledExpansion& F, const ComplexMatrix& z1, const ComplexMatrix& z2);
// (I F)(z) = F(z, conj(z))
cplx diag_identification(const DoubledExpansion& F, const ComplexMatrix& z);

}  // namespace cartan
