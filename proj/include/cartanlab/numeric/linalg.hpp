#pragma once

#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

struct LuFactor {
    ComplexMatrix lu;            // unit-lower L below the diagonal, U on and above
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

LuFactor lu_factor(const ComplexMatrix& A);
cplx determinant(const ComplexMatrix& A);
// Solves A X = B. Throws ConditioningError if A is singular.
ComplexMatrix solve(const ComplexMatrix& A, const ComplexMatrix& B);
ComplexMatrix inverse(const ComplexMatrix& A);
// ||A||_1 ||A^{-1}||_1; +inf when singular.
double condition_number_1(const ComplexMatrix& A);

// Upper bound on the spectral radius from Gelfand's formula on repeated squares.
double spectral_radius_bound(const ComplexMatrix& A);

// exp(-s tr log(I - A)) with the principal branch of log(I - A) given by its
// power series. Throws DivergenceError when the spectral radius of A is not
// certified below 1 - 1e-12.
cplx principal_det_power(const ComplexMatrix& A, double s);
// tr log(I - A) by the same series.
cplx trace_log_one_minus(const ComplexMatrix& A);

ComplexMatrix matrix_exp(const ComplexMatrix& X);

// Largest singular value from the top eigenvalue of M* M.
double operator_norm(const ComplexMatrix& M);
// All min(r, c) singular values in descending order, computed through the
// Hermitian dilation [0 M; M* 0] so small values keep absolute accuracy.
std::vector<double> singular_values(const ComplexMatrix& M);

}  // namespace cartan
