#pragma once

#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix vectors;            // column i pairs with eigenvalues[i]
    int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 30;
inline constexpr double kJacobiThreshold = 1e-14;

// Cyclic complex Jacobi. Throws ContractError when ||M - M*|| > 1e-10 ||M||.
EigenResult hermitian_eigen(const ComplexMatrix& M);

// Eigenvalues only (same algorithm without accumulating vectors).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& M);

}  // namespace cartan
