#pragma once

#include <vector>

#include "cartanlab/kernel/kernel.hpp"

namespace cartan {

enum class MatrixRho {
    DetPower,          // det^{-s}(1 - z u*) times the identity of C^multiplicity
    Defining,          // (1 - z u*) (x) (1 - u* z) on C^p (x) C^q
    DetPowerDefining,  // product of the two
};

struct MatrixKernelSpec {
    Domain domain;  // BallI(p, q)
    MatrixRho rho = MatrixRho::DetPower;
    double s = 1.0;
    int multiplicity = 1;  // DetPower only

    std::size_t value_dim() const;
};

std::string rho_name(MatrixRho r);

// L(z, u) as a value_dim x value_dim matrix.
ComplexMatrix matrix_kernel_value(const MatrixKernelSpec& m, const ComplexMatrix& z, const ComplexMatrix& u);

struct LiftedConfig {
    std::vector<ComplexMatrix> points;
    std::vector<std::vector<cplx>> vectors;
};

// G_ij = <L(z_j, z_i) xi_j, xi_i>.
ComplexMatrix matrix_gram(const MatrixKernelSpec& m, const LiftedConfig& config);

}  // namespace cartan
