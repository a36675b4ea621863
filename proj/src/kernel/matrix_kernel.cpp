#include "cartanlab/kernel/matrix_kernel.hpp"

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {

std::size_t MatrixKernelSpec::value_dim() const {
    switch (rho) {
        case MatrixRho::DetPower: return static_cast<std::size_t>(multiplicity);
        case MatrixRho::Defining:
        case MatrixRho::DetPowerDefining: return domain.rows() * domain.cols();
    }
    return 0;
}

std::string rho_name(MatrixRho r) {
    switch (r) {
        case MatrixRho::DetPower: return "DetPower";
        case MatrixRho::Defining: return "Defining";
        case MatrixRho::DetPowerDefining: return "DetPowerDefining";
    }
    return "?";
}

ComplexMatrix matrix_kernel_value(const MatrixKernelSpec& m, const ComplexMatrix& z, const ComplexMatrix& u) {
    if (m.domain.type != DomainType::BallI) throw ContractError("matrix kernel: only BallI(p,q) domains");
    if (m.rho == MatrixRho::DetPower && m.multiplicity < 1) throw ContractError("matrix kernel: multiplicity < 1");
    require_in_domain(m.domain, z);
    require_in_domain(m.domain, u);
    const std::size_t p = m.domain.rows(), q = m.domain.cols();
    const ComplexMatrix zu = z * u.adjoint();
    if (m.rho == MatrixRho::DetPower) {
        return principal_det_power(zu, m.s) * ComplexMatrix::identity(m.value_dim());
    }
    ComplexMatrix L = kronecker(ComplexMatrix::identity(p) - zu, ComplexMatrix::identity(q) - u.adjoint() * z);
    if (m.rho == MatrixRho::DetPowerDefining) L *= principal_det_power(zu, m.s);
    return L;
}

ComplexMatrix matrix_gram(const MatrixKernelSpec& m, const LiftedConfig& config) {
    const std::size_t n = config.points.size();
    if (config.vectors.size() != n) throw ContractError("matrix_gram: points and vectors differ in length");
    const std::size_t d = m.value_dim();
    for (const auto& v : config.vectors)
        if (v.size() != d) throw ContractError("matrix_gram: vector dimension does not match the value space");
    ComplexMatrix G(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix L = matrix_kernel_value(m, config.points[j], config.points[i]);
            cplx acc = 0.0;
            for (std::size_t a = 0; a < d; ++a) {
                cplx row = 0.0;
                for (std::size_t b = 0; b < d; ++b) row += L(a, b) * config.vectors[j][b];
                acc += std::conj(config.vectors[i][a]) * row;
            }
            G(i, j) = acc;
        }
    }
    return G;
}

}  // namespace cartan
