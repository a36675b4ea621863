#include "cartanlab/ball/cocycle.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {
namespace {

bool is_integer(double s) { return std::abs(s - std::round(s)) < 1e-14; }

}  // namespace

cplx det_power(const ComplexMatrix& M, double s) {
    const cplx det = determinant(M);
    if (det == 0.0) throw SingularityError("det_power: singular matrix");
    return std::exp(-s * std::log(det));
}

double cocycle_residual(const GroupElement& g, const ComplexMatrix& z, const ComplexMatrix& u, double s) {
    const Domain dom = g.domain();
    require_in_domain(dom, z);
    require_in_domain(dom, u);
    const KernelSpec K = KernelSpec::holomorphic_det(dom, s);
    const cplx before = kernel_value(K, z, u);
    const cplx after = kernel_value(K, mobius(g, z), mobius(g, u));
    const cplx fz = det_power(g.a() + z * g.c(), s);
    const cplx fu = det_power(g.a() + u * g.c(), s);
    const double scale = std::abs(before);
    if (is_integer(s)) return std::abs(after * fz * std::conj(fu) - before) / scale;
    return std::abs(std::abs(after) * std::abs(fz) * std::abs(fu) - scale) / scale;
}

double kernel_rep_covariance(const GroupElement& g, const ComplexMatrix& z, const ComplexMatrix& u, double s) {
    const Domain dom = g.domain();
    require_in_domain(dom, z);
    require_in_domain(dom, u);
    const KernelSpec L = KernelSpec::modulus_det(dom, s);
    const double before = kernel_value(L, z, u).real();
    const double after = kernel_value(L, mobius(g, z), mobius(g, u)).real();
    const double fz = std::pow(std::abs(determinant(g.a() + z * g.c())), -2.0 * s);
    const double fu = std::pow(std::abs(determinant(g.a() + u * g.c())), -2.0 * s);
    return std::abs(after * fz * fu - before) / before;
}

cplx doubled_kernel(const Domain& d, double s, const ComplexMatrix& z1, const ComplexMatrix& z2,
                    const ComplexMatrix& u1, const ComplexMatrix& u2) {
    const KernelSpec K = KernelSpec::holomorphic_det(d, s);
    return kernel_value(K, z1, u1) * kernel_value(K, z2, u2);
}

cplx evaluate(const DoubledExpansion& F, const ComplexMatrix& z1, const ComplexMatrix& z2) {
    const std::size_t n = F.coefficients.size();
    if (F.u1.size() != n || F.u2.size() != n) throw ContractError("doubled expansion: lengths differ");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += F.coefficients[i] * doubled_kernel(F.domain, F.s, z1, z2, F.u1[i], F.u2[i]);
    return acc;
}

cplx diag_identification(const DoubledExpansion& F, const ComplexMatrix& z) {
    require_in_domain(F.domain, z);
    return evaluate(F, z, z.conjugate());
}

}  // namespace cartan
