#include "cartanlab/kernel/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {

std::string domain_type_name(DomainType t) {
    switch (t) {
        case DomainType::BallI: return "ball-I";
        case DomainType::SymmetricII: return "symmetric-II";
        case DomainType::SkewIII: return "skew-III";
        case DomainType::Polydisc: return "polydisc";
        case DomainType::FockSpace: return "fock";
    }
    return "unknown";
}

std::string Domain::name() const {
    switch (type) {
        case DomainType::BallI: return "ball-I(" + std::to_string(p) + "," + std::to_string(q) + ")";
        case DomainType::SymmetricII: return "symmetric-II(" + std::to_string(p) + ")";
        case DomainType::SkewIII: return "skew-III(" + std::to_string(p) + ")";
        case DomainType::Polydisc: return "polydisc(" + std::to_string(q) + ")";
        case DomainType::FockSpace: return "fock(" + std::to_string(q) + ")";
    }
    return "unknown";
}

std::string family_name(KernelFamily f) {
    switch (f) {
        case KernelFamily::HolomorphicDet: return "holomorphic-det";
        case KernelFamily::ModulusDet: return "modulus-det";
        case KernelFamily::Berezin: return "berezin";
        case KernelFamily::ExpFock: return "exp-fock";
        case KernelFamily::PolydiscProduct: return "polydisc-product";
    }
    return "unknown";
}

const std::vector<CatalogEntry>& kernel_catalog() {
    static const std::vector<CatalogEntry> table = {
        {DomainType::BallI, KernelFamily::HolomorphicDet},
        {DomainType::BallI, KernelFamily::ModulusDet},
        {DomainType::BallI, KernelFamily::Berezin},
        {DomainType::SymmetricII, KernelFamily::HolomorphicDet},
        {DomainType::SymmetricII, KernelFamily::ModulusDet},
        {DomainType::SymmetricII, KernelFamily::Berezin},
        {DomainType::SkewIII, KernelFamily::HolomorphicDet},
        {DomainType::SkewIII, KernelFamily::ModulusDet},
        {DomainType::SkewIII, KernelFamily::Berezin},
        {DomainType::Polydisc, KernelFamily::PolydiscProduct},
        {DomainType::FockSpace, KernelFamily::ExpFock},
    };
    return table;
}

bool in_catalog(const KernelSpec& spec) {
    const auto& t = kernel_catalog();
    return std::any_of(t.begin(), t.end(), [&](const CatalogEntry& e) {
        return e.domain == spec.domain.type && e.family == spec.family;
    });
}

void validate_spec(const KernelSpec& spec) {
    if (!in_catalog(spec)) {
        throw ContractError("kernel spec not in catalog: " + domain_type_name(spec.domain.type) + " / " +
                            family_name(spec.family));
    }
    const Domain& d = spec.domain;
    if (d.p < 1 || d.q < 1) throw ContractError("domain dimensions must be positive");
    if ((d.type == DomainType::SymmetricII || d.type == DomainType::SkewIII) && d.p != d.q)
        throw ContractError("type II/III domains are square");
    if (spec.family == KernelFamily::PolydiscProduct && spec.s_list.size() != static_cast<std::size_t>(d.q))
        throw ContractError("polydisc product needs one exponent per coordinate");
}

bool in_domain(const Domain& d, const ComplexMatrix& z) {
    if (z.rows() != d.rows() || z.cols() != d.cols() || !z.all_finite()) return false;
    switch (d.type) {
        case DomainType::BallI:
            return operator_norm(z) < 1.0;
        case DomainType::SymmetricII:
        case DomainType::SkewIII: {
            const double sign = d.type == DomainType::SymmetricII ? 1.0 : -1.0;
            double dev = 0.0;
            for (std::size_t i = 0; i < z.rows(); ++i)
                for (std::size_t j = 0; j < z.cols(); ++j) dev = std::max(dev, std::abs(z(i, j) - sign * z(j, i)));
            return dev <= 1e-12 && operator_norm(z) < 1.0;
        }
        case DomainType::Polydisc:
            for (std::size_t k = 0; k < z.cols(); ++k)
                if (std::abs(z(0, k)) >= 1.0) return false;
            return true;
        case DomainType::FockSpace:
            return true;
    }
    return false;
}

void require_in_domain(const Domain& d, const ComplexMatrix& z) {
    if (!in_domain(d, z)) throw ContractError("point violates the domain predicate of " + d.name());
}

cplx kernel_value(const KernelSpec& spec, const ComplexMatrix& z, const ComplexMatrix& u) {
    validate_spec(spec);
    require_in_domain(spec.domain, z);
    require_in_domain(spec.domain, u);
    switch (spec.family) {
        case KernelFamily::HolomorphicDet:
            return principal_det_power(z * u.adjoint(), spec.s);
        case KernelFamily::ModulusDet:
            return std::norm(principal_det_power(z * u.adjoint(), spec.s));
        case KernelFamily::Berezin: {
            const std::size_t p = z.rows();
            const ComplexMatrix I = ComplexMatrix::identity(p);
            const cplx dz = determinant(I - z * z.adjoint());
            const cplx du = determinant(I - u * u.adjoint());
            const cplx dzu = determinant(I - z * u.adjoint());
            return std::pow(std::abs(dz * du / (dzu * dzu)), spec.s);
        }
        case KernelFamily::ExpFock: {
            cplx acc = 0.0;
            for (std::size_t k = 0; k < z.cols(); ++k) acc += z(0, k) * std::conj(u(0, k));
            return std::exp(acc);
        }
        case KernelFamily::PolydiscProduct: {
            cplx acc = 1.0;
            for (std::size_t k = 0; k < z.cols(); ++k)
                acc *= std::pow(1.0 - z(0, k) * std::conj(u(0, k)), -spec.s_list[k]);
            return acc;
        }
    }
    throw ContractError("kernel_value: unknown family");
}

}  // namespace cartan
