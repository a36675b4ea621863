#pragma once

#include <string>
#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

enum class DomainType { BallI, SymmetricII, SkewIII, Polydisc, FockSpace };

// Matrix domains use p x q (BallI) or n x n (II/III) points; Polydisc and
// FockSpace use 1 x n row vectors.
struct Domain {
    DomainType type = DomainType::BallI;
    int p = 1;
    int q = 1;

    static Domain ball(int p, int q) { return {DomainType::BallI, p, q}; }
    static Domain symmetric(int n) { return {DomainType::SymmetricII, n, n}; }
    static Domain skew(int n) { return {DomainType::SkewIII, n, n}; }
    static Domain polydisc(int n) { return {DomainType::Polydisc, 1, n}; }
    static Domain fock(int n) { return {DomainType::FockSpace, 1, n}; }

    bool is_matrix_ball() const noexcept {
        return type == DomainType::BallI || type == DomainType::SymmetricII || type == DomainType::SkewIII;
    }
    std::size_t rows() const noexcept { return static_cast<std::size_t>(p); }
    std::size_t cols() const noexcept { return static_cast<std::size_t>(q); }
    std::string name() const;
    bool operator==(const Domain&) const = default;
};

enum class KernelFamily { HolomorphicDet, ModulusDet, Berezin, ExpFock, PolydiscProduct };

struct KernelSpec {
    Domain domain;
    KernelFamily family = KernelFamily::HolomorphicDet;
    double s = 1.0;
    std::vector<double> s_list;  // PolydiscProduct exponents, one per coordinate

    static KernelSpec holomorphic_det(Domain d, double s) { return {d, KernelFamily::HolomorphicDet, s, {}}; }
    static KernelSpec modulus_det(Domain d, double s) { return {d, KernelFamily::ModulusDet, s, {}}; }
    static KernelSpec berezin(Domain d, double s) { return {d, KernelFamily::Berezin, s, {}}; }
    static KernelSpec exp_fock(int n) { return {Domain::fock(n), KernelFamily::ExpFock, 0.0, {}}; }
    static KernelSpec polydisc_product(std::vector<double> s) {
        const int n = static_cast<int>(s.size());
        return {Domain::polydisc(n), KernelFamily::PolydiscProduct, 0.0, std::move(s)};
    }
};

std::string family_name(KernelFamily f);
std::string domain_type_name(DomainType t);

struct CatalogEntry {
    DomainType domain;
    KernelFamily family;
};

// Supported (domain, family) pairs.
const std::vector<CatalogEntry>& kernel_catalog();
bool in_catalog(const KernelSpec& spec);
// Throws ContractError when the (domain, family) pair is not in the catalog or the parameters are malformed.
void validate_spec(const KernelSpec& spec);

// Residual of the defining predicate: operator norm for the balls (must be
// < 1), max |z_k| for the polydisc; symmetry is checked separately.
bool in_domain(const Domain& d, const ComplexMatrix& z);
void require_in_domain(const Domain& d, const ComplexMatrix& z);

cplx kernel_value(const KernelSpec& spec, const ComplexMatrix& z, const ComplexMatrix& u);

}  // namespace cartan
