#pragma once

#include <cstdint>
#include <string>

#include "cartanlab/kernel/kernel.hpp"

namespace cartan {

enum class GroupType {
    UPQ,     // g J g* = J, J = diag(1_p, -1_q)
    SP2N,    // g J g* = J and g W g^t = W with W = (0, 1; -1, 0); then c = conj(b), d = conj(a)
    SOSTAR,  // g J g* = J and g P g^t = P with P = (0, 1; 1, 0); then c = -conj(b), d = conj(a)
};

std::string group_name(GroupType t);

inline constexpr double kGroupFormTolerance = 1e-10;
inline constexpr double kMobiusConditionLimit = 1e12;

struct GroupElement {
    GroupType type = GroupType::UPQ;
    int p = 1;
    int q = 1;
    ComplexMatrix matrix;

    static GroupElement identity(GroupType t, int p, int q);

    ComplexMatrix a() const { return matrix.block(0, 0, p, p); }
    ComplexMatrix b() const { return matrix.block(0, p, p, q); }
    ComplexMatrix c() const { return matrix.block(p, 0, q, p); }
    ComplexMatrix d() const { return matrix.block(p, p, q, q); }

    // Largest deviation in the defining identities of the group.
    double form_residual() const;
    // Domain the group acts on: BallI(p,q), SymmetricII(n) or SkewIII(n).
    Domain domain() const;
};

// Matrix product, in this order.
GroupElement operator*(const GroupElement& g, const GroupElement& h);

// exp of a Lie-algebra element; throws GenerationError if the form residual
// exceeds kGroupFormTolerance.
GroupElement group_from_algebra(GroupType t, int p, int q, const ComplexMatrix& X);

// Random Lie-algebra element with entries of size ~scale, exponentiated. On a
// residual failure the scale is halved and the draw repeated (at most 8 times).
GroupElement random_group_element(GroupType t, int p, int q, std::uint64_t seed, double scale);

// z^{[g]} = (a + z c)^{-1} (b + z d); requires ||z|| < 1 and throws
// ConditioningError when cond_1(a + z c) > kMobiusConditionLimit.
ComplexMatrix mobius(const GroupElement& g, const ComplexMatrix& z);
// Same formula without the interior requirement (used on z z* = 1).
ComplexMatrix mobius_boundary(const GroupElement& g, const ComplexMatrix& z);

// ||(z^{[g]})^{[h]} - z^{[g h]}||_F
double group_law_residual(const GroupElement& g, const GroupElement& h, const ComplexMatrix& z);

// 1x1 check of the composition convention: for generic complex 2x2 blocks the
// expanded rational function of (z^{[g]})^{[h]} is compared with z^{[g h]}.
double scalar_composition_residual(std::uint64_t seed, int samples);

// Random interior point of the domain acted on by g's group.
ComplexMatrix random_domain_point(const Domain& d, std::uint64_t seed);

}  // namespace cartan
