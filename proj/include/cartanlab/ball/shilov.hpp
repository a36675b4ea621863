#pragma once

#include <cstdint>

#include "cartanlab/ball/group.hpp"

namespace cartan {

inline constexpr double kShilovTolerance = 1e-10;

// ||z z* - 1_p||, max entry.
double shilov_residual(const ComplexMatrix& z);

// Gaussian p x q matrix with orthonormalized rows; requires p <= q.
ComplexMatrix shilov_sample(int p, int q, std::uint64_t seed);

// Boundary pair (z, u) with orbit invariant alpha: u = conj(V z) for a
// unitary V that differs from 1 on an alpha-dimensional subspace.
std::pair<ComplexMatrix, ComplexMatrix> shilov_pair(int p, int q, int alpha, std::uint64_t seed);

// Number of singular values of z - conj(u) above tol * max(1, ||z - conj(u)||).
int orbit_invariant(const ComplexMatrix& z, const ComplexMatrix& u, double tol = 1e-8);

// The pair action that preserves the invariant: (z, u) -> (z^{[g]}, u^{[conj g]}).
std::pair<ComplexMatrix, ComplexMatrix> act_on_pair(const GroupElement& g, const ComplexMatrix& z,
                                                    const ComplexMatrix& u);

}  // namespace cartan
