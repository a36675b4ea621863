#pragma once

#include <cstdint>
#include <vector>

#include "cartanlab/core/rng.hpp"
#include "cartanlab/kernel/kernel.hpp"

namespace cartan {

struct PointConfig {
    std::vector<ComplexMatrix> points;
    std::uint64_t seed = 0;
};

enum class SamplerKind {
    Generic,  // independent points, Gaussian direction, radius uniform in [0.1, 0.95]
    Stencil,  // a local finite-difference stencil around a random centre, filled up with generic points
};

ComplexMatrix haar_unitary(std::size_t n, Rng& rng);

// Gaussian matrix (symmetrized/antisymmetrized for II/III) rescaled so its
// operator norm is uniform in [rmin, rmax]; polydisc coordinates uniform in
// the disc of radius rmax; Fock points standard complex normal.
ComplexMatrix sample_point(const Domain& d, Rng& rng, double rmin = 0.1, double rmax = 0.95);

PointConfig sample_config(const Domain& d, int npoints, std::uint64_t seed, SamplerKind kind);

// Scans alternate between the two samplers by trial index.
SamplerKind mixture_kind(int trial) noexcept;

}  // namespace cartan
