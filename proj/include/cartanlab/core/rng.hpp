#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace cartan {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

// Per-trial seed: a pure function of its arguments, so serial and parallel
// scans draw identical streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) noexcept;

// Thin wrapper over mt19937_64. The distribution transforms are written out
// here because the standard library distributions are not specified
// bit-for-bit across implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                         // [0, 1)
    double uniform(double lo, double hi);
    double normal();
    std::complex<double> complex_normal();    // E|z|^2 = 1
    std::complex<double> unit_phase();

private:
    std::mt19937_64 engine_;
};

}  // namespace cartan
