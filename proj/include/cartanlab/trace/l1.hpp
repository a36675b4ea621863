#pragma once

#include <cstdint>
#include <vector>

#include "cartanlab/trace/trace.hpp"

namespace cartan {

// Mean of |1 - e^{i(theta - theta')}|^{-s} over the product of an M-point
// grid and its half-step shift (normalized arc length on both factors).
double disc_kernel_double_integral(double s, std::size_t M);

// h = sum_i alpha_i Psi_{w_i} for the disc kernel (1 - z conj(u))^{-s}.
struct DiscKernelElement {
    double s = 0.5;
    std::vector<cplx> centers;
    std::vector<cplx> coefficients;
};

cplx disc_kernel(double s, cplx z, cplx u);
double norm_sq(const DiscKernelElement& h);
cplx evaluate(const DiscKernelElement& h, cplx z);
// Mean of |f_h(c e^{i theta})| over T equispaced angles.
double trace_l1_norm(const DiscKernelElement& h, double c, std::size_t T);

struct L1TraceTrial {
    std::vector<double> norms;  // along the ladder
    std::vector<double> gaps;
    TraceVerdict verdict = TraceVerdict::INCONCLUSIVE;
};

struct L1Report {
    double s = 0.0;
    bool hypothesis_violated = false;  // s >= 1: the boundary kernel is not integrable
    std::size_t coarse_M = 1024;
    std::size_t fine_M = 2048;
    double kernel_coarse = 0.0;
    double kernel_fine = 0.0;
    double refinement_change = 0.0;  // kernel_fine / kernel_coarse - 1
    std::vector<L1TraceTrial> trials;
    double sup_trace_norm = 0.0;
    int convergent_trials = 0;
};

inline constexpr std::size_t kL1TraceSamples = 4096;
inline constexpr double kL1MaxCenterRadius = 0.99;

// Trials draw three centres with |w| <= 0.99 and complex normal coefficients
// from derive_seed(seed, t), normalized to ||h|| = 1.
L1Report l1_boundary_check(double s, int trials, std::uint64_t seed, const std::vector<double>& ladder);

}  // namespace cartan
