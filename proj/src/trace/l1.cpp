#include "cartanlab/trace/l1.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"

namespace cartan {
namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double disc_kernel_double_integral(double s, std::size_t M) {
    if (M < 2) throw ContractError("disc_kernel_double_integral: M must be >= 2");
    double acc = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
        const double ti = kTwoPi * (static_cast<double>(i) + 0.5) / static_cast<double>(M);
        double row = 0.0;
        for (std::size_t j = 0; j < M; ++j) {
            const double tj = kTwoPi * static_cast<double>(j) / static_cast<double>(M);
            row += std::pow(std::abs(1.0 - std::polar(1.0, ti - tj)), -s);
        }
        acc += row;
    }
    return acc / (static_cast<double>(M) * static_cast<double>(M));
}

cplx disc_kernel(double s, cplx z, cplx u) {
    // Re(1 - z conj(u)) > 0 in the disc, so the principal power is the branch
    // continuous from 1 at z = 0.
    return std::pow(1.0 - z * std::conj(u), -s);
}

double norm_sq(const DiscKernelElement& h) {
    if (h.centers.size() != h.coefficients.size()) throw ContractError("disc kernel element: length mismatch");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < h.centers.size(); ++i)
        for (std::size_t j = 0; j < h.centers.size(); ++j)
            acc += std::conj(h.coefficients[i]) * h.coefficients[j] * disc_kernel(h.s, h.centers[i], h.centers[j]);
    return acc.real();
}

cplx evaluate(const DiscKernelElement& h, cplx z) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < h.centers.size(); ++i) acc += h.coefficients[i] * disc_kernel(h.s, z, h.centers[i]);
    return acc;
}

double trace_l1_norm(const DiscKernelElement& h, double c, std::size_t T) {
    if (!(c >= 0.0 && c < 1.0)) throw ContractError("trace_l1_norm: radius must lie in [0, 1)");
    if (T < 1) throw ContractError("trace_l1_norm: T must be >= 1");
    double acc = 0.0;
    for (std::size_t j = 0; j < T; ++j)
        acc += std::abs(evaluate(h, std::polar(c, kTwoPi * static_cast<double>(j) / static_cast<double>(T))));
    return acc / static_cast<double>(T);
}

L1Report l1_boundary_check(double s, int trials, std::uint64_t seed, const std::vector<double>& ladder) {
    if (!(s > 0)) throw ParameterError("l1_boundary_check: s must be > 0");
    if (trials < 0) throw ContractError("l1_boundary_check: trials must be >= 0");
    L1Report r;
    r.s = s;
    r.hypothesis_violated = s >= 1.0;
    r.kernel_coarse = disc_kernel_double_integral(s, r.coarse_M);
    r.kernel_fine = disc_kernel_double_integral(s, r.fine_M);
    r.refinement_change = r.kernel_fine / r.kernel_coarse - 1.0;
    for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        DiscKernelElement h;
        h.s = s;
        for (int i = 0; i < 3; ++i) {
            h.centers.push_back(std::polar(kL1MaxCenterRadius * std::sqrt(rng.uniform()), kTwoPi * rng.uniform()));
            h.coefficients.push_back(rng.complex_normal());
        }
        const double nrm = std::sqrt(norm_sq(h));
        for (auto& a : h.coefficients) a /= nrm;
        L1TraceTrial tr;
        std::vector<cplx> vals;
        for (double c : ladder) {
            tr.norms.push_back(trace_l1_norm(h, c, kL1TraceSamples));
            vals.push_back(tr.norms.back());
            r.sup_trace_norm = std::max(r.sup_trace_norm, tr.norms.back());
        }
        tr.gaps = cauchy_gaps(vals);
        tr.verdict = classify_gaps(tr.gaps, kTraceTolerance);
        if (tr.verdict == TraceVerdict::CONVERGENT) ++r.convergent_trials;
        r.trials.push_back(std::move(tr));
    }
    return r;
}

}  // namespace cartan
