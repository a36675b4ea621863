#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cartanlab/trace/curve.hpp"
#include "cartanlab/trace/power_series.hpp"

namespace cartan {

// Smooth periodic test function psi(t) = sum_{|n| <= J} psi_n e^{int}.
struct PeriodicTest {
    int J = 0;
    std::vector<cplx> coeffs;  // index n + J

    cplx at(int n) const noexcept { return (n < -J || n > J) ? cplx(0.0) : coeffs[n + J]; }
    cplx evaluate(double t) const;
    double max_abs_coeff() const;
};

// exp(cos t) / (2 pi I_0(1)), which integrates to 1; coefficients
// I_n(1) / (2 pi I_0(1)) for |n| <= 20.
PeriodicTest standard_psi();
// amplitude * e^{i n t}
PeriodicTest single_mode_psi(int n, cplx amplitude);

struct PairingResult {
    cplx value = 0.0;
    double tail_bound = 0.0;
    int degree_cap = 0;
};

// Trapezoid rule over the curve samples. For lattice curves the sample count
// must exceed the integrand bandwidth total_degree * max|a_k| + J, otherwise
// ContractError; only polynomials are accepted.
cplx radial_trace_pairing(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi, double c);

// Exact pairing on a lattice curve: the integral of each monomial against psi
// is a single Fourier coefficient. Edge series are summed up to the smallest
// degree cap whose tail bound 2 pi C max|psi_n| 2 c^{D+1} / (1-c)^2 is below
// tail_target.
PairingResult lattice_trace_pairing(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi,
                                    double c, double tail_target = 1e-10);

int adaptive_degree_cap(double c, double growth_constant, double psi_max, double tail_target);

enum class TraceVerdict { CONVERGENT, DIVERGENT, INCONCLUSIVE };
std::string verdict_name(TraceVerdict v);

inline constexpr double kTraceTolerance = 1e-2;
// Gaps below this multiple of max(1, max|P|) are rounding noise and read as 0.
inline constexpr double kGapNoiseFloor = 1e-13;

struct TraceDiagnostic {
    std::vector<double> ladder;
    std::vector<cplx> pairings;
    std::vector<double> gaps;
    std::vector<double> tail_bounds;
    std::vector<int> degree_caps;
    double tolerance = kTraceTolerance;
    TraceVerdict verdict = TraceVerdict::INCONCLUSIVE;
};

// c_k = 1 - 2^{-k}, k = 2..14
std::vector<double> default_ladder();

// CONVERGENT: last three gaps non-increasing and the last below tol.
// DIVERGENT: last three strictly increasing and the last above 10 tol.
TraceVerdict classify_gaps(const std::vector<double>& gaps, double tol);
std::vector<double> cauchy_gaps(const std::vector<cplx>& values);

TraceDiagnostic trace_diagnostic(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi,
                                 const std::vector<double>& ladder, double tol = kTraceTolerance);

enum class TraceFamily { EdgeProfile, Polynomial };

struct TraceExperimentSpec {
    TraceFamily family = TraceFamily::EdgeProfile;
    double s1 = 0.2;
    double s2 = 0.2;
    int degree = 8;  // polynomial family
    PhaseModel phases = PhaseModel::Toeplitz;
    ProfileShape shape = ProfileShape::Symmetric;
    int trials = 20;
    std::uint64_t seed = 1;
    double tolerance = kTraceTolerance;
};

struct TraceExperimentReport {
    std::vector<TraceDiagnostic> trials;
    int convergent = 0;
    int divergent = 0;
    int inconclusive = 0;

    double fraction(TraceVerdict v) const;
};

// Trial t uses derive_seed(seed, t).
TraceExperimentReport trace_convergence_experiment(const TraceExperimentSpec& spec, const CurveSpec& curve,
                                                   const PeriodicTest& psi, const std::vector<double>& ladder);

}  // namespace cartan
