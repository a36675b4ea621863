#pragma once

#include <optional>
#include <vector>

#include "cartanlab/kernel/kernel.hpp"
#include "cartanlab/kernel/sampling.hpp"

namespace cartan {

enum class Verdict { PSD, INDEFINITE };

inline constexpr double kPsdRelativeTolerance = 1e-8;
// An indefiniteness witness only counts below this (absolute) eigenvalue.
inline constexpr double kWitnessThreshold = 1e-6;
inline constexpr double kHermiticityTolerance = 1e-8;

struct GramReport {
    double min_eigenvalue = 0.0;
    Verdict verdict = Verdict::PSD;
    PointConfig witness;
    double tolerance = 0.0;
    double gram_norm = 0.0;
    double hermiticity_residual = 0.0;

    bool strong_witness() const noexcept { return min_eigenvalue < -kWitnessThreshold; }
};

// G_ij = K(x_j, x_i), then replaced by (G + G*)/2. Throws
// KernelImplementationError when ||G - G*|| > 1e-8 ||G||.
ComplexMatrix gram_matrix(const KernelSpec& spec, const PointConfig& config,
                          double* hermiticity_residual = nullptr);

double psd_tolerance(double gram_norm) noexcept;

// Verdict for an already assembled Hermitian Gram matrix; tol < 0 selects
// psd_tolerance(||G||).
GramReport gram_report(const ComplexMatrix& G, const PointConfig& config, double tol = -1.0);
GramReport psd_check(const KernelSpec& spec, const PointConfig& config, double tol = -1.0);

// Hadamard product of the two Gram matrices.
GramReport schur_product_check(const KernelSpec& a, const KernelSpec& b, const PointConfig& config);

struct WallachRow {
    double s = 0.0;
    int trials = 0;
    int tolerance_violations = 0;  // min eigenvalue below -tol
    int witnesses = 0;             // min eigenvalue below -kWitnessThreshold
    double fraction_indefinite = 0.0;
    double worst_min_eigenvalue = 0.0;
    double worst_relative = 0.0;   // worst min eigenvalue / max(1, ||G||)
    std::optional<GramReport> first_witness;
    int first_witness_trial = -1;
    std::vector<double> trial_min_eigenvalues;
};

// HolomorphicDet kernel on a matrix-ball domain; trial t of grid point i uses
// seed derive_seed(seed, i, t) and the mixture sampler.
std::vector<WallachRow> wallach_scan(const Domain& domain, const std::vector<double>& s_grid,
                                     int trials, int npoints, std::uint64_t seed);

// Parameters of the positivity set as listed for each domain: type I(p,q)
// with r = min(p,q): {0,...,r-1} and s > r-1; type II(n): {0,1/2,...,(n-1)/2}
// and s > (n-1)/2; type III(n): {0,...,n-1} and s > n-1 (sufficient).
bool in_listed_positivity_set(const Domain& domain, double s);

struct RkhsElement {
    KernelSpec spec;
    PointConfig centers;
    std::vector<cplx> coefficients;
};

// f_h(x) = sum_i alpha_i K(x, x_i)
cplx rkhs_eval(const RkhsElement& h, const ComplexMatrix& x);
// sum conj(alpha_i) alpha_j K(x_i, x_j)
double rkhs_norm_sq(const RkhsElement& h);

}  // namespace cartan
