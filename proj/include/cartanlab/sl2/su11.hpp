#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cartanlab/fourier/series.hpp"

namespace cartan {

// g = (a, b; conj(b), conj(a)) with |a|^2 - |b|^2 = 1.
struct SU11Element {
    cplx a = 1.0;
    cplx b = 0.0;

    static SU11Element identity() { return {}; }
    static SU11Element rotation(double theta) { return {std::polar(1.0, theta), 0.0}; }
    double invariant_residual() const;
    // z -> (a z + b) / (conj(b) z + conj(a))
    cplx apply(cplx z) const;
    // |conj(b) z + conj(a)|
    double factor(cplx z) const;
};

SU11Element operator*(const SU11Element& g, const SU11Element& h);

// exp of alpha (i,0;0,-i) + beta (0,1;1,0) + gamma (0,i;-i,0), with alpha,
// beta, gamma uniform in [-scale, scale].
SU11Element random_su11(std::uint64_t seed, double scale);

// Matrix of f -> P_{n_out}[ (f o g) |conj(b) z + conj(a)|^{s-1} ] acting on
// series of order n_in, computed on G grid points. Row index n + n_out,
// column index m + n_in.
ComplexMatrix transfer_matrix(const SU11Element& g, double s, int n_in, int n_out, std::size_t G);

FourierSeries1 act_comp_series(const SU11Element& g, const FourierSeries1& f, double s,
                               std::size_t gridN);
// out_order < 0 keeps the input order.
FourierSeries2 act_tensor(const SU11Element& g, const FourierSeries2& F, double s1, double s2,
                          std::size_t gridN, int out_order = -1);

// Same maps computed literally: sample the Fourier sum at the transformed grid
// points, multiply by the automorphy factor, transform back.
FourierSeries1 act_comp_series_reference(const SU11Element& g, const FourierSeries1& f, double s,
                                         std::size_t gridN);
FourierSeries2 act_tensor_reference(const SU11Element& g, const FourierSeries2& F, double s1,
                                    double s2, std::size_t gridN);

// The tensor side is kept to order 2N, the order of the restricted series, so
// the residual is not dominated by the cut of T(g)F at N.
double intertwining_residual(const SU11Element& g, const FourierSeries2& F, double s1, double s2,
                             std::size_t gridN);

struct RestrictionNormCurve {
    double s1 = 0.0;
    double s2 = 0.0;
    std::vector<std::pair<int, double>> points;  // (N, rho(N))
};

double restriction_norm_estimate(double s1, double s2, int N);
RestrictionNormCurve restriction_norm_curve(double s1, double s2, const std::vector<int>& orders);

// The multiplier J is |sin((phi1-phi2)/2)|^{-s}. The left side samples
// (T_s(g) x T_s(g))F directly on the half-offset grid; the right side keeps
// J F to order gridN/8 before the L2 action, so that neither side cuts a
// slowly decaying intermediate series at N. Both sides sample the multiplier
// pointwise, so the residual measures the grid error and shrinks under
// refinement.
double j_operator_residual(const SU11Element& g, const FourierSeries2& F, double s,
                           std::size_t gridN);

}  // namespace cartan
