#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

// f(phi) = sum_{|n| <= N} c_n e^{i n phi}
struct FourierSeries1 {
    int N = 0;
    std::vector<cplx> coeffs;  // index n + N

    FourierSeries1() = default;
    explicit FourierSeries1(int order);
    FourierSeries1(int order, std::vector<cplx> c);

    cplx& operator[](int n) { return coeffs[static_cast<std::size_t>(n + N)]; }
    const cplx& operator[](int n) const { return coeffs[static_cast<std::size_t>(n + N)]; }
    cplx at(int n) const;  // zero outside [-N, N]
};

// F(phi1, phi2) = sum c_{n,m} e^{i n phi1} e^{i m phi2}
struct FourierSeries2 {
    int N = 0;
    std::vector<cplx> coeffs;  // row-major, (n + N) * (2N + 1) + (m + N)

    FourierSeries2() = default;
    explicit FourierSeries2(int order);
    FourierSeries2(int order, std::vector<cplx> c);

    std::size_t width() const noexcept { return static_cast<std::size_t>(2 * N + 1); }
    cplx& operator()(int n, int m) { return coeffs[(n + N) * width() + (m + N)]; }
    const cplx& operator()(int n, int m) const { return coeffs[(n + N) * width() + (m + N)]; }
    cplx at(int n, int m) const;
    ComplexMatrix as_matrix() const;
    static FourierSeries2 from_matrix(const ComplexMatrix& M);
};

struct NormWeights {
    double s = 0.0;
    int N = 0;
    std::vector<double> weights;  // index n + N
    double operator[](int n) const { return weights[static_cast<std::size_t>(n + N)]; }
};

// Gamma(|n| + (1+s)/2) / Gamma(|n| + (1-s)/2); s must lie in (-1, 1) \ {0}.
double comp_series_weight(int n, double s);
NormWeights make_weights(int N, double s);

double comp_series_norm_sq(const FourierSeries1& f, double s);
double tensor_norm_sq(const FourierSeries2& F, double s1, double s2);
double l2_norm_sq(const FourierSeries1& f);
double l2_norm_sq(const FourierSeries2& F);

// d_k = sum_{n + m = k} c_{n,m}; output order 2N.
FourierSeries1 restrict_diagonal(const FourierSeries2& F);

FourierSeries1 operator-(const FourierSeries1& a, const FourierSeries1& b);
FourierSeries2 operator-(const FourierSeries2& a, const FourierSeries2& b);
FourierSeries1 truncate(const FourierSeries1& f, int order);
FourierSeries2 truncate(const FourierSeries2& F, int order);

enum class Direction { Forward, Backward };

// Raw transform between G grid values and G coefficients in DFT order
// (coefficient k represents frequency k for k < G/2, k - G above).
// Forward divides by G so that grid samples of e^{i n phi} give coefficient 1;
// the pair is unitary for the normalized counting measure on the grid.
std::vector<cplx> grid_transform(const std::vector<cplx>& values, Direction direction);

// Samples at phi_j = 2 pi (j + offset) / G.
std::vector<cplx> to_grid(const FourierSeries1& f, std::size_t G, double offset = 0.0);
FourierSeries1 from_grid(const std::vector<cplx>& values, int N, double offset = 0.0);

// G x G samples, rows indexed by phi1. Evaluated as E1 C E2^T.
std::vector<cplx> to_grid2(const FourierSeries2& F, std::size_t G, double offset1 = 0.0,
                           double offset2 = 0.0);
std::vector<cplx> evaluate2(const FourierSeries2& F, const std::vector<double>& phi1,
                            const std::vector<double>& phi2);
FourierSeries2 from_grid2(const std::vector<cplx>& values, std::size_t G, int N,
                          double offset1 = 0.0, double offset2 = 0.0);

// Fourier coefficients a_0..a_K of |sin(x/2)|^alpha (a_{-k} = a_k), from
// a_0 = Gamma(alpha+1) / (2^alpha Gamma(alpha/2+1)^2) and
// a_{k+1} = a_k (k - alpha/2) / (k + 1 + alpha/2).
std::vector<double> sin_power_coefficients(double alpha, int K);

// Multiply by |sin((phi1 - phi2)/2)|^alpha on a grid with phi1 shifted by half a
// cell, transform back and truncate to out_order (default: F.N). The grid
// multiplier is the band-limited interpolant of the singular factor (its
// discrete transform equals a_k for |k| < gridN/2), so the result is exact for
// band-limited F whenever gridN/2 > F.N + out_order.
FourierSeries2 multiply_sin_power(const FourierSeries2& F, double alpha, std::size_t gridN,
                                  int out_order = -1);

// Same grid, but the multiplier is sampled pointwise. For alpha < 0 the error
// decays only like gridN^{-(1+alpha)}; kept as the reference quadrature.
FourierSeries2 multiply_sin_power_sampled(const FourierSeries2& F, double alpha, std::size_t gridN,
                                          int out_order = -1);

// Coefficients exp(-(n/width)^2) with independent unit phases.
FourierSeries1 gaussian_series1(int N, std::uint64_t seed, double width = 8.0);
FourierSeries2 gaussian_series2(int N, std::uint64_t seed, double width = 8.0);

}  // namespace cartan
