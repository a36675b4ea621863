#include "cartanlab/sl2/su11.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/fourier/fft.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {

namespace {

void check_grid(std::size_t G, int N) {
    if (!is_power_of_two(G)) throw ContractError("SU(1,1) action: gridN must be a power of two");
    if (G < 2 * static_cast<std::size_t>(2 * N + 1)) throw ContractError("SU(1,1) action: gridN must be >= 2(2N+1)");
}

std::size_t wrap(int n, std::size_t G) {
    const long g = static_cast<long>(G);
    return static_cast<std::size_t>(((n % g) + g) % g);
}

struct GridImage {
    std::vector<double> theta;   // argument of g(z_j)
    std::vector<double> factor;  // |conj(b) z_j + conj(a)|
};

GridImage grid_image(const SU11Element& g, std::size_t G, double offset = 0.0) {
    GridImage im;
    im.theta.resize(G);
    im.factor.resize(G);
    for (std::size_t j = 0; j < G; ++j) {
        const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * (static_cast<double>(j) + offset) / static_cast<double>(G));
        im.theta[j] = std::arg(g.apply(z));
        im.factor[j] = g.factor(z);
    }
    return im;
}

}  // namespace

double SU11Element::invariant_residual() const { return std::abs(std::norm(a) - std::norm(b) - 1.0); }

cplx SU11Element::apply(cplx z) const { return (a * z + b) / (std::conj(b) * z + std::conj(a)); }

double SU11Element::factor(cplx z) const { return std::abs(std::conj(b) * z + std::conj(a)); }

SU11Element operator*(const SU11Element& g, const SU11Element& h) {
    return {g.a * h.a + g.b * std::conj(h.b), g.a * h.b + g.b * std::conj(h.a)};
}

SU11Element random_su11(std::uint64_t seed, double scale) {
    if (scale < 0) throw ParameterError("random_su11: scale must be non-negative");
    Rng rng(seed);
    const double alpha = rng.uniform(-scale, scale);
    const double beta = rng.uniform(-scale, scale);
    const double gamma = rng.uniform(-scale, scale);
    const cplx w(beta, gamma);
    const ComplexMatrix X{{cplx(0.0, alpha), w}, {std::conj(w), cplx(0.0, -alpha)}};
    const ComplexMatrix E = matrix_exp(X);
    SU11Element g{E(0, 0), E(0, 1)};
    if (g.invariant_residual() > 1e-12) throw GenerationError("random_su11: invariant violated");
    return g;
}

ComplexMatrix transfer_matrix(const SU11Element& g, double s, int n_in, int n_out, std::size_t G) {
    if (!is_power_of_two(G)) throw ContractError("transfer_matrix: gridN must be a power of two");
    if (G < static_cast<std::size_t>(2 * n_out + 1)) throw ContractError("transfer_matrix: grid too small");
    const GridImage im = grid_image(g, G);
    std::vector<double> fac(G);
    for (std::size_t j = 0; j < G; ++j) fac[j] = std::pow(im.factor[j], s - 1.0);
    ComplexMatrix T(static_cast<std::size_t>(2 * n_out + 1), static_cast<std::size_t>(2 * n_in + 1));
    std::vector<cplx> col(G);
    const double inv = 1.0 / static_cast<double>(G);
    for (int m = -n_in; m <= n_in; ++m) {
        for (std::size_t j = 0; j < G; ++j) col[j] = fac[j] * std::polar(1.0, m * im.theta[j]);
        dft_inplace(col, -1);
        for (int n = -n_out; n <= n_out; ++n)
            T(static_cast<std::size_t>(n + n_out), static_cast<std::size_t>(m + n_in)) = col[wrap(n, G)] * inv;
    }
    return T;
}

FourierSeries1 act_comp_series(const SU11Element& g, const FourierSeries1& f, double s,
                               std::size_t gridN) {
    check_grid(gridN, f.N);
    const ComplexMatrix T = transfer_matrix(g, s, f.N, f.N, gridN);
    const ComplexMatrix c(f.coeffs.size(), 1, f.coeffs);
    return FourierSeries1(f.N, (T * c).entries());
}

FourierSeries2 act_tensor(const SU11Element& g, const FourierSeries2& F, double s1, double s2,
                          std::size_t gridN, int out_order) {
    const int n_out = out_order < 0 ? F.N : out_order;
    check_grid(gridN, std::max(F.N, n_out));
    const ComplexMatrix T1 = transfer_matrix(g, s1, F.N, n_out, gridN);
    const ComplexMatrix T2 = s2 == s1 ? T1 : transfer_matrix(g, s2, F.N, n_out, gridN);
    return FourierSeries2::from_matrix((T1 * F.as_matrix()) * T2.transpose());
}

FourierSeries1 act_comp_series_reference(const SU11Element& g, const FourierSeries1& f, double s,
                                         std::size_t gridN) {
    check_grid(gridN, f.N);
    const GridImage im = grid_image(g, gridN);
    std::vector<cplx> v(gridN);
    for (std::size_t j = 0; j < gridN; ++j) {
        cplx acc = 0.0;
        for (int n = -f.N; n <= f.N; ++n) acc += f[n] * std::polar(1.0, n * im.theta[j]);
        v[j] = acc * std::pow(im.factor[j], s - 1.0);
    }
    return from_grid(v, f.N);
}

FourierSeries2 act_tensor_reference(const SU11Element& g, const FourierSeries2& F, double s1,
                                    double s2, std::size_t gridN) {
    check_grid(gridN, F.N);
    const GridImage im = grid_image(g, gridN);
    std::vector<cplx> v = evaluate2(F, im.theta, im.theta);
    for (std::size_t j = 0; j < gridN; ++j) {
        const double f1 = std::pow(im.factor[j], s1 - 1.0);
        for (std::size_t k = 0; k < gridN; ++k) v[j * gridN + k] *= f1 * std::pow(im.factor[k], s2 - 1.0);
    }
    return from_grid2(v, gridN, F.N);
}

double intertwining_residual(const SU11Element& g, const FourierSeries2& F, double s1, double s2,
                             std::size_t gridN) {
    const double s = s1 + s2 - 1.0;
    if (!(s > -1.0 && s < 1.0) || s == 0.0)
        throw ParameterError("intertwining_residual: s1 + s2 - 1 must lie in (-1,1) \\ {0}");
    const FourierSeries1 lhs = restrict_diagonal(act_tensor(g, F, s1, s2, gridN, 2 * F.N));
    const FourierSeries1 rhs = act_comp_series(g, restrict_diagonal(F), s, gridN);
    return std::sqrt(comp_series_norm_sq(lhs - rhs, s));
}

double restriction_norm_estimate(double s1, double s2, int N) {
    if (N < 0) throw ContractError("restriction_norm_estimate: negative order");
    const NormWeights w1 = make_weights(N, s1);
    const NormWeights w2 = make_weights(N, s2);
    std::vector<double> inv1(w1.weights.size()), inv2(w2.weights.size());
    for (std::size_t i = 0; i < inv1.size(); ++i) {
        inv1[i] = 1.0 / w1.weights[i];
        inv2[i] = 1.0 / w2.weights[i];
    }
    double best = 0.0;
    for (int k = -2 * N; k <= 2 * N; ++k) {
        const int lo = std::max(-N, k - N);
        const int hi = std::min(N, k + N);
        double acc = 0.0;
        for (int n = lo; n <= hi; ++n) acc += inv1[n + N] * inv2[k - n + N];
        best = std::max(best, acc);
    }
    return std::sqrt(best);
}

RestrictionNormCurve restriction_norm_curve(double s1, double s2, const std::vector<int>& orders) {
    RestrictionNormCurve curve{s1, s2, {}};
    for (int N : orders) curve.points.emplace_back(N, restriction_norm_estimate(s1, s2, N));
    return curve;
}

double j_operator_residual(const SU11Element& g, const FourierSeries2& F, double s,
                           std::size_t gridN) {
    if (!(s > -1.0 && s < -0.5)) throw ParameterError("j_operator_residual: s must lie in (-1, -1/2)");
    check_grid(gridN, F.N);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(gridN);
    const GridImage im1 = grid_image(g, gridN, 0.5);
    const GridImage im2 = grid_image(g, gridN, 0.0);
    std::vector<cplx> v = evaluate2(F, im1.theta, im2.theta);
    for (std::size_t j = 0; j < gridN; ++j) {
        const double f1 = std::pow(im1.factor[j], s - 1.0);
        for (std::size_t k = 0; k < gridN; ++k) {
            const double d = (static_cast<double>(j) - static_cast<double>(k) + 0.5) * h;
            v[j * gridN + k] *= f1 * std::pow(im2.factor[k], s - 1.0) * std::pow(std::abs(std::sin(0.5 * d)), -s);
        }
    }
    const FourierSeries2 lhs = from_grid2(v, gridN, F.N, 0.5, 0.0);
    const int M = static_cast<int>(gridN / 8);
    const FourierSeries2 JF = multiply_sin_power_sampled(F, -s, gridN, M);
    const ComplexMatrix T0 = transfer_matrix(g, 0.0, M, F.N, gridN);
    const FourierSeries2 rhs = FourierSeries2::from_matrix((T0 * JF.as_matrix()) * T0.transpose());
    return std::sqrt(l2_norm_sq(lhs - rhs));
}

}  // namespace cartan
