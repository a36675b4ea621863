#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/fourier/fft.hpp"
#include "cartanlab/fourier/series.hpp"
#include "cartanlab/numeric/special.hpp"
#include "helpers.hpp"
#include "oracles/frozen_values.hpp"

using namespace cartan;
using testing::rel;

namespace {

FourierSeries2 random_series2(int N, std::uint64_t seed) {
    Rng rng(seed);
    FourierSeries2 F(N);
    for (auto& c : F.coeffs) c = rng.complex_normal();
    return F;
}

double max_diff(const FourierSeries2& a, const FourierSeries2& b) {
    double m = 0.0;
    const int N = std::max(a.N, b.N);
    for (int n = -N; n <= N; ++n)
        for (int k = -N; k <= N; ++k) m = std::max(m, std::abs(a.at(n, k) - b.at(n, k)));
    return m;
}

}  // namespace

TEST_SUITE("torus-fourier") {
    TEST_CASE("complementary-series weights") {
        CHECK(std::abs(comp_series_weight(7, 1e-12) - 1.0) <= 1e-9);
        for (const auto& w : oracle::kWeights) {
            INFO("n = " << w.n << ", s = " << w.s);
            CHECK(rel(comp_series_weight(w.n, w.s), w.value) <= 1e-11);
            CHECK(comp_series_weight(-w.n, w.s) == comp_series_weight(w.n, w.s));
        }
        CHECK(std::abs(comp_series_weight(1000, 0.5) / std::sqrt(1000.0) - 1.0) <= 0.05);
        CHECK_THROWS_AS(comp_series_weight(1, 0.0), ParameterError);
        CHECK_THROWS_AS(comp_series_weight(1, 1.0), ParameterError);
        CHECK_THROWS_AS(comp_series_weight(1, -1.2), ParameterError);
    }

    TEST_CASE("weights are equivalent to (1+|n|)^s") {
        for (double s : {-0.7, -0.3, 0.3, 0.7}) {
            // At n = 0 the ratio is Gamma((1+s)/2) / Gamma((1-s)/2), about 5.6 for
            // s = -0.7, so the [1/2, 2] band only holds from n = 1 on.
            CHECK(comp_series_weight(0, s) >= 1.0 / 6.0);
            CHECK(comp_series_weight(0, s) <= 6.0);
            for (int n = 1; n <= 10000; n += (n < 100 ? 1 : 97)) {
                const double r = comp_series_weight(n, s) / std::pow(1.0 + n, s);
                CHECK(r >= 0.5);
                CHECK(r <= 2.0);
            }
            const double r2 = std::abs(comp_series_weight(100, s) / std::pow(101.0, s) - 1.0);
            const double r4 = std::abs(comp_series_weight(10000, s) / std::pow(10001.0, s) - 1.0);
            CHECK(r4 < r2);
        }
    }

    TEST_CASE("norms") {
        FourierSeries1 e3(4);
        e3[3] = 1.0;
        CHECK(comp_series_norm_sq(e3, 0.5) == comp_series_weight(3, 0.5));
        CHECK(comp_series_norm_sq(FourierSeries1(5), 0.3) == 0.0);
        const FourierSeries1 f = gaussian_series1(20, 3);
        double direct = 0.0;
        for (int n = -20; n <= 20; ++n)
            direct += std::norm(f[n]) * std::exp(log_gamma(std::abs(n) + 0.85) - log_gamma(std::abs(n) + 0.15));
        CHECK(rel(comp_series_norm_sq(f, 0.7), direct) <= 1e-12);

        FourierSeries2 F(2);
        F(1, 1) = 1.0;
        CHECK(rel(tensor_norm_sq(F, 0.3, -0.4), comp_series_weight(1, 0.3) * comp_series_weight(1, -0.4)) <= 1e-15);
        CHECK(tensor_norm_sq(FourierSeries2(3), 0.3, 0.3) == 0.0);
        const FourierSeries2 G = random_series2(6, 4);
        double d2 = 0.0;
        for (int n = -6; n <= 6; ++n)
            for (int m = -6; m <= 6; ++m)
                d2 += std::norm(G(n, m)) * comp_series_weight(n, 0.2) * comp_series_weight(m, 0.9);
        CHECK(rel(tensor_norm_sq(G, 0.2, 0.9), d2) <= 1e-12);
    }

    TEST_CASE("diagonal restriction") {
        FourierSeries2 F(3);
        F(2, 3) = 1.0;
        FourierSeries1 d = restrict_diagonal(F);
        CHECK(d.N == 6);
        for (int k = -6; k <= 6; ++k) CHECK(d[k] == cplx(k == 5 ? 1.0 : 0.0));
        FourierSeries2 H(1);
        H(1, -1) = H(-1, 1) = 1.0;
        CHECK(restrict_diagonal(H)[0] == cplx(2.0));

        // Grid oracle: sample F on the diagonal and transform back.
        const FourierSeries2 R = random_series2(7, 5);
        const std::size_t G = 64;
        std::vector<double> phi(G);
        for (std::size_t j = 0; j < G; ++j) phi[j] = 2.0 * std::numbers::pi * j / G;
        std::vector<cplx> diag(G);
        for (std::size_t j = 0; j < G; ++j) diag[j] = evaluate2(R, {phi[j]}, {phi[j]})[0];
        const FourierSeries1 oracle_d = from_grid(diag, 14);
        const FourierSeries1 dr = restrict_diagonal(R);
        for (int k = -14; k <= 14; ++k) CHECK(std::abs(dr[k] - oracle_d[k]) <= 1e-12);

        // Linearity.
        const FourierSeries2 S = random_series2(7, 6);
        const cplx al(0.3, -1.2), be(2.0, 0.5);
        FourierSeries2 C(7);
        for (std::size_t i = 0; i < C.coeffs.size(); ++i) C.coeffs[i] = al * R.coeffs[i] + be * S.coeffs[i];
        const FourierSeries1 rc = restrict_diagonal(C), rs = restrict_diagonal(S);
        for (int k = -14; k <= 14; ++k) CHECK(std::abs(rc[k] - (al * dr[k] + be * rs[k])) <= 1e-13);
    }

    TEST_CASE("grid transforms") {
        const std::vector<cplx> ones(16, 1.0);
        const auto c = grid_transform(ones, Direction::Forward);
        CHECK(std::abs(c[0] - 1.0) < 1e-15);
        for (std::size_t k = 1; k < 16; ++k) CHECK(std::abs(c[k]) < 1e-15);

        FourierSeries1 e5(8);
        e5[5] = 1.0;
        const FourierSeries1 back = from_grid(to_grid(e5, 32), 8);
        for (int n = -8; n <= 8; ++n) CHECK(std::abs(back[n] - (n == 5 ? 1.0 : 0.0)) < 1e-15);

        for (std::size_t G : {64u, 256u, 48u}) {
            const FourierSeries1 f = gaussian_series1(15, G, 4.0);
            const auto v = to_grid(f, G, 0.5);
            const FourierSeries1 g = from_grid(v, 15, 0.5);
            double err = 0.0;
            for (int n = -15; n <= 15; ++n) err = std::max(err, std::abs(f[n] - g[n]));
            CHECK(err <= 1e-12);
            // Parseval with coefficients normalized by 1/G.
            double grid = 0.0;
            for (const auto& x : v) grid += std::norm(x);
            CHECK(rel(grid / G, l2_norm_sq(f)) <= 1e-12);
        }
        CHECK_THROWS_AS(to_grid(gaussian_series1(20, 1), 32), ContractError);
    }

    TEST_CASE("FFT matches the direct sum") {
        Rng rng(8);
        for (std::size_t n : {1u, 2u, 8u, 512u, 12u, 100u}) {
            std::vector<cplx> x(n);
            for (auto& v : x) v = rng.complex_normal();
            auto y = x;
            dft_inplace(y, -1);
            double err = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                cplx s = 0.0;
                for (std::size_t j = 0; j < n; ++j) s += x[j] * std::polar(1.0, -2.0 * std::numbers::pi * double(j * k % n) / n);
                err = std::max(err, std::abs(s - y[k]));
            }
            CHECK(err <= 1e-12 * std::max<double>(1, n));
        }
    }

    TEST_CASE("sine-power multiplier") {
        const FourierSeries2 F = gaussian_series2(10, 9, 3.0);
        CHECK(max_diff(multiply_sin_power(F, 0.0, 64), F) <= 1e-12);

        FourierSeries2 one(1);
        one(0, 0) = 1.0;
        const FourierSeries2 sq = multiply_sin_power(one, 2.0, 64);
        FourierSeries2 expect(1);
        expect(0, 0) = 0.5;
        expect(1, -1) = expect(-1, 1) = -0.25;
        CHECK(max_diff(sq, expect) <= 1e-14);

        // Fine-grid agreement for a negative exponent.
        const FourierSeries2 G = gaussian_series2(16, 10, 4.0);
        CHECK(max_diff(multiply_sin_power(G, -0.6, 128), multiply_sin_power(G, -0.6, 512)) <= 1e-6);

        // Closed-form convolution oracle along the anti-diagonal.
        const auto a = sin_power_coefficients(-0.6, 40);
        // |1 - e^{ix}|^{-1/2} = 2^{-1/2} |sin(x/2)|^{-1/2}
        CHECK(rel(sin_power_coefficients(-0.5, 0)[0] / std::sqrt(2.0), oracle::kCircleMeanS05) <= 1e-13);
        const FourierSeries2 M = multiply_sin_power(G, -0.6, 256);
        double err = 0.0;
        for (int n = -16; n <= 16; ++n)
            for (int m = -16; m <= 16; ++m) {
                cplx s = 0.0;
                for (int k = -32; k <= 32; ++k) s += a[std::abs(k)] * G.at(n - k, m + k);
                err = std::max(err, std::abs(M(n, m) - s));
            }
        CHECK(err <= 1e-13);

        // Pointwise sampling of the multiplier only converges like h^{1+alpha}.
        const double coarse = max_diff(multiply_sin_power_sampled(G, -0.6, 128), M);
        const double fine = max_diff(multiply_sin_power_sampled(G, -0.6, 512), M);
        CHECK(fine < coarse);
        CHECK(fine / coarse == doctest::Approx(std::pow(0.25, 0.4)).epsilon(0.15));

        CHECK_THROWS_AS(multiply_sin_power(F, -1.0, 64), SingularityError);
        CHECK_THROWS_AS(multiply_sin_power(F, 0.5, 32), ContractError);
    }
}
