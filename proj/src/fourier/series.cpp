#include "cartanlab/fourier/series.hpp"

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/fourier/fft.hpp"
#include "cartanlab/numeric/special.hpp"

namespace cartan {

namespace {

void check_order(int N) {
    if (N < 0) throw ContractError("Fourier series: negative truncation order");
}

void check_finite(const std::vector<cplx>& c) {
    for (const auto& v : c)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ContractError("Fourier series: non-finite coefficient");
}

void check_s(double s) {
    if (!(s > -1.0 && s < 1.0) || s == 0.0)
        throw ParameterError("complementary series parameter must lie in (-1,1) \\ {0}");
}

std::size_t wrap(int n, std::size_t G) {
    const long g = static_cast<long>(G);
    return static_cast<std::size_t>(((n % g) + g) % g);
}

ComplexMatrix exponential_matrix(const std::vector<double>& phi, int N) {
    ComplexMatrix E(phi.size(), static_cast<std::size_t>(2 * N + 1));
    for (std::size_t j = 0; j < phi.size(); ++j)
        for (int n = -N; n <= N; ++n) E(j, static_cast<std::size_t>(n + N)) = std::polar(1.0, n * phi[j]);
    return E;
}

std::vector<double> grid_points(std::size_t G, double offset) {
    std::vector<double> phi(G);
    for (std::size_t j = 0; j < G; ++j)
        phi[j] = 2.0 * std::numbers::pi * (static_cast<double>(j) + offset) / static_cast<double>(G);
    return phi;
}

}  // namespace

FourierSeries1::FourierSeries1(int order) : N(order) {
    check_order(order);
    coeffs.assign(static_cast<std::size_t>(2 * N + 1), 0.0);
}

FourierSeries1::FourierSeries1(int order, std::vector<cplx> c) : N(order), coeffs(std::move(c)) {
    check_order(order);
    if (coeffs.size() != static_cast<std::size_t>(2 * N + 1))
        throw ContractError("FourierSeries1: coefficient count must be 2N+1");
    check_finite(coeffs);
}

cplx FourierSeries1::at(int n) const { return (n < -N || n > N) ? cplx(0.0) : (*this)[n]; }

FourierSeries2::FourierSeries2(int order) : N(order) {
    check_order(order);
    coeffs.assign(width() * width(), 0.0);
}

FourierSeries2::FourierSeries2(int order, std::vector<cplx> c) : N(order), coeffs(std::move(c)) {
    check_order(order);
    if (coeffs.size() != width() * width())
        throw ContractError("FourierSeries2: coefficient count must be (2N+1)^2");
    check_finite(coeffs);
}

cplx FourierSeries2::at(int n, int m) const {
    return (n < -N || n > N || m < -N || m > N) ? cplx(0.0) : (*this)(n, m);
}

ComplexMatrix FourierSeries2::as_matrix() const { return ComplexMatrix(width(), width(), coeffs); }

FourierSeries2 FourierSeries2::from_matrix(const ComplexMatrix& M) {
    if (!M.is_square() || M.rows() % 2 == 0) throw ContractError("FourierSeries2: need odd square matrix");
    return FourierSeries2(static_cast<int>(M.rows() / 2), M.entries());
}

double comp_series_weight(int n, double s) {
    check_s(s);
    const double k = std::abs(static_cast<double>(n));
    return std::exp(log_gamma(k + 0.5 * (1.0 + s)) - log_gamma(k + 0.5 * (1.0 - s)));
}

NormWeights make_weights(int N, double s) {
    check_s(s);
    NormWeights w;
    w.s = s;
    w.N = N;
    w.weights.resize(static_cast<std::size_t>(2 * N + 1));
    for (int n = 0; n <= N; ++n) {
        const double v = comp_series_weight(n, s);
        w.weights[static_cast<std::size_t>(N + n)] = v;
        w.weights[static_cast<std::size_t>(N - n)] = v;
    }
    return w;
}

double comp_series_norm_sq(const FourierSeries1& f, double s) {
    const NormWeights w = make_weights(f.N, s);
    double acc = 0.0;
    for (int n = -f.N; n <= f.N; ++n) acc += std::norm(f[n]) * w[n];
    return acc;
}

double tensor_norm_sq(const FourierSeries2& F, double s1, double s2) {
    const NormWeights w1 = make_weights(F.N, s1);
    const NormWeights w2 = make_weights(F.N, s2);
    double acc = 0.0;
    for (int n = -F.N; n <= F.N; ++n)
        for (int m = -F.N; m <= F.N; ++m) acc += std::norm(F(n, m)) * w1[n] * w2[m];
    return acc;
}

double l2_norm_sq(const FourierSeries1& f) {
    double acc = 0.0;
    for (const auto& v : f.coeffs) acc += std::norm(v);
    return acc;
}

double l2_norm_sq(const FourierSeries2& F) {
    double acc = 0.0;
    for (const auto& v : F.coeffs) acc += std::norm(v);
    return acc;
}

FourierSeries1 restrict_diagonal(const FourierSeries2& F) {
    FourierSeries1 d(2 * F.N);
    for (int k = -2 * F.N; k <= 2 * F.N; ++k) {
        const int lo = std::max(-F.N, k - F.N);
        const int hi = std::min(F.N, k + F.N);
        cplx acc = 0.0;
        for (int n = lo; n <= hi; ++n) acc += F(n, k - n);
        d[k] = acc;
    }
    return d;
}

FourierSeries1 operator-(const FourierSeries1& a, const FourierSeries1& b) {
    const int N = std::max(a.N, b.N);
    FourierSeries1 r(N);
    for (int n = -N; n <= N; ++n) r[n] = a.at(n) - b.at(n);
    return r;
}

FourierSeries2 operator-(const FourierSeries2& a, const FourierSeries2& b) {
    const int N = std::max(a.N, b.N);
    FourierSeries2 r(N);
    for (int n = -N; n <= N; ++n)
        for (int m = -N; m <= N; ++m) r(n, m) = a.at(n, m) - b.at(n, m);
    return r;
}

FourierSeries1 truncate(const FourierSeries1& f, int order) {
    FourierSeries1 r(order);
    for (int n = -order; n <= order; ++n) r[n] = f.at(n);
    return r;
}

FourierSeries2 truncate(const FourierSeries2& F, int order) {
    FourierSeries2 r(order);
    for (int n = -order; n <= order; ++n)
        for (int m = -order; m <= order; ++m) r(n, m) = F.at(n, m);
    return r;
}

std::vector<cplx> grid_transform(const std::vector<cplx>& values, Direction direction) {
    std::vector<cplx> out = values;
    if (direction == Direction::Forward) {
        dft_inplace(out, -1);
        const double inv = 1.0 / static_cast<double>(out.size());
        for (auto& v : out) v *= inv;
    } else {
        dft_inplace(out, +1);
    }
    return out;
}

std::vector<cplx> to_grid(const FourierSeries1& f, std::size_t G, double offset) {
    if (G < static_cast<std::size_t>(2 * f.N + 1)) throw ContractError("to_grid: grid smaller than 2N+1");
    std::vector<cplx> buf(G, 0.0);
    const double base = 2.0 * std::numbers::pi * offset / static_cast<double>(G);
    for (int n = -f.N; n <= f.N; ++n) buf[wrap(n, G)] += f[n] * std::polar(1.0, n * base);
    dft_inplace(buf, +1);
    return buf;
}

FourierSeries1 from_grid(const std::vector<cplx>& values, int N, double offset) {
    const std::size_t G = values.size();
    if (G < static_cast<std::size_t>(2 * N + 1)) throw ContractError("from_grid: grid smaller than 2N+1");
    const std::vector<cplx> c = grid_transform(values, Direction::Forward);
    const double base = 2.0 * std::numbers::pi * offset / static_cast<double>(G);
    FourierSeries1 f(N);
    for (int n = -N; n <= N; ++n) f[n] = c[wrap(n, G)] * std::polar(1.0, -n * base);
    return f;
}

std::vector<cplx> evaluate2(const FourierSeries2& F, const std::vector<double>& phi1,
                            const std::vector<double>& phi2) {
    const ComplexMatrix E1 = exponential_matrix(phi1, F.N);
    const ComplexMatrix E2t = exponential_matrix(phi2, F.N).transpose();
    const ComplexMatrix V = (E1 * F.as_matrix()) * E2t;
    return V.entries();
}

std::vector<cplx> to_grid2(const FourierSeries2& F, std::size_t G, double offset1, double offset2) {
    if (G < F.width()) throw ContractError("to_grid2: grid smaller than 2N+1");
    return evaluate2(F, grid_points(G, offset1), grid_points(G, offset2));
}

FourierSeries2 from_grid2(const std::vector<cplx>& values, std::size_t G, int N, double offset1,
                          double offset2) {
    if (values.size() != G * G) throw ContractError("from_grid2: expected G*G samples");
    if (G < static_cast<std::size_t>(2 * N + 1)) throw ContractError("from_grid2: grid smaller than 2N+1");
    std::vector<cplx> c = values;
    dft2_inplace(c, G, G, -1);
    const double inv = 1.0 / (static_cast<double>(G) * static_cast<double>(G));
    const double b1 = 2.0 * std::numbers::pi * offset1 / static_cast<double>(G);
    const double b2 = 2.0 * std::numbers::pi * offset2 / static_cast<double>(G);
    FourierSeries2 F(N);
    for (int n = -N; n <= N; ++n)
        for (int m = -N; m <= N; ++m)
            F(n, m) = c[wrap(n, G) * G + wrap(m, G)] * inv * std::polar(1.0, -(n * b1 + m * b2));
    return F;
}

std::vector<double> sin_power_coefficients(double alpha, int K) {
    if (alpha <= -1.0) throw SingularityError("sin_power_coefficients: exponent <= -1 is not integrable");
    if (K < 0) throw ContractError("sin_power_coefficients: negative order");
    std::vector<double> a(static_cast<std::size_t>(K) + 1);
    a[0] = std::exp(log_gamma(alpha + 1.0) - alpha * std::numbers::ln2 - 2.0 * log_gamma(0.5 * alpha + 1.0));
    for (int k = 0; k < K; ++k) a[k + 1] = a[k] * (k - 0.5 * alpha) / (k + 1.0 + 0.5 * alpha);
    return a;
}

FourierSeries2 multiply_sin_power(const FourierSeries2& F, double alpha, std::size_t gridN,
                                  int out_order) {
    if (alpha <= -1.0) throw SingularityError("multiply_sin_power: exponent <= -1 is not integrable");
    if (gridN < 2 * F.width()) throw ContractError("multiply_sin_power: gridN must be >= 2(2N+1)");
    const int N_out = out_order < 0 ? F.N : out_order;
    std::vector<cplx> v = to_grid2(F, gridN, 0.5, 0.0);
    // Multiplier at phi1 - phi2 = (d + 1/2) h from the coefficients |k| < G/2.
    const int K = static_cast<int>(gridN / 2) - 1;
    const std::vector<double> a = sin_power_coefficients(alpha, K);
    FourierSeries1 m(K);
    for (int k = -K; k <= K; ++k) m[k] = a[static_cast<std::size_t>(std::abs(k))];
    const std::vector<cplx> mg = to_grid(m, gridN, 0.5);
    for (std::size_t j = 0; j < gridN; ++j)
        for (std::size_t k = 0; k < gridN; ++k) v[j * gridN + k] *= mg[(j + gridN - k) % gridN].real();
    return from_grid2(v, gridN, N_out, 0.5, 0.0);
}

FourierSeries2 multiply_sin_power_sampled(const FourierSeries2& F, double alpha, std::size_t gridN,
                                          int out_order) {
    if (alpha <= -1.0) throw SingularityError("multiply_sin_power_sampled: exponent <= -1 is not integrable");
    if (gridN < 2 * F.width()) throw ContractError("multiply_sin_power_sampled: gridN must be >= 2(2N+1)");
    const int N_out = out_order < 0 ? F.N : out_order;
    std::vector<cplx> v = to_grid2(F, gridN, 0.5, 0.0);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(gridN);
    // phi1 - phi2 = (d + 1/2) h depends only on d = j - k (mod G).
    std::vector<double> mult(gridN);
    for (std::size_t d = 0; d < gridN; ++d)
        mult[d] = std::pow(std::abs(std::sin(0.5 * (static_cast<double>(d) + 0.5) * h)), alpha);
    for (std::size_t j = 0; j < gridN; ++j)
        for (std::size_t k = 0; k < gridN; ++k) v[j * gridN + k] *= mult[(j + gridN - k) % gridN];
    return from_grid2(v, gridN, N_out, 0.5, 0.0);
}

FourierSeries1 gaussian_series1(int N, std::uint64_t seed, double width) {
    Rng rng(seed);
    FourierSeries1 f(N);
    for (int n = -N; n <= N; ++n) f[n] = std::exp(-(n / width) * (n / width)) * rng.unit_phase();
    return f;
}

FourierSeries2 gaussian_series2(int N, std::uint64_t seed, double width) {
    Rng rng(seed);
    FourierSeries2 F(N);
    for (int n = -N; n <= N; ++n)
        for (int m = -N; m <= N; ++m)
            F(n, m) = std::exp(-((n / width) * (n / width) + (m / width) * (m / width))) * rng.unit_phase();
    return F;
}

}  // namespace cartan
