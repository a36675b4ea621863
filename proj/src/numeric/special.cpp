#include "cartanlab/numeric/special.hpp"

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"

namespace cartan {

namespace {

constexpr double kLanczosCoef[14] = {
    57.1562356658629235,      -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,    0.339946499848118887e-4,  0.465236289270485756e-4,
    -0.983744753048795646e-4, 0.158088703224912494e-3,  -0.210264441724104883e-3,
    0.217439618115212643e-3,  -0.164318106536763890e-3, 0.844182239838527433e-4,
    -0.261908384015814087e-4, 0.368991826595316234e-5};

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: argument must be positive");
    if (x == 1.0 || x == 2.0) return 0.0;
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (double c : kLanczosCoef) ser += c / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double gamma_fn(double x) {
    if (x <= 0.0 && std::floor(x) == x) throw DomainError("gamma_fn: pole at non-positive integer");
    if (x < 0.5) {
        const double pi = std::numbers::pi;
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    return std::exp(log_gamma(x));
}

double bessel_i(int n, double x) {
    if (n < 0) n = -n;
    const double h = 0.5 * x;
    double term = 1.0;
    for (int k = 1; k <= n; ++k) term *= h / k;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= h * h / (static_cast<double>(k) * (k + n));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace cartan
