#pragma once

namespace cartan {

// ln Gamma(x) for x > 0 (Lanczos approximation, g = 671/128, 14 terms).
double log_gamma(double x);

// Gamma(x) for real x that is not a non-positive integer; uses the
// reflection formula below 1/2.
double gamma_fn(double x);

// Modified Bessel function I_n(x) by its power series; intended for
// moderate x (|x| <= 20).
double bessel_i(int n, double x);

}  // namespace cartan
