#pragma once

#include <vector>

namespace cartan {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [a, b] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

}  // namespace cartan
