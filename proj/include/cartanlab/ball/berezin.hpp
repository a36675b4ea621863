#pragma once

#include <functional>
#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

using DiscFunction = std::function<double(cplx)>;

// Gauss-Legendre in the radius (quadN nodes on [0, 1]) times the trapezoid
// rule in the angle (quadN nodes). Weights carry the invariant measure
// dA / (1 - |z|^2)^2.
struct DiscQuadrature {
    int quadN = 0;
    std::vector<cplx> nodes;
    std::vector<double> weights;
};

DiscQuadrature disc_quadrature(int quadN);
std::vector<double> sample(const DiscQuadrature& quad, const DiscFunction& f);

// exp(1 - 1/(1 - |z-c|^2/rho^2)) inside the disc of radius rho about c.
DiscFunction bump(cplx centre, double rho);
// 1 on |z-c| <= r0, 0 on |z-c| >= r1, smooth step in between.
DiscFunction plateau(cplx centre, double r0, double r1);

// Double quadrature of |(1-|z|^2)(1-|u|^2)/(1-z conj(u))^2|^s phi1(z) phi2(u)
// against the invariant measure; phi given as samples on the quadrature nodes.
double berezin_pairing(const DiscQuadrature& quad, const std::vector<double>& phi1,
                       const std::vector<double>& phi2, double s);
double berezin_pairing(const DiscQuadrature& quad, const DiscFunction& phi1, const DiscFunction& phi2, double s);

// Single quadrature of phi1 phi2 against the same measure.
double l2_pairing(const DiscQuadrature& quad, const std::vector<double>& phi1, const std::vector<double>& phi2);

struct BerezinLimitReport {
    double s = 0.0;
    double omega = 0.0;
    double pairing = 0.0;
    double l2_reference = 0.0;
    double relative_gap = 0.0;
};

// omega(s) = l2(chi, chi) / pairing(chi, chi) for the calibration function chi.
std::vector<BerezinLimitReport> berezin_limit_experiment(const std::vector<double>& s_list, const DiscFunction& phi1,
                                                         const DiscFunction& phi2, const DiscFunction& chi,
                                                         int quadN);

// Test functions of the standard experiment: two overlapping bumps and the
// calibration plateau covering both.
struct BerezinSetup {
    DiscFunction phi1;
    DiscFunction phi2;
    DiscFunction chi;
};
BerezinSetup standard_berezin_setup();

}  // namespace cartan
