#pragma once

#include <functional>
#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

enum class Ambient { Sphere, Torus };

inline constexpr double kCurveTolerance = 1e-10;

// Samples of gamma and gamma' on the uniform grid t_j = 2 pi j / M. Torus
// curves of the form gamma_k(t) = exp(i (a_k t + sigma_k)) also keep the
// integer frequencies a_k and phases sigma_k, which the exact pairing uses.
struct CurveSpec {
    Ambient ambient = Ambient::Torus;
    int dim = 2;  // number of complex coordinates
    std::vector<double> t;
    std::vector<std::vector<cplx>> gamma;
    std::vector<std::vector<cplx>> dgamma;
    std::vector<int> frequencies;
    std::vector<double> phases;

    std::size_t samples() const noexcept { return t.size(); }
    bool is_lattice() const noexcept { return !frequencies.empty(); }
};

using CurveMap = std::function<std::vector<cplx>(double)>;

// Throws ContractError when a sample is off the sphere / torus by more than
// kCurveTolerance.
CurveSpec sample_curve(Ambient ambient, const CurveMap& gamma, const CurveMap& dgamma, std::size_t M);
CurveSpec torus_lattice_curve(const std::vector<int>& frequencies, const std::vector<double>& phases, std::size_t M);

// min_j |Im <gamma(t_j), gamma'(t_j)>|, <x, y> = sum x_k conj(y_k).
double transversality_margin(const CurveSpec& curve);
// min over samples and coordinates of phi_k'(t_j) = Im(gamma_k' / gamma_k).
double timelike_margin(const CurveSpec& curve);

}  // namespace cartan
