#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <vector>

#include "cartanlab/numeric/complex_matrix.hpp"

namespace cartan {

struct Monomial {
    std::vector<int> exponents;
    cplx coefficient;
};

// How the unimodular factors u_{k,l} of an edge series are drawn. Both read a
// per-seed table of 2^16 random roots of unity; Independent chooses the slot
// by a hash of (k, l), Toeplitz by a hash of k - l, so that u is constant
// along each diagonal.
enum class PhaseModel { Toeplitz, Independent };

// Modulus of the edge coefficients.
enum class ProfileShape {
    Symmetric,  // ((k+1)(l+1))^{(smax-1)/2}, smax = max(s1, s2)
    Dual,       // (k+1)^{s1-1} (l+1)^{s2-1}: kernel coefficients of H_{s1,s2} over the monomial norms squared
};

// Coefficients c_{k,l} = modulus(k, l) u_{k,l}.
class EdgeProfile {
public:
    EdgeProfile(double s1, double s2, std::uint64_t seed, PhaseModel model = PhaseModel::Toeplitz,
                ProfileShape shape = ProfileShape::Symmetric);

    PhaseModel model() const noexcept { return model_; }
    ProfileShape shape() const noexcept { return shape_; }
    // Larger of the two per-variable exponents (<= 0 for admissible s).
    double exponent() const noexcept { return std::max(exponent1_, exponent2_); }
    double exponent1() const noexcept { return exponent1_; }
    double exponent2() const noexcept { return exponent2_; }
    double smax() const noexcept { return smax_; }
    std::uint64_t seed() const noexcept { return seed_; }
    cplx phase(std::uint64_t k, std::uint64_t l) const noexcept;
    cplx coefficient(std::uint64_t k, std::uint64_t l) const;

private:
    double smax_;
    double exponent1_ = 0.0;
    double exponent2_ = 0.0;
    std::uint64_t seed_;
    PhaseModel model_;
    ProfileShape shape_;
    std::vector<cplx> table_;
};

// Either a polynomial given by its monomials or a bidisc edge-profile series.
// growth_constant C and growth_exponent e declare |c_k| <= C prod (1 + k_i)^e.
struct PowerSeriesFunction {
    int arity = 2;
    std::vector<Monomial> terms;
    std::shared_ptr<const EdgeProfile> profile;
    // Per variable, profile only; 0 lets the exact pairing pick the cap from
    // its tail bound, and direct evaluation then refuses.
    int degree_cap = 0;
    double growth_constant = 1.0;
    double growth_exponent = 0.0;

    static PowerSeriesFunction polynomial(int arity, std::vector<Monomial> terms);
    static PowerSeriesFunction edge(std::shared_ptr<const EdgeProfile> profile, int degree_cap);

    bool is_polynomial() const noexcept { return profile == nullptr; }
    // Largest total degree of the truncated series.
    int total_degree() const;
    cplx evaluate(const std::vector<cplx>& z) const;
};

PowerSeriesFunction linear_combination(cplx alpha, const PowerSeriesFunction& f, cplx beta,
                                       const PowerSeriesFunction& g);

// Random polynomial in two variables, total degree <= degree.
PowerSeriesFunction random_polynomial(int degree, std::uint64_t seed);

}  // namespace cartan
