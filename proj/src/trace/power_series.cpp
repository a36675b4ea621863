#include "cartanlab/trace/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"

namespace cartan {
namespace {
constexpr std::size_t kPhaseTableSize = 1u << 16;
}

EdgeProfile::EdgeProfile(double s1, double s2, std::uint64_t seed, PhaseModel model, ProfileShape shape)
    : smax_(std::max(s1, s2)), seed_(seed), model_(model), shape_(shape) {
    if (!(s1 > 0 && s2 > 0 && smax_ <= 1.0)) throw ParameterError("EdgeProfile: needs 0 < s1, s2 <= 1");
    if (shape == ProfileShape::Symmetric) {
        exponent1_ = exponent2_ = (smax_ - 1.0) / 2.0;
    } else {
        exponent1_ = s1 - 1.0;
        exponent2_ = s2 - 1.0;
    }
    Rng rng(seed);
    table_.reserve(kPhaseTableSize);
    for (std::size_t i = 0; i < kPhaseTableSize; ++i) table_.push_back(rng.unit_phase());
}

cplx EdgeProfile::phase(std::uint64_t k, std::uint64_t l) const noexcept {
    const std::uint64_t slot = model_ == PhaseModel::Toeplitz ? derive_seed(seed_, k - l) : derive_seed(seed_, k, l);
    return table_[slot & (kPhaseTableSize - 1)];
}

cplx EdgeProfile::coefficient(std::uint64_t k, std::uint64_t l) const {
    return std::pow(static_cast<double>(k + 1), exponent1_) * std::pow(static_cast<double>(l + 1), exponent2_) *
           phase(k, l);
}

PowerSeriesFunction PowerSeriesFunction::polynomial(int arity, std::vector<Monomial> terms) {
    PowerSeriesFunction f;
    f.arity = arity;
    double C = 0.0;
    for (const auto& m : terms) {
        if (m.exponents.size() != static_cast<std::size_t>(arity)) throw ContractError("polynomial: exponent arity");
        for (int e : m.exponents)
            if (e < 0) throw ContractError("polynomial: negative exponent");
        C = std::max(C, std::abs(m.coefficient));
    }
    f.terms = std::move(terms);
    f.growth_constant = C;
    return f;
}

PowerSeriesFunction PowerSeriesFunction::edge(std::shared_ptr<const EdgeProfile> profile, int degree_cap) {
    if (!profile) throw ContractError("edge series: missing profile");
    if (degree_cap < 0) throw ContractError("edge series: negative degree cap");
    PowerSeriesFunction f;
    f.arity = 2;
    f.growth_exponent = profile->exponent();
    f.profile = std::move(profile);
    f.degree_cap = degree_cap;
    f.growth_constant = 1.0;
    return f;
}

int PowerSeriesFunction::total_degree() const {
    if (profile) return 2 * degree_cap;
    int d = 0;
    for (const auto& m : terms) {
        int s = 0;
        for (int e : m.exponents) s += e;
        d = std::max(d, s);
    }
    return d;
}

cplx PowerSeriesFunction::evaluate(const std::vector<cplx>& z) const {
    if (z.size() != static_cast<std::size_t>(arity)) throw ContractError("evaluate: point arity");
    if (profile) {
        if (degree_cap == 0) throw ContractError("evaluate: edge series without a degree cap");
        cplx acc = 0.0;
        cplx zk = 1.0;
        for (int k = 0; k <= degree_cap; ++k, zk *= z[0]) {
            cplx zl = 1.0;
            for (int l = 0; l <= degree_cap; ++l, zl *= z[1]) acc += profile->coefficient(k, l) * zk * zl;
        }
        return acc;
    }
    cplx acc = 0.0;
    for (const auto& m : terms) {
        cplx v = m.coefficient;
        for (int i = 0; i < arity; ++i)
            for (int e = 0; e < m.exponents[i]; ++e) v *= z[i];
        acc += v;
    }
    return acc;
}

PowerSeriesFunction linear_combination(cplx alpha, const PowerSeriesFunction& f, cplx beta,
                                       const PowerSeriesFunction& g) {
    if (!f.is_polynomial() || !g.is_polynomial() || f.arity != g.arity)
        throw ContractError("linear_combination: needs two polynomials of equal arity");
    std::vector<Monomial> t;
    for (auto m : f.terms) {
        m.coefficient *= alpha;
        t.push_back(m);
    }
    for (auto m : g.terms) {
        m.coefficient *= beta;
        t.push_back(m);
    }
    return PowerSeriesFunction::polynomial(f.arity, std::move(t));
}

PowerSeriesFunction random_polynomial(int degree, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Monomial> t;
    for (int k = 0; k <= degree; ++k)
        for (int l = 0; k + l <= degree; ++l) t.push_back({{k, l}, rng.complex_normal()});
    return PowerSeriesFunction::polynomial(2, std::move(t));
}

}  // namespace cartan
