#include "cartanlab/trace/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cartanlab/core/error.hpp"

namespace cartan {

CurveSpec sample_curve(Ambient ambient, const CurveMap& gamma, const CurveMap& dgamma, std::size_t M) {
    if (M < 1) throw ContractError("sample_curve: need at least one sample");
    CurveSpec c;
    c.ambient = ambient;
    for (std::size_t j = 0; j < M; ++j) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(M);
        auto g = gamma(t);
        auto dg = dgamma(t);
        if (j == 0) c.dim = static_cast<int>(g.size());
        if (g.size() != static_cast<std::size_t>(c.dim) || dg.size() != g.size())
            throw ContractError("sample_curve: inconsistent coordinate count");
        if (ambient == Ambient::Sphere) {
            double n = 0.0;
            for (auto x : g) n += std::norm(x);
            if (std::abs(std::sqrt(n) - 1.0) > kCurveTolerance) throw ContractError("sample_curve: point off the sphere");
        } else {
            for (auto x : g)
                if (std::abs(std::abs(x) - 1.0) > kCurveTolerance) throw ContractError("sample_curve: point off the torus");
        }
        c.t.push_back(t);
        c.gamma.push_back(std::move(g));
        c.dgamma.push_back(std::move(dg));
    }
    return c;
}

CurveSpec torus_lattice_curve(const std::vector<int>& frequencies, const std::vector<double>& phases, std::size_t M) {
    if (frequencies.empty() || frequencies.size() != phases.size())
        throw ContractError("torus_lattice_curve: frequencies and phases differ in length");
    auto g = [&](double t) {
        std::vector<cplx> v;
        for (std::size_t k = 0; k < frequencies.size(); ++k) v.push_back(std::polar(1.0, frequencies[k] * t + phases[k]));
        return v;
    };
    auto dg = [&](double t) {
        std::vector<cplx> v;
        for (std::size_t k = 0; k < frequencies.size(); ++k)
            v.push_back(cplx(0.0, frequencies[k]) * std::polar(1.0, frequencies[k] * t + phases[k]));
        return v;
    };
    CurveSpec c = sample_curve(Ambient::Torus, g, dg, M);
    c.frequencies = frequencies;
    c.phases = phases;
    return c;
}

double transversality_margin(const CurveSpec& curve) {
    if (curve.ambient != Ambient::Sphere) throw ContractError("transversality_margin: needs a sphere curve");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < curve.samples(); ++j) {
        cplx ip = 0.0;
        for (int k = 0; k < curve.dim; ++k) ip += curve.gamma[j][k] * std::conj(curve.dgamma[j][k]);
        m = std::min(m, std::abs(ip.imag()));
    }
    return m;
}

double timelike_margin(const CurveSpec& curve) {
    if (curve.ambient != Ambient::Torus) throw ContractError("timelike_margin: needs a torus curve");
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < curve.samples(); ++j)
        for (int k = 0; k < curve.dim; ++k) m = std::min(m, (curve.dgamma[j][k] / curve.gamma[j][k]).imag());
    return m;
}

}  // namespace cartan
