#include "cartanlab/trace/trace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/numeric/special.hpp"

namespace cartan {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_radius(double c) {
    if (!(c > 0.0 && c < 1.0)) throw ContractError("trace pairing: radius must lie in (0, 1)");
}

int max_frequency(const CurveSpec& curve) {
    int m = 0;
    for (int a : curve.frequencies) m = std::max(m, std::abs(a));
    return m;
}

PairingResult lattice_polynomial(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi,
                                 double c) {
    PairingResult r;
    for (const auto& m : f.terms) {
        long freq = 0;
        int deg = 0;
        double phase = 0.0;
        for (int i = 0; i < f.arity; ++i) {
            freq += static_cast<long>(curve.frequencies[i]) * m.exponents[i];
            deg += m.exponents[i];
            phase += m.exponents[i] * curve.phases[i];
        }
        if (std::labs(freq) > psi.J) continue;
        r.value += m.coefficient * std::pow(c, deg) * std::polar(1.0, phase) * kTwoPi * psi.at(static_cast<int>(-freq));
        r.degree_cap = std::max(r.degree_cap, deg);
    }
    return r;
}

PairingResult lattice_edge(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi, double c,
                           double tail_target) {
    const EdgeProfile& prof = *f.profile;
    const int D = f.degree_cap > 0 ? f.degree_cap
                                   : adaptive_degree_cap(c, f.growth_constant, psi.max_abs_coeff(), tail_target);
    const long a = curve.frequencies[0], b = curve.frequencies[1];
    std::vector<double> w1(D + 1), w2(D + 1), cp(D + 1);
    std::vector<cplx> e1(D + 1), e2(D + 1);
    for (int k = 0; k <= D; ++k) {
        w1[k] = std::pow(static_cast<double>(k + 1), prof.exponent1());
        w2[k] = std::pow(static_cast<double>(k + 1), prof.exponent2());
        cp[k] = std::pow(c, k);
        e1[k] = std::polar(1.0, k * curve.phases[0]);
        e2[k] = std::polar(1.0, k * curve.phases[1]);
    }
    auto term = [&](long k, long l) {
        const long n = -(a * k + b * l);
        return w1[k] * w2[l] * prof.phase(k, l) * cp[k] * cp[l] * e1[k] * e2[l] * psi.at(static_cast<int>(n));
    };
    cplx acc = 0.0;
    for (long k = 0; k <= D; ++k) {
        if (b == 0) {
            if (std::labs(a * k) > psi.J) continue;
            for (long l = 0; l <= D; ++l) acc += term(k, l);
            continue;
        }
        // a k + b l + n = 0 for some |n| <= J
        for (long n = -psi.J; n <= psi.J; ++n) {
            const long num = -n - a * k;
            if (num % b != 0) continue;
            const long l = num / b;
            if (l < 0 || l > D) continue;
            acc += term(k, l);
        }
    }
    PairingResult r;
    r.value = kTwoPi * acc;
    r.degree_cap = D;
    const double cD = std::pow(c, D + 1);
    r.tail_bound = kTwoPi * f.growth_constant * psi.max_abs_coeff() * 2.0 * cD / ((1.0 - c) * (1.0 - c));
    return r;
}

}  // namespace

cplx PeriodicTest::evaluate(double t) const {
    cplx acc = 0.0;
    for (int n = -J; n <= J; ++n) acc += coeffs[n + J] * std::polar(1.0, n * t);
    return acc;
}

double PeriodicTest::max_abs_coeff() const {
    double m = 0.0;
    for (auto x : coeffs) m = std::max(m, std::abs(x));
    return m;
}

PeriodicTest standard_psi() {
    PeriodicTest p;
    p.J = 20;
    const double norm = kTwoPi * bessel_i(0, 1.0);
    for (int n = -p.J; n <= p.J; ++n) p.coeffs.push_back(bessel_i(std::abs(n), 1.0) / norm);
    return p;
}

PeriodicTest single_mode_psi(int n, cplx amplitude) {
    PeriodicTest p;
    p.J = std::abs(n);
    p.coeffs.assign(2 * p.J + 1, 0.0);
    p.coeffs[n + p.J] = amplitude;
    return p;
}

cplx radial_trace_pairing(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi, double c) {
    check_radius(c);
    if (!f.is_polynomial()) throw ContractError("radial_trace_pairing: only polynomials are evaluated on the grid");
    if (curve.dim != f.arity) throw ContractError("radial_trace_pairing: curve and function arity differ");
    const std::size_t M = curve.samples();
    if (curve.is_lattice()) {
        const long band = static_cast<long>(f.total_degree()) * max_frequency(curve) + psi.J;
        if (static_cast<long>(M) <= band)
            throw ContractError("radial_trace_pairing: " + std::to_string(M) + " samples do not resolve bandwidth " +
                                std::to_string(band));
    }
    cplx acc = 0.0;
    std::vector<cplx> z(curve.dim);
    for (std::size_t j = 0; j < M; ++j) {
        for (int k = 0; k < curve.dim; ++k) z[k] = c * curve.gamma[j][k];
        acc += f.evaluate(z) * psi.evaluate(curve.t[j]);
    }
    return acc * (kTwoPi / static_cast<double>(M));
}

int adaptive_degree_cap(double c, double growth_constant, double psi_max, double tail_target) {
    check_radius(c);
    if (!(tail_target > 0)) throw ContractError("adaptive_degree_cap: tail target must be > 0");
    const double pre = kTwoPi * growth_constant * psi_max * 2.0 / ((1.0 - c) * (1.0 - c));
    if (pre <= tail_target) return 0;
    // pre * c^{D+1} <= target
    const double need = std::log(tail_target / pre) / std::log(c);
    return std::max(0, static_cast<int>(std::ceil(need)) - 1);
}

PairingResult lattice_trace_pairing(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi,
                                    double c, double tail_target) {
    check_radius(c);
    if (!curve.is_lattice()) throw ContractError("lattice_trace_pairing: needs a lattice curve");
    if (curve.dim != f.arity) throw ContractError("lattice_trace_pairing: curve and function arity differ");
    if (f.is_polynomial()) return lattice_polynomial(f, curve, psi, c);
    if (f.growth_exponent > 0) throw ContractError("lattice_trace_pairing: growing coefficient profile");
    return lattice_edge(f, curve, psi, c, tail_target);
}

std::string verdict_name(TraceVerdict v) {
    switch (v) {
        case TraceVerdict::CONVERGENT: return "CONVERGENT";
        case TraceVerdict::DIVERGENT: return "DIVERGENT";
        case TraceVerdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

std::vector<double> default_ladder() {
    std::vector<double> c;
    for (int k = 2; k <= 14; ++k) c.push_back(1.0 - std::ldexp(1.0, -k));
    return c;
}

std::vector<double> cauchy_gaps(const std::vector<cplx>& values) {
    double scale = 1.0;
    for (auto v : values) scale = std::max(scale, std::abs(v));
    std::vector<double> g;
    for (std::size_t i = 1; i < values.size(); ++i) {
        const double d = std::abs(values[i] - values[i - 1]);
        g.push_back(d < kGapNoiseFloor * scale ? 0.0 : d);
    }
    return g;
}

TraceVerdict classify_gaps(const std::vector<double>& gaps, double tol) {
    if (gaps.size() < 3) return TraceVerdict::INCONCLUSIVE;
    const double g1 = gaps[gaps.size() - 3], g2 = gaps[gaps.size() - 2], g3 = gaps.back();
    if (g1 >= g2 && g2 >= g3 && g3 < tol) return TraceVerdict::CONVERGENT;
    if (g1 < g2 && g2 < g3 && g3 > 10.0 * tol) return TraceVerdict::DIVERGENT;
    return TraceVerdict::INCONCLUSIVE;
}

TraceDiagnostic trace_diagnostic(const PowerSeriesFunction& f, const CurveSpec& curve, const PeriodicTest& psi,
                                 const std::vector<double>& ladder, double tol) {
    TraceDiagnostic d;
    d.ladder = ladder;
    d.tolerance = tol;
    for (double c : ladder) {
        if (f.is_polynomial()) {
            d.pairings.push_back(radial_trace_pairing(f, curve, psi, c));
            d.tail_bounds.push_back(0.0);
            d.degree_caps.push_back(f.total_degree());
        } else {
            const PairingResult r = lattice_trace_pairing(f, curve, psi, c);
            d.pairings.push_back(r.value);
            d.tail_bounds.push_back(r.tail_bound);
            d.degree_caps.push_back(r.degree_cap);
        }
    }
    d.gaps = cauchy_gaps(d.pairings);
    d.verdict = classify_gaps(d.gaps, tol);
    return d;
}

double TraceExperimentReport::fraction(TraceVerdict v) const {
    if (trials.empty()) return 0.0;
    const int n = v == TraceVerdict::CONVERGENT ? convergent : v == TraceVerdict::DIVERGENT ? divergent : inconclusive;
    return static_cast<double>(n) / static_cast<double>(trials.size());
}

TraceExperimentReport trace_convergence_experiment(const TraceExperimentSpec& spec, const CurveSpec& curve,
                                                   const PeriodicTest& psi, const std::vector<double>& ladder) {
    if (spec.trials < 1) throw ContractError("trace_convergence_experiment: trials must be >= 1");
    TraceExperimentReport rep;
    for (int t = 0; t < spec.trials; ++t) {
        const std::uint64_t seed = derive_seed(spec.seed, static_cast<std::uint64_t>(t));
        PowerSeriesFunction f;
        if (spec.family == TraceFamily::EdgeProfile) {
            f = PowerSeriesFunction::edge(std::make_shared<EdgeProfile>(spec.s1, spec.s2, seed, spec.phases, spec.shape), 0);
        } else {
            f = random_polynomial(spec.degree, seed);
        }
        TraceDiagnostic d = trace_diagnostic(f, curve, psi, ladder, spec.tolerance);
        switch (d.verdict) {
            case TraceVerdict::CONVERGENT: ++rep.convergent; break;
            case TraceVerdict::DIVERGENT: ++rep.divergent; break;
            case TraceVerdict::INCONCLUSIVE: ++rep.inconclusive; break;
        }
        rep.trials.push_back(std::move(d));
    }
    return rep;
}

}  // namespace cartan
