#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/trace/curve.hpp"
#include "cartanlab/trace/l1.hpp"
#include "cartanlab/trace/power_series.hpp"
#include "cartanlab/trace/trace.hpp"
#include "../oracles/frozen_values.hpp"

using namespace cartan;

namespace {

constexpr double kPi = std::numbers::pi;

CurveSpec torus_curve(int a1, int a2, std::size_t M = 512) { return torus_lattice_curve({a1, a2}, {0.0, 0.0}, M); }

}  // namespace

TEST_SUITE("boundary-trace") {
    TEST_CASE("curve margins") {
        const auto disc_leg = sample_curve(
            Ambient::Sphere, [](double t) { return std::vector<cplx>{std::polar(1.0, t), 0.0}; },
            [](double t) { return std::vector<cplx>{cplx(0, 1) * std::polar(1.0, t), 0.0}; }, 256);
        CHECK(std::abs(transversality_margin(disc_leg) - 1.0) <= 1e-14);

        const auto real_circle = sample_curve(
            Ambient::Sphere, [](double t) { return std::vector<cplx>{std::cos(t), std::sin(t)}; },
            [](double t) { return std::vector<cplx>{-std::sin(t), std::cos(t)}; }, 256);
        CHECK(transversality_margin(real_circle) <= 1e-15);

        const double r = 1.0 / std::sqrt(2.0);
        const auto helix = sample_curve(
            Ambient::Sphere, [r](double t) { return std::vector<cplx>{r * std::polar(1.0, t), r * std::polar(1.0, 2 * t)}; },
            [r](double t) {
                return std::vector<cplx>{cplx(0, r) * std::polar(1.0, t), cplx(0, 2 * r) * std::polar(1.0, 2 * t)};
            },
            256);
        CHECK(std::abs(transversality_margin(helix) - 1.5) <= 1e-14);

        CHECK(std::abs(timelike_margin(torus_curve(1, 2)) - 1.0) <= 1e-14);
        CHECK(std::abs(timelike_margin(torus_curve(1, 0))) <= 1e-14);
        CHECK(std::abs(timelike_margin(torus_curve(1, -1)) + 1.0) <= 1e-14);
        CHECK_THROWS_AS(transversality_margin(torus_curve(1, 2)), ContractError);

        CHECK_THROWS_AS(sample_curve(
                            Ambient::Sphere, [](double t) { return std::vector<cplx>{std::polar(1.0, t), 0.5}; },
                            [](double t) { return std::vector<cplx>{cplx(0, 1) * std::polar(1.0, t), 0.0}; }, 16),
                        ContractError);
    }

    TEST_CASE("pairings") {
        const auto curve = torus_curve(1, 2);
        const auto one = PowerSeriesFunction::polynomial(2, {{{0, 0}, 1.0}});
        const auto psi = standard_psi();
        for (double c : {0.5, 0.9}) {
            CHECK(std::abs(radial_trace_pairing(one, curve, psi, c) - 1.0) <= 1e-12);
            CHECK(std::abs(lattice_trace_pairing(one, curve, psi, c).value - 1.0) <= 1e-12);
        }
        const auto z1z2 = PowerSeriesFunction::polynomial(2, {{{1, 1}, 1.0}});
        const auto mode = single_mode_psi(-3, 1.0 / (2 * kPi));
        for (double c : {0.3, 0.75}) {
            CHECK(std::abs(lattice_trace_pairing(z1z2, curve, mode, c).value - c * c) <= 1e-14);
            CHECK(std::abs(radial_trace_pairing(z1z2, curve, mode, c) - c * c) <= 1e-14);
        }

        const auto f = random_polynomial(8, 3), g = random_polynomial(6, 4);
        const cplx a(0.3, -1.2), b(2.0, 0.5);
        const auto h = linear_combination(a, f, b, g);
        for (double c : {0.6, 0.95}) {
            const cplx lhs = lattice_trace_pairing(h, curve, psi, c).value;
            const cplx rhs = a * lattice_trace_pairing(f, curve, psi, c).value + b * lattice_trace_pairing(g, curve, psi, c).value;
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
            CHECK(std::abs(radial_trace_pairing(f, curve, psi, c) - lattice_trace_pairing(f, curve, psi, c).value) <= 1e-12);
        }
        CHECK_THROWS_AS(radial_trace_pairing(f, torus_curve(1, 2, 16), psi, 0.5), ContractError);
    }

    TEST_CASE("edge profiles") {
        const auto toeplitz = std::make_shared<EdgeProfile>(0.3, 0.3, 5, PhaseModel::Toeplitz);
        for (std::uint64_t k = 0; k < 20; ++k) {
            CHECK(toeplitz->phase(k, k + 3) == toeplitz->phase(k + 1, k + 4));
            CHECK(std::abs(std::abs(toeplitz->phase(k, 2 * k)) - 1.0) <= 1e-14);
        }
        const EdgeProfile dual(0.3, 0.6, 5, PhaseModel::Toeplitz, ProfileShape::Dual);
        CHECK(std::abs(std::abs(dual.coefficient(3, 1)) - std::pow(4.0, -0.7) * std::pow(2.0, -0.4)) <= 1e-14);
        const EdgeProfile sym(0.3, 0.6, 5);
        CHECK(std::abs(std::abs(sym.coefficient(3, 1)) - std::pow(8.0, -0.2)) <= 1e-14);

        const auto edge = PowerSeriesFunction::edge(toeplitz, 0);
        const auto r = lattice_trace_pairing(edge, torus_curve(1, 2), standard_psi(), 0.9, 1e-10);
        CHECK(r.tail_bound <= 1e-10);
        CHECK(r.degree_cap > 0);
        CHECK(adaptive_degree_cap(0.99, 1.0, 1.0, 1e-10) > adaptive_degree_cap(0.9, 1.0, 1.0, 1e-10));
    }

    TEST_CASE("gap classification") {
        CHECK(classify_gaps({0.1, 0.05, 0.02, 0.001}, 1e-2) == TraceVerdict::CONVERGENT);
        CHECK(classify_gaps({0.1, 0.2, 0.4, 0.8}, 1e-2) == TraceVerdict::DIVERGENT);
        CHECK(classify_gaps({0.1, 0.2, 0.1, 0.3}, 1e-2) == TraceVerdict::INCONCLUSIVE);
        CHECK(classify_gaps({0.1, 0.05, 0.02}, 1e-2) == TraceVerdict::INCONCLUSIVE);
        const auto gaps = cauchy_gaps({1.0, 1.5, 1.75});
        REQUIRE(gaps.size() == 2);
        CHECK(gaps[0] == 0.5);
        CHECK(gaps[1] == 0.25);
        CHECK(default_ladder().size() == 13);
        CHECK(default_ladder().front() == 0.75);
    }

    TEST_CASE("verdicts are stable under ladder extension") {
        const auto curve = torus_curve(1, 2);
        const auto psi = standard_psi();
        const auto full = default_ladder();
        const auto poly = random_polynomial(10, 8);
        for (std::size_t n = 6; n <= full.size(); ++n) {
            const std::vector<double> ladder(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
            CHECK(trace_diagnostic(poly, curve, psi, ladder).verdict == TraceVerdict::CONVERGENT);
        }
        const auto edge = PowerSeriesFunction::edge(std::make_shared<EdgeProfile>(0.2, 0.2, 11), 0);
        const auto d = trace_diagnostic(edge, curve, psi, full);
        REQUIRE(d.verdict != TraceVerdict::INCONCLUSIVE);
        for (std::size_t n = full.size() - 2; n <= full.size(); ++n) {
            const std::vector<double> ladder(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(n));
            const auto v = trace_diagnostic(edge, curve, psi, ladder).verdict;
            CHECK((v == d.verdict || v == TraceVerdict::INCONCLUSIVE));
        }
    }

    TEST_CASE("experiment determinism") {
        TraceExperimentSpec spec;
        spec.trials = 4;
        spec.seed = 3;
        const auto curve = torus_curve(1, 2);
        const auto a = trace_convergence_experiment(spec, curve, standard_psi(), default_ladder());
        const auto b = trace_convergence_experiment(spec, curve, standard_psi(), default_ladder());
        CHECK(a.convergent + a.divergent + a.inconclusive == 4);
        for (int t = 0; t < 4; ++t) CHECK(a.trials[t].pairings == b.trials[t].pairings);
    }

    TEST_CASE("L1 traces of disc kernels") {
        const DiscKernelElement psi0{0.5, {0.0}, {1.0}};
        CHECK(std::abs(norm_sq(psi0) - 1.0) <= 1e-15);
        CHECK(std::abs(trace_l1_norm(psi0, 0.999, 256) - 1.0) <= 1e-14);

        const double nw = std::sqrt(norm_sq(DiscKernelElement{0.5, {0.9}, {1.0}}));
        const DiscKernelElement psiw{0.5, {0.9}, {1.0 / nw}};
        CHECK(std::abs(norm_sq(psiw) - 1.0) <= 1e-12);
        const double near_edge = trace_l1_norm(psiw, 1.0 - 1e-6, kL1TraceSamples);
        CHECK(near_edge < 1.0);
        CHECK(std::abs(near_edge - trace_l1_norm(psiw, 1.0 - 1e-4, kL1TraceSamples)) < 1e-3);

        const auto ok = l1_boundary_check(0.5, 3, 2, default_ladder());
        CHECK_FALSE(ok.hypothesis_violated);
        CHECK(std::abs(ok.refinement_change) < 0.01);
        CHECK(ok.sup_trace_norm <= 1.0);
        const auto bad = l1_boundary_check(1.2, 1, 2, default_ladder());
        CHECK(bad.hypothesis_violated);
        CHECK(bad.refinement_change > 0.05);
    }

    TEST_CASE("boundary kernel mean") {
        const double oracle = oracle::kCircleMeanS05;
        const double e1 = oracle - disc_kernel_double_integral(0.5, 256);
        const double e2 = oracle - disc_kernel_double_integral(0.5, 1024);
        CHECK(e1 > 0.0);
        CHECK(e2 > 0.0);
        CHECK(e2 < 0.6 * e1);
        // The error decays like M^{-1/2}; one Richardson step removes the leading term.
        const double extrapolated = 2.0 * (oracle - e2) - (oracle - e1);
        CHECK(std::abs(extrapolated - oracle) < 0.1 * e2);
        // s = 0 integrates the constant.
        CHECK(std::abs(disc_kernel_double_integral(0.0, 64) - 1.0) <= 1e-14);
    }
}
