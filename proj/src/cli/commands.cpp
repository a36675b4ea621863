#include "cartanlab/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>

#include "cartanlab/acceptance/criteria.hpp"
#include "cartanlab/ball/berezin.hpp"
#include "cartanlab/ball/cocycle.hpp"
#include "cartanlab/ball/shilov.hpp"
#include "cartanlab/cli/config.hpp"
#include "cartanlab/cli/report.hpp"
#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/kernel/fixture.hpp"
#include "cartanlab/kernel/gram.hpp"
#include "cartanlab/sl2/su11.hpp"
#include "cartanlab/trace/l1.hpp"
#include "cartanlab/trace/trace.hpp"

namespace cartan::cli {
namespace {

using S = std::string;

// Everything a subcommand needs after parsing.
struct Context {
    CLI::App* sub = nullptr;
    std::string out_dir;
};

using Handler = std::function<int(const Context&)>;

ParamList resolved_params(const CLI::App* sub) {
    ParamList out;
    for (const CLI::Option* opt : sub->get_options()) {
        const S name = opt->get_single_name();
        if (name == "help" || name.empty()) continue;
        S value;
        if (opt->count() > 0) {
            const auto& res = opt->results();
            for (std::size_t i = 0; i < res.size(); ++i) value += (i ? "," : "") + res[i];
        } else {
            value = opt->get_default_str();
        }
        out.emplace_back(name, value);
    }
    return out;
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

bool is_integer(double s) { return std::abs(s - std::round(s)) < 1e-12; }

// ---------------------------------------------------------------- wallach-scan
struct WallachArgs {
    S domain = "ball-I";
    int p = 2, q = 2;
    S s_grid = "0:3:0.25";
    int trials = 100, points = 10;
    std::uint64_t seed = 7;
    S witness_out;
    double witness_s = std::nan("");
};

int wallach_cmd(const Context& ctx, const WallachArgs& a) {
    const Domain d = parse_domain(a.domain, a.p, a.q);
    const auto grid = parse_real_grid(a.s_grid);
    require(a.trials >= 1 && a.points >= 1 && a.points <= 200, "trials >= 1 and 1 <= points <= 200");
    const auto rows = wallach_scan(d, grid, a.trials, a.points, a.seed);
    RunReport rep(ctx.out_dir, "wallach-scan", resolved_params(ctx.sub),
                  {"s", "trials", "listed", "violations", "witnesses", "fraction_indefinite",
                   "worst_min_eigenvalue", "worst_relative", "first_witness_trial"});
    int listed_violations = 0;
    const WallachRow* chosen = nullptr;
    std::size_t chosen_index = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        const bool listed = in_listed_positivity_set(d, r.s);
        for (int t = 0; t < r.trials; ++t) {
            Json j;
            j["s"] = r.s;
            j["trial"] = t;
            j["seed"] = derive_seed(a.seed, i, static_cast<std::uint64_t>(t));
            j["sampler"] = sampler_name(mixture_kind(t));
            j["min_eigenvalue"] = r.trial_min_eigenvalues[t];
            rep.trial(std::move(j));
        }
        rep.row({shortest(r.s), std::to_string(r.trials), listed ? "1" : "0", std::to_string(r.tolerance_violations),
                 std::to_string(r.witnesses), shortest(r.fraction_indefinite), shortest(r.worst_min_eigenvalue),
                 shortest(r.worst_relative), std::to_string(r.first_witness_trial)});
        if (listed) listed_violations += r.tolerance_violations;
        const bool wanted = std::isnan(a.witness_s) ? !listed : std::abs(r.s - a.witness_s) < 1e-12;
        if (!chosen && wanted && r.first_witness) {
            chosen = &r;
            chosen_index = i;
        }
    }
    rep.property("positive on the listed set", listed_violations == 0,
                 std::to_string(listed_violations) + " tolerance violations");
    if (!a.witness_out.empty()) {
        rep.property("witness found", chosen != nullptr);
        if (chosen) {
            const int t = chosen->first_witness_trial;
            WitnessFixture w;
            w.domain = d;
            w.s = chosen->s;
            w.config_seed = derive_seed(a.seed, chosen_index, static_cast<std::uint64_t>(t));
            w.sampler = mixture_kind(t);
            w.npoints = a.points;
            w.min_eigenvalue = chosen->first_witness->min_eigenvalue;
            w.config = chosen->first_witness->witness;
            save_witness(a.witness_out, w);
        }
    }
    return rep.finish();
}

// ------------------------------------------------------------ restriction-norm
struct RestrictionArgs {
    double s1 = 0.7, s2 = 0.7;
    S n_list = "64,128,256,512";
};

int restriction_cmd(const Context& ctx, const RestrictionArgs& a) {
    auto orders = parse_int_list(a.n_list);
    for (int n : orders) require(n >= 0 && n <= 1 << 16, "orders must be in 0..65536");
    require(a.s1 > 0 && a.s1 < 1 && a.s2 > 0 && a.s2 < 1, "s1 and s2 must lie in (0,1)");
    const auto curve = restriction_norm_curve(a.s1, a.s2, orders);
    RunReport rep(ctx.out_dir, "restriction-norm", resolved_params(ctx.sub), {"N", "rho"});
    bool monotone = true;
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto [N, rho] = curve.points[i];
        rep.trial(Json{{"N", N}, {"rho", rho}});
        rep.row({std::to_string(N), shortest(rho)});
        for (std::size_t j = 0; j < i; ++j)
            if (curve.points[j].first <= N && curve.points[j].second > rho * (1 + 1e-12)) monotone = false;
    }
    rep.property("non-decreasing in N", monotone);
    return rep.finish();
}

// ------------------------------------------- intertwine-check / j-operator-check
struct IntertwineArgs {
    double s1 = 0.7, s2 = 0.7;
    int order = 64;
    int grid = 1024;
    int trials = 20;
    double scale = 0.3;
    std::uint64_t seed = 7;
    double tol = 1e-6;
};

int intertwine_cmd(const Context& ctx, const IntertwineArgs& a) {
    require(a.order >= 1 && a.grid >= 2 * (2 * a.order + 1), "grid must be at least 2(2*order+1)");
    require(a.trials >= 1 && a.scale > 0, "trials >= 1 and scale > 0");
    RunReport rep(ctx.out_dir, "intertwine-check", resolved_params(ctx.sub), {"trial", "residual"});
    double worst = 0.0;
    for (int t = 0; t < a.trials; ++t) {
        const SU11Element g = random_su11(derive_seed(a.seed, 1, t), a.scale);
        const FourierSeries2 F = gaussian_series2(a.order, derive_seed(a.seed, 2, t));
        const double r = intertwining_residual(g, F, a.s1, a.s2, static_cast<std::size_t>(a.grid));
        worst = std::max(worst, r);
        rep.trial(Json{{"trial", t}, {"a", complex_json(g.a)}, {"b", complex_json(g.b)}, {"residual", r}});
        rep.row({std::to_string(t), shortest(r)});
    }
    rep.property("residual within tolerance", worst <= a.tol, "worst " + shortest(worst));
    return rep.finish();
}

struct JArgs {
    double s = -0.7;
    int order = 32;
    int grid = 1024;
    int trials = 10;
    double scale = 0.2;
    std::uint64_t seed = 7;
    double tol = 1e-4;
};

int j_cmd(const Context& ctx, const JArgs& a) {
    require(a.order >= 1 && a.grid >= 2 * (2 * a.order + 1), "grid must be at least 2(2*order+1)");
    require(a.trials >= 1 && a.scale > 0, "trials >= 1 and scale > 0");
    RunReport rep(ctx.out_dir, "j-operator-check", resolved_params(ctx.sub), {"trial", "residual"});
    double worst = 0.0;
    for (int t = 0; t < a.trials; ++t) {
        const SU11Element g = random_su11(derive_seed(a.seed, 1, t), a.scale);
        const FourierSeries2 F = gaussian_series2(a.order, derive_seed(a.seed, 2, t));
        const double r = j_operator_residual(g, F, a.s, static_cast<std::size_t>(a.grid));
        worst = std::max(worst, r);
        rep.trial(Json{{"trial", t}, {"a", complex_json(g.a)}, {"b", complex_json(g.b)}, {"residual", r}});
        rep.row({std::to_string(t), shortest(r)});
    }
    rep.property("residual within tolerance", worst <= a.tol, "worst " + shortest(worst));
    return rep.finish();
}

// ------------------------------------------------ cocycle-check / group-law-check
struct GroupArgs {
    S group = "U";
    int p = 2, q = 2;
    int samples = 200;
    double scale = 0.5;
    std::uint64_t seed = 7;
};

void check_group_shape(const GroupArgs& a) {
    const GroupType t = parse_group(a.group);
    require(a.p >= 1 && a.p <= 8 && a.q >= 1 && a.q <= 8, "p and q must be in 1..8");
    if (t != GroupType::UPQ) require(a.p == a.q, "Sp and SO* need p == q");
    if (t == GroupType::SOSTAR) require(a.p >= 2, "SO* needs p >= 2");
    require(a.samples >= 1 && a.scale > 0, "samples >= 1 and scale > 0");
}

struct CocycleArgs : GroupArgs {
    S s_list = "1,2,3,1.5,2.7";
    double tol_integer = 1e-12;
    double tol_fractional = 1e-10;
};

int cocycle_cmd(const Context& ctx, const CocycleArgs& a) {
    check_group_shape(a);
    const GroupType type = parse_group(a.group);
    const auto s_list = parse_real_grid(a.s_list);
    RunReport rep(ctx.out_dir, "cocycle-check", resolved_params(ctx.sub),
                  {"s", "samples", "worst_cocycle", "worst_kernel_covariance", "tolerance"});
    std::vector<double> worst_c(s_list.size(), 0.0), worst_k(s_list.size(), 0.0);
    for (int t = 0; t < a.samples; ++t) {
        const GroupElement g = random_group_element(type, a.p, a.q, derive_seed(a.seed, 1, t), a.scale);
        const ComplexMatrix z = random_domain_point(g.domain(), derive_seed(a.seed, 2, t));
        const ComplexMatrix u = random_domain_point(g.domain(), derive_seed(a.seed, 3, t));
        Json j{{"sample", t}, {"form_residual", g.form_residual()}};
        Json per = Json::array();
        for (std::size_t i = 0; i < s_list.size(); ++i) {
            const double c = cocycle_residual(g, z, u, s_list[i]);
            const double k = kernel_rep_covariance(g, z, u, s_list[i]);
            worst_c[i] = std::max(worst_c[i], c);
            worst_k[i] = std::max(worst_k[i], k);
            per.push_back(Json{{"s", s_list[i]}, {"cocycle", c}, {"kernel_covariance", k}});
        }
        j["residuals"] = per;
        rep.trial(std::move(j));
    }
    bool ok = true;
    for (std::size_t i = 0; i < s_list.size(); ++i) {
        const double tol = is_integer(s_list[i]) ? a.tol_integer : a.tol_fractional;
        ok = ok && worst_c[i] <= tol && worst_k[i] <= tol;
        rep.row({shortest(s_list[i]), std::to_string(a.samples), shortest(worst_c[i]), shortest(worst_k[i]),
                 shortest(tol)});
    }
    rep.property("cocycle and kernel covariance within tolerance", ok);
    return rep.finish();
}

struct GroupLawArgs : GroupArgs {
    double tol = 1e-10;
    double tol_scalar = 1e-13;
};

int group_law_cmd(const Context& ctx, const GroupLawArgs& a) {
    check_group_shape(a);
    const GroupType type = parse_group(a.group);
    RunReport rep(ctx.out_dir, "group-law-check", resolved_params(ctx.sub), {"quantity", "worst", "tolerance"});
    double worst = 0.0, form = 0.0;
    for (int t = 0; t < a.samples; ++t) {
        const GroupElement g = random_group_element(type, a.p, a.q, derive_seed(a.seed, 1, t), a.scale);
        const GroupElement h = random_group_element(type, a.p, a.q, derive_seed(a.seed, 2, t), a.scale);
        const ComplexMatrix z = random_domain_point(g.domain(), derive_seed(a.seed, 3, t));
        const double r = group_law_residual(g, h, z);
        worst = std::max(worst, r);
        form = std::max({form, g.form_residual(), h.form_residual()});
        rep.trial(Json{{"sample", t}, {"group_law", r}});
    }
    const double scalar = scalar_composition_residual(derive_seed(a.seed, 4), a.samples);
    rep.row({"group_law", shortest(worst), shortest(a.tol)});
    rep.row({"form", shortest(form), shortest(kGroupFormTolerance)});
    rep.row({"scalar_composition", shortest(scalar), shortest(a.tol_scalar)});
    rep.property("group law", worst <= a.tol, shortest(worst));
    rep.property("1x1 expansion", scalar <= a.tol_scalar, shortest(scalar));
    return rep.finish();
}

// --------------------------------------------------------------- berezin-limit
struct BerezinArgs {
    S s_list = "25,50,100,200";
    int quad_n = 256;
};

int berezin_cmd(const Context& ctx, const BerezinArgs& a) {
    const auto s_list = parse_real_grid(a.s_list);
    for (double s : s_list) require(s > 0, "s must be positive");
    require(a.quad_n >= 16 && a.quad_n <= 4096, "quad-n must be in 16..4096");
    const BerezinSetup st = standard_berezin_setup();
    const auto rows = berezin_limit_experiment(s_list, st.phi1, st.phi2, st.chi, a.quad_n);
    RunReport rep(ctx.out_dir, "berezin-limit", resolved_params(ctx.sub),
                  {"s", "omega", "pairing", "l2_reference", "relative_gap"});
    bool monotone = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        rep.trial(Json{{"s", r.s}, {"omega", r.omega}, {"pairing", r.pairing}, {"l2_reference", r.l2_reference},
                       {"relative_gap", r.relative_gap}});
        rep.row({shortest(r.s), shortest(r.omega), shortest(r.pairing), shortest(r.l2_reference),
                 shortest(r.relative_gap)});
        if (i && rows[i - 1].s < r.s && !(r.relative_gap < rows[i - 1].relative_gap)) monotone = false;
    }
    rep.property("gap decreases in s", monotone);
    return rep.finish();
}

// ------------------------------------------------------------- orbit-invariant
struct OrbitArgs {
    int p = 2, q = 3;
    int pairs = 200, elements = 20;
    double scale = 0.5;
    std::uint64_t seed = 7;
};

int orbit_cmd(const Context& ctx, const OrbitArgs& a) {
    require(a.p >= 1 && a.q >= a.p && a.q <= 8, "need 1 <= p <= q <= 8");
    require(a.pairs >= 1 && a.elements >= 1 && a.scale > 0, "pairs, elements >= 1 and scale > 0");
    std::vector<GroupElement> gs;
    for (int j = 0; j < a.elements; ++j)
        gs.push_back(random_group_element(GroupType::UPQ, a.p, a.q, derive_seed(a.seed, 1, j), a.scale));
    RunReport rep(ctx.out_dir, "orbit-invariant", resolved_params(ctx.sub), {"alpha", "pairs"});
    std::map<int, int> hist;
    int changed = 0, conj_nonzero = 0;
    for (int t = 0; t < a.pairs; ++t) {
        const auto [z, u] = shilov_pair(a.p, a.q, t % (a.p + 1), derive_seed(a.seed, 2, t));
        const int alpha = orbit_invariant(z, u);
        ++hist[alpha];
        int moved = 0;
        if (orbit_invariant(z, z.conjugate()) != 0) ++conj_nonzero;
        for (const auto& g : gs) {
            const auto [gz, gu] = act_on_pair(g, z, u);
            if (orbit_invariant(gz, gu) != alpha) ++moved;
            const auto [hz, hu] = act_on_pair(g, z, z.conjugate());
            if (orbit_invariant(hz, hu) != 0) ++conj_nonzero;
        }
        changed += moved;
        rep.trial(Json{{"pair", t}, {"alpha", alpha}, {"changed", moved}});
    }
    for (const auto& [alpha, n] : hist) rep.row({std::to_string(alpha), std::to_string(n)});
    rep.property("alpha invariant under the action", changed == 0, std::to_string(changed) + " changes");
    rep.property("alpha = 0 on u = conj(z)", conj_nonzero == 0, std::to_string(conj_nonzero) + " nonzero");
    return rep.finish();
}

// -------------------------------------------------------------- boundary-trace
struct TraceArgs {
    S family = "edge";
    S freqs = "1,-1";
    S curve_phases;
    int samples = 256;
    double s1 = 0.9, s2 = 0.6;
    int degree = 8;
    S phases = "toeplitz";
    S shape = "symmetric";
    int trials = 20;
    std::uint64_t seed = 7;
    double tol = kTraceTolerance;
    S expect;
    double min_fraction = 0.95;
};

int trace_cmd(const Context& ctx, const TraceArgs& a) {
    const auto freqs = parse_int_list(a.freqs);
    require(freqs.size() == 2, "freqs must list two integers");
    std::vector<double> curve_phases(freqs.size(), 0.0);
    if (!a.curve_phases.empty()) curve_phases = parse_real_grid(a.curve_phases);
    require(curve_phases.size() == freqs.size(), "curve-phases must match freqs");
    require(a.samples >= 16 && a.samples <= 1 << 16, "samples must be in 16..65536");
    require(a.trials >= 1 && a.tol > 0, "trials >= 1 and tol > 0");
    TraceExperimentSpec spec;
    require(a.family == "edge" || a.family == "polynomial", "family must be edge or polynomial");
    spec.family = a.family == "edge" ? TraceFamily::EdgeProfile : TraceFamily::Polynomial;
    spec.s1 = a.s1;
    spec.s2 = a.s2;
    spec.degree = a.degree;
    spec.phases = parse_phase_model(a.phases);
    spec.shape = parse_profile_shape(a.shape);
    spec.trials = a.trials;
    spec.seed = a.seed;
    spec.tolerance = a.tol;
    require(a.s1 > 0 && a.s1 < 1 && a.s2 > 0 && a.s2 < 1, "s1 and s2 must lie in (0,1)");
    require(a.degree >= 0 && a.degree <= 64, "degree must be in 0..64");
    std::optional<TraceVerdict> expect;
    if (!a.expect.empty()) {
        require(a.expect == "convergent" || a.expect == "divergent", "expect must be convergent or divergent");
        expect = a.expect == "convergent" ? TraceVerdict::CONVERGENT : TraceVerdict::DIVERGENT;
    }
    const CurveSpec curve = torus_lattice_curve(freqs, curve_phases, static_cast<std::size_t>(a.samples));
    const auto ladder = default_ladder();
    const auto res = trace_convergence_experiment(spec, curve, standard_psi(), ladder);
    RunReport rep(ctx.out_dir, "boundary-trace", resolved_params(ctx.sub),
                  {"trial", "verdict", "last_gap", "max_tail_bound", "max_degree_cap"});
    for (std::size_t t = 0; t < res.trials.size(); ++t) {
        const auto& d = res.trials[t];
        Json pairings = Json::array();
        for (cplx v : d.pairings) pairings.push_back(complex_json(v));
        rep.trial(Json{{"trial", t},
                       {"ladder", d.ladder},
                       {"pairings", pairings},
                       {"gaps", d.gaps},
                       {"tail_bounds", d.tail_bounds},
                       {"degree_caps", d.degree_caps},
                       {"verdict", verdict_name(d.verdict)}});
        const double tail = d.tail_bounds.empty() ? 0.0 : *std::max_element(d.tail_bounds.begin(), d.tail_bounds.end());
        const int cap = d.degree_caps.empty() ? 0 : *std::max_element(d.degree_caps.begin(), d.degree_caps.end());
        rep.row({std::to_string(t), verdict_name(d.verdict), shortest(d.gaps.empty() ? 0.0 : d.gaps.back()),
                 shortest(tail), std::to_string(cap)});
    }
    if (expect) {
        const double f = res.fraction(*expect);
        rep.property("fraction " + a.expect, f >= a.min_fraction, shortest(f));
    }
    return rep.finish();
}

// ---------------------------------------------------------------- l1-boundary
struct L1Args {
    double s = 0.5;
    int trials = 10;
    std::uint64_t seed = 7;
    double tol_change = 0.01;
};

int l1_cmd(const Context& ctx, const L1Args& a) {
    require(a.s > 0 && a.s < 2, "s must lie in (0,2)");
    require(a.trials >= 0 && a.trials <= 1000, "trials must be in 0..1000");
    const auto r = l1_boundary_check(a.s, a.trials, a.seed, default_ladder());
    RunReport rep(ctx.out_dir, "l1-boundary", resolved_params(ctx.sub),
                  {"s", "kernel_coarse", "kernel_fine", "refinement_change", "sup_trace_norm", "convergent_trials",
                   "trials", "hypothesis_violated"});
    for (std::size_t t = 0; t < r.trials.size(); ++t) {
        const auto& tr = r.trials[t];
        rep.trial(Json{{"trial", t}, {"norms", tr.norms}, {"gaps", tr.gaps}, {"verdict", verdict_name(tr.verdict)}});
    }
    rep.row({shortest(r.s), shortest(r.kernel_coarse), shortest(r.kernel_fine), shortest(r.refinement_change),
             shortest(r.sup_trace_norm), std::to_string(r.convergent_trials), std::to_string(r.trials.size()),
             r.hypothesis_violated ? "1" : "0"});
    if (!r.hypothesis_violated) {
        rep.property("kernel integral stable under refinement", std::abs(r.refinement_change) <= a.tol_change,
                     shortest(r.refinement_change));
        rep.property("trace norms convergent", r.convergent_trials == static_cast<int>(r.trials.size()));
    }
    return rep.finish();
}

// ------------------------------------------------------------------- selftest
struct SelftestArgs {
    S fixtures;
    int only = 0;
};

int selftest_cmd(const Context& ctx, const SelftestArgs& a) {
    require(a.only >= 0 && a.only <= 11, "only must be in 0..11");
    AcceptanceOptions opt;
    opt.fixture_dir = a.fixtures;
    opt.on_result = [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; };
    std::vector<CriterionResult> results;
    if (a.only > 0) {
        results.push_back(run_criterion(a.only, opt));
        opt.on_result(results.back());
    } else {
        results = run_acceptance(opt);
    }
    RunReport rep(ctx.out_dir, "selftest", resolved_params(ctx.sub), {"id", "title", "status", "detail"});
    int hard = 0;
    for (const auto& r : results) {
        const S status = r.passed ? "pass" : (r.known_red ? "known-red" : "fail");
        if (!r.passed && !r.known_red) ++hard;
        rep.trial(Json{{"id", r.id}, {"title", r.title}, {"status", status}, {"detail", r.detail},
                       {"analysis", r.analysis}});
        rep.row({std::to_string(r.id), r.title, status, r.detail});
    }
    rep.property("no unexpected failures", hard == 0, std::to_string(hard) + " failed");
    return rep.finish();
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
    static const std::vector<std::string> names = {
        "wallach-scan",   "restriction-norm", "intertwine-check", "j-operator-check", "cocycle-check", "group-law-check",
        "berezin-limit",  "orbit-invariant",  "boundary-trace",  "l1-boundary",      "selftest"};
    return names;
}

int run(const std::vector<std::string>& args) {
    CLI::App app{"cartanlab: reproducible experiments on positive kernels, boundary representations and traces",
                 "cartanlab"};
    app.option_defaults()->always_capture_default();
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "TOML config file; a [subcommand] section sets that subcommand's flags");
    std::string out_dir = default_out_dir();
    app.add_option("--out", out_dir, std::string("output directory (default from ") + kOutDirEnv + ")");
    app.add_flag_callback(
        "--list-kernels",
        [] {
            Json list = Json::array();
            for (const auto& e : kernel_catalog())
                list.push_back({{"domain", domain_type_name(e.domain)}, {"family", family_name(e.family)}});
            std::cout << list.dump() << '\n';
            throw CLI::Success();
        },
        "print the supported (domain, family) pairs as JSON and exit");

    std::map<CLI::App*, Handler> handlers;
    const auto add = [&](const char* name, const char* help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->configurable();
        handlers[sub] = std::move(h);
        return sub;
    };

    WallachArgs wa;
    {
        auto* s = add("wallach-scan", "positivity of det(1 - z u*)^-s over random configurations",
                      [&](const Context& c) { return wallach_cmd(c, wa); });
        s->add_option("--domain", wa.domain, "ball-I, symmetric-II or skew-III");
        s->add_option("--p", wa.p);
        s->add_option("--q", wa.q, "ignored for symmetric-II and skew-III");
        s->add_option("--s-grid", wa.s_grid, "a:b:step or comma list");
        s->add_option("--trials", wa.trials);
        s->add_option("--points", wa.points);
        s->add_option("--seed", wa.seed);
        s->add_option("--witness-out", wa.witness_out, "freeze the first witness as a JSON fixture");
        s->add_option("--witness-s", wa.witness_s, "s of the witness to freeze (default: first unlisted s)");
    }
    RestrictionArgs ra;
    {
        auto* s = add("restriction-norm", "diagonal restriction norm on truncated tensor products",
                      [&](const Context& c) { return restriction_cmd(c, ra); });
        s->add_option("--s1", ra.s1);
        s->add_option("--s2", ra.s2);
        s->add_option("--n-list", ra.n_list, "comma list of truncation orders");
    }
    IntertwineArgs ia;
    {
        auto* s = add("intertwine-check", "restriction intertwines the tensor and the complementary series",
                      [&](const Context& c) { return intertwine_cmd(c, ia); });
        s->add_option("--s1", ia.s1);
        s->add_option("--s2", ia.s2);
        s->add_option("--order", ia.order);
        s->add_option("--grid", ia.grid);
        s->add_option("--trials", ia.trials);
        s->add_option("--scale", ia.scale);
        s->add_option("--seed", ia.seed);
        s->add_option("--tol", ia.tol);
    }
    JArgs ja;
    {
        auto* s = add("j-operator-check", "the sine-power multiplier intertwines",
                      [&](const Context& c) { return j_cmd(c, ja); });
        s->add_option("--s", ja.s, "in (-1, -1/2)");
        s->add_option("--order", ja.order);
        s->add_option("--grid", ja.grid);
        s->add_option("--trials", ja.trials);
        s->add_option("--scale", ja.scale);
        s->add_option("--seed", ja.seed);
        s->add_option("--tol", ja.tol);
    }
    CocycleArgs ca;
    {
        auto* s = add("cocycle-check", "kernel transformation law under the group",
                      [&](const Context& c) { return cocycle_cmd(c, ca); });
        s->add_option("--group", ca.group, "U, Sp or SO*");
        s->add_option("--p", ca.p);
        s->add_option("--q", ca.q);
        s->add_option("--samples", ca.samples);
        s->add_option("--scale", ca.scale);
        s->add_option("--seed", ca.seed);
        s->add_option("--s-list", ca.s_list);
        s->add_option("--tol-integer", ca.tol_integer);
        s->add_option("--tol-fractional", ca.tol_fractional);
    }
    GroupLawArgs ga;
    {
        auto* s = add("group-law-check", "Mobius action is a group action",
                      [&](const Context& c) { return group_law_cmd(c, ga); });
        s->add_option("--group", ga.group, "U, Sp or SO*");
        s->add_option("--p", ga.p);
        s->add_option("--q", ga.q);
        s->add_option("--samples", ga.samples);
        s->add_option("--scale", ga.scale);
        s->add_option("--seed", ga.seed);
        s->add_option("--tol", ga.tol);
        s->add_option("--tol-scalar", ga.tol_scalar);
    }
    BerezinArgs ba;
    {
        auto* s = add("berezin-limit", "Berezin pairing against the L2 pairing as s grows",
                      [&](const Context& c) { return berezin_cmd(c, ba); });
        s->add_option("--s-list", ba.s_list);
        s->add_option("--quad-n", ba.quad_n);
    }
    OrbitArgs oa;
    {
        auto* s = add("orbit-invariant", "rank invariant of boundary pairs under the group",
                      [&](const Context& c) { return orbit_cmd(c, oa); });
        s->add_option("--p", oa.p);
        s->add_option("--q", oa.q);
        s->add_option("--pairs", oa.pairs);
        s->add_option("--elements", oa.elements);
        s->add_option("--scale", oa.scale);
        s->add_option("--seed", oa.seed);
    }
    TraceArgs ta;
    {
        auto* s = add("boundary-trace", "Cauchy diagnostic of traces on a torus curve",
                      [&](const Context& c) { return trace_cmd(c, ta); });
        s->add_option("--family", ta.family, "edge or polynomial");
        s->add_option("--freqs", ta.freqs, "curve frequencies, e.g. 1,1 or 1,-1");
        s->add_option("--curve-phases", ta.curve_phases, "curve phases (default 0,0)");
        s->add_option("--samples", ta.samples, "curve samples");
        s->add_option("--s1", ta.s1);
        s->add_option("--s2", ta.s2);
        s->add_option("--degree", ta.degree, "polynomial family degree");
        s->add_option("--phases", ta.phases, "toeplitz or independent");
        s->add_option("--shape", ta.shape, "symmetric or dual");
        s->add_option("--trials", ta.trials);
        s->add_option("--seed", ta.seed);
        s->add_option("--tol", ta.tol);
        s->add_option("--expect", ta.expect, "convergent or divergent; asserts min-fraction");
        s->add_option("--min-fraction", ta.min_fraction);
    }
    L1Args la;
    {
        auto* s = add("l1-boundary", "L1 boundary values of disc kernels", [&](const Context& c) { return l1_cmd(c, la); });
        s->add_option("--s", la.s);
        s->add_option("--trials", la.trials);
        s->add_option("--seed", la.seed);
        s->add_option("--tol-change", la.tol_change);
    }
    SelftestArgs sa;
    {
        auto* s = add("selftest", "run the acceptance criteria", [&](const Context& c) { return selftest_cmd(c, sa); });
        s->add_option("--fixtures", sa.fixtures, "witness fixture directory (empty skips the replay)");
        s->add_option("--only", sa.only, "run one criterion (1..11)");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }
    for (auto& [sub, handler] : handlers) {
        if (!sub->parsed()) continue;
        try {
            return handler(Context{sub, out_dir});
        } catch (const ConfigError& e) {
            std::cerr << "cartanlab " << sub->get_name() << ": " << e.what() << '\n';
            return kExitConfigError;
        } catch (const ContractError& e) {
            std::cerr << "cartanlab " << sub->get_name() << ": " << e.what() << '\n';
            return kExitConfigError;
        } catch (const ParameterError& e) {
            std::cerr << "cartanlab " << sub->get_name() << ": " << e.what() << '\n';
            return kExitConfigError;
        } catch (const std::exception& e) {
            std::cerr << "cartanlab " << sub->get_name() << ": " << e.what() << '\n';
            return kExitPropertyFailed;
        }
    }
    return kExitConfigError;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace cartan::cli
