#include "cartanlab/kernel/gram.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/eigen.hpp"

namespace cartan {

ComplexMatrix gram_matrix(const KernelSpec& spec, const PointConfig& config, double* hermiticity_residual) {
    validate_spec(spec);
    const std::size_t n = config.points.size();
    ComplexMatrix G(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) G(i, j) = kernel_value(spec, config.points[j], config.points[i]);
    double dev = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) dev = std::max(dev, std::abs(G(i, j) - std::conj(G(j, i))));
    const double scale = std::max(G.max_abs(), 1e-300);
    if (dev > kHermiticityTolerance * scale) {
        throw KernelImplementationError("gram_matrix: Hermiticity residual " + std::to_string(dev / scale));
    }
    for (std::size_t i = 0; i < n; ++i) {
        G(i, i) = G(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx avg = 0.5 * (G(i, j) + std::conj(G(j, i)));
            G(i, j) = avg;
            G(j, i) = std::conj(avg);
        }
    }
    if (hermiticity_residual) *hermiticity_residual = dev / scale;
    return G;
}

double psd_tolerance(double gram_norm) noexcept {
    return kPsdRelativeTolerance * std::max(1.0, gram_norm);
}

GramReport gram_report(const ComplexMatrix& G, const PointConfig& config, double tol) {
    const auto ev = hermitian_eigenvalues(G);
    GramReport r;
    r.min_eigenvalue = ev.front();
    r.gram_norm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    r.tolerance = tol < 0 ? psd_tolerance(r.gram_norm) : tol;
    r.verdict = r.min_eigenvalue >= -r.tolerance ? Verdict::PSD : Verdict::INDEFINITE;
    r.witness = config;
    return r;
}

GramReport psd_check(const KernelSpec& spec, const PointConfig& config, double tol) {
    double herm = 0.0;
    const ComplexMatrix G = gram_matrix(spec, config, &herm);
    GramReport r = gram_report(G, config, tol);
    r.hermiticity_residual = herm;
    return r;
}

GramReport schur_product_check(const KernelSpec& a, const KernelSpec& b, const PointConfig& config) {
    if (!(a.domain == b.domain)) throw ContractError("schur_product_check: kernels on different domains");
    const ComplexMatrix G = hadamard(gram_matrix(a, config), gram_matrix(b, config));
    return gram_report(G, config);
}

std::vector<WallachRow> wallach_scan(const Domain& domain, const std::vector<double>& s_grid,
                                     int trials, int npoints, std::uint64_t seed) {
    if (trials < 1 || npoints < 1) throw ContractError("wallach_scan: trials and npoints must be >= 1");
    if (!domain.is_matrix_ball()) throw ContractError("wallach_scan: needs a matrix-ball domain");
    std::vector<WallachRow> rows;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        WallachRow row;
        row.s = s_grid[i];
        row.trials = trials;
        const KernelSpec spec = KernelSpec::holomorphic_det(domain, s_grid[i]);
        for (int t = 0; t < trials; ++t) {
            const PointConfig cfg = sample_config(domain, npoints, derive_seed(seed, i, static_cast<std::uint64_t>(t)),
                                                  mixture_kind(t));
            const GramReport rep = psd_check(spec, cfg);
            row.trial_min_eigenvalues.push_back(rep.min_eigenvalue);
            const double rel = rep.min_eigenvalue / std::max(1.0, rep.gram_norm);
            if (t == 0 || rep.min_eigenvalue < row.worst_min_eigenvalue) row.worst_min_eigenvalue = rep.min_eigenvalue;
            if (t == 0 || rel < row.worst_relative) row.worst_relative = rel;
            if (rep.verdict == Verdict::INDEFINITE) ++row.tolerance_violations;
            if (rep.verdict == Verdict::INDEFINITE && rep.strong_witness()) {
                ++row.witnesses;
                if (!row.first_witness) {
                    row.first_witness = rep;
                    row.first_witness_trial = t;
                }
            }
        }
        row.fraction_indefinite = static_cast<double>(row.witnesses) / trials;
        rows.push_back(std::move(row));
    }
    return rows;
}

bool in_listed_positivity_set(const Domain& domain, double s) {
    auto discrete_or_above = [s](double step, int count) {
        const double top = step * (count - 1);
        if (s > top) return true;
        for (int k = 0; k < count; ++k)
            if (std::abs(s - step * k) < 1e-12) return true;
        return false;
    };
    switch (domain.type) {
        case DomainType::BallI: return discrete_or_above(1.0, std::min(domain.p, domain.q));
        case DomainType::SymmetricII: return discrete_or_above(0.5, domain.p);
        case DomainType::SkewIII: return discrete_or_above(1.0, domain.p);
        case DomainType::Polydisc:
        case DomainType::FockSpace: return s >= 0;
    }
    return false;
}

cplx rkhs_eval(const RkhsElement& h, const ComplexMatrix& x) {
    if (h.centers.points.size() != h.coefficients.size())
        throw ContractError("rkhs_eval: centers and coefficients differ in length");
    require_in_domain(h.spec.domain, x);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < h.coefficients.size(); ++i)
        acc += h.coefficients[i] * kernel_value(h.spec, x, h.centers.points[i]);
    return acc;
}

double rkhs_norm_sq(const RkhsElement& h) {
    if (h.centers.points.size() != h.coefficients.size())
        throw ContractError("rkhs_norm_sq: centers and coefficients differ in length");
    cplx acc = 0.0;
    for (std::size_t i = 0; i < h.coefficients.size(); ++i)
        for (std::size_t j = 0; j < h.coefficients.size(); ++j)
            acc += std::conj(h.coefficients[i]) * h.coefficients[j] *
                   kernel_value(h.spec, h.centers.points[i], h.centers.points[j]);
    return acc.real();
}

}  // namespace cartan
