#include "cartanlab/ball/berezin.hpp"

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/quadrature.hpp"
#include "cartanlab/simd/kernels.hpp"

namespace cartan {
namespace {

// Support of phi packed into struct-of-arrays form for the row kernel.
struct Packed {
    std::vector<double> x, y, a, w;
};

Packed pack(const DiscQuadrature& quad, const std::vector<double>& phi) {
    Packed p;
    for (std::size_t i = 0; i < quad.nodes.size(); ++i) {
        if (phi[i] == 0.0) continue;
        const cplx z = quad.nodes[i];
        p.x.push_back(z.real());
        p.y.push_back(z.imag());
        p.a.push_back(1.0 - std::norm(z));
        p.w.push_back(quad.weights[i] * phi[i]);
    }
    return p;
}

void check_samples(const DiscQuadrature& quad, const std::vector<double>& phi) {
    if (phi.size() != quad.nodes.size()) throw ContractError("berezin: samples do not match the quadrature");
}

}  // namespace

DiscQuadrature disc_quadrature(int quadN) {
    if (quadN < 2) throw ContractError("disc_quadrature: quadN must be >= 2");
    const QuadratureRule radial = gauss_legendre(quadN, 0.0, 1.0);
    DiscQuadrature q;
    q.quadN = quadN;
    const double dt = 2.0 * std::numbers::pi / quadN;
    for (int i = 0; i < quadN; ++i) {
        const double r = radial.nodes[i];
        const double w = radial.weights[i] * r * dt / std::pow(1.0 - r * r, 2);
        for (int j = 0; j < quadN; ++j) {
            q.nodes.push_back(std::polar(r, j * dt));
            q.weights.push_back(w);
        }
    }
    return q;
}

std::vector<double> sample(const DiscQuadrature& quad, const DiscFunction& f) {
    std::vector<double> out(quad.nodes.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f(quad.nodes[i]);
    return out;
}

DiscFunction bump(cplx centre, double rho) {
    return [centre, rho](cplx z) {
        const double d = std::norm(z - centre) / (rho * rho);
        return d < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - d)) : 0.0;
    };
}

DiscFunction plateau(cplx centre, double r0, double r1) {
    return [centre, r0, r1](cplx z) {
        const double d = std::abs(z - centre);
        if (d <= r0) return 1.0;
        if (d >= r1) return 0.0;
        const double t = (d - r0) / (r1 - r0);
        const double a = std::exp(-1.0 / (1.0 - t));
        const double b = std::exp(-1.0 / t);
        return a / (a + b);
    };
}

double berezin_pairing(const DiscQuadrature& quad, const std::vector<double>& phi1,
                       const std::vector<double>& phi2, double s) {
    if (!(s > 0)) throw ParameterError("berezin_pairing: s must be > 0");
    check_samples(quad, phi1);
    check_samples(quad, phi2);
    const Packed z = pack(quad, phi1);
    const Packed u = pack(quad, phi2);
    if (z.x.empty() || u.x.empty()) return 0.0;
    std::vector<double> rows(z.x.size());
    simd::active().berezin_rows(z.x.data(), z.y.data(), z.a.data(), z.x.size(), u.x.data(), u.y.data(), u.a.data(),
                                u.w.data(), u.x.size(), s, rows.data());
    double acc = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) acc += z.w[i] * rows[i];
    return acc;
}

double berezin_pairing(const DiscQuadrature& quad, const DiscFunction& phi1, const DiscFunction& phi2, double s) {
    return berezin_pairing(quad, sample(quad, phi1), sample(quad, phi2), s);
}

double l2_pairing(const DiscQuadrature& quad, const std::vector<double>& phi1, const std::vector<double>& phi2) {
    check_samples(quad, phi1);
    check_samples(quad, phi2);
    double acc = 0.0;
    for (std::size_t i = 0; i < phi1.size(); ++i) acc += quad.weights[i] * phi1[i] * phi2[i];
    return acc;
}

std::vector<BerezinLimitReport> berezin_limit_experiment(const std::vector<double>& s_list, const DiscFunction& phi1,
                                                         const DiscFunction& phi2, const DiscFunction& chi,
                                                         int quadN) {
    const DiscQuadrature quad = disc_quadrature(quadN);
    const auto v1 = sample(quad, phi1), v2 = sample(quad, phi2), vc = sample(quad, chi);
    const double l2_chi = l2_pairing(quad, vc, vc);
    const double l2_ref = l2_pairing(quad, v1, v2);
    if (l2_ref == 0.0) throw ParameterError("berezin_limit_experiment: test functions have disjoint support");
    std::vector<BerezinLimitReport> out;
    for (double s : s_list) {
        BerezinLimitReport r;
        r.s = s;
        r.omega = l2_chi / berezin_pairing(quad, vc, vc, s);
        r.pairing = berezin_pairing(quad, v1, v2, s);
        r.l2_reference = l2_ref;
        r.relative_gap = std::abs(r.omega * r.pairing - l2_ref) / std::abs(l2_ref);
        out.push_back(r);
    }
    return out;
}

BerezinSetup standard_berezin_setup() {
    return {bump(0.3, 0.4), bump(cplx(0.3, 0.1), 0.4), plateau(cplx(0.3, 0.05), 0.15, 0.5)};
}

}  // namespace cartan
