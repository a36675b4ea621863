#include "cartanlab/ball/group.hpp"

#include <algorithm>
#include <cmath>

#include "cartanlab/core/error.hpp"
#include "cartanlab/core/rng.hpp"
#include "cartanlab/kernel/sampling.hpp"
#include "cartanlab/numeric/linalg.hpp"

namespace cartan {
namespace {

ComplexMatrix signature(int p, int q) {
    ComplexMatrix J(p + q, p + q);
    for (int i = 0; i < p + q; ++i) J(i, i) = i < p ? 1.0 : -1.0;
    return J;
}

// (0, 1; sign, 0) with n x n blocks.
ComplexMatrix antidiagonal_form(int n, double sign) {
    ComplexMatrix W(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        W(i, n + i) = 1.0;
        W(n + i, i) = sign;
    }
    return W;
}

ComplexMatrix gaussian(int r, int c, Rng& rng) {
    ComplexMatrix G(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) G(i, j) = rng.complex_normal();
    return G;
}

void check_shape(GroupType t, int p, int q) {
    if (p < 1 || q < 1) throw ContractError("group: block sizes must be >= 1");
    if (t != GroupType::UPQ && p != q) throw ContractError("group: SP2N and SOSTAR need p == q");
}

void check_point(const GroupElement& g, const ComplexMatrix& z) {
    if (z.rows() != static_cast<std::size_t>(g.p) || z.cols() != static_cast<std::size_t>(g.q))
        throw ContractError("mobius: point shape does not match the group blocks");
}

}  // namespace

std::string group_name(GroupType t) {
    switch (t) {
        case GroupType::UPQ: return "UPQ";
        case GroupType::SP2N: return "SP2N";
        case GroupType::SOSTAR: return "SOSTAR";
    }
    return "?";
}

GroupElement GroupElement::identity(GroupType t, int p, int q) {
    check_shape(t, p, q);
    return {t, p, q, ComplexMatrix::identity(static_cast<std::size_t>(p + q))};
}

double GroupElement::form_residual() const {
    const ComplexMatrix J = signature(p, q);
    double r = max_abs_diff(matrix * J * matrix.adjoint(), J);
    if (type == GroupType::UPQ) return r;
    const double sign = type == GroupType::SP2N ? -1.0 : 1.0;
    const ComplexMatrix W = antidiagonal_form(p, sign);
    r = std::max(r, max_abs_diff(matrix * W * matrix.transpose(), W));
    r = std::max(r, max_abs_diff(d(), a().conjugate()));
    r = std::max(r, max_abs_diff(c(), type == GroupType::SP2N ? b().conjugate() : -b().conjugate()));
    return r;
}

Domain GroupElement::domain() const {
    switch (type) {
        case GroupType::UPQ: return Domain::ball(p, q);
        case GroupType::SP2N: return Domain::symmetric(p);
        case GroupType::SOSTAR: return Domain::skew(p);
    }
    return Domain::ball(p, q);
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    if (g.type != h.type || g.p != h.p || g.q != h.q) throw ContractError("group product: mismatched groups");
    return {g.type, g.p, g.q, g.matrix * h.matrix};
}

GroupElement group_from_algebra(GroupType t, int p, int q, const ComplexMatrix& X) {
    check_shape(t, p, q);
    if (X.rows() != static_cast<std::size_t>(p + q) || !X.is_square())
        throw ContractError("group_from_algebra: algebra element has the wrong size");
    GroupElement g{t, p, q, matrix_exp(X)};
    const double r = g.form_residual();
    if (!(r <= kGroupFormTolerance))
        throw GenerationError("group_from_algebra: form residual " + std::to_string(r));
    return g;
}

GroupElement random_group_element(GroupType t, int p, int q, std::uint64_t seed, double scale) {
    check_shape(t, p, q);
    if (!(scale >= 0)) throw ParameterError("random_group_element: scale must be >= 0");
    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt, scale *= 0.5) {
        const ComplexMatrix Ga = gaussian(p, p, rng);
        const ComplexMatrix Gd = gaussian(q, q, rng);
        const ComplexMatrix Gb = gaussian(p, q, rng);
        const ComplexMatrix A = 0.5 * (Ga - Ga.adjoint());
        ComplexMatrix X(p + q, p + q);
        switch (t) {
            case GroupType::UPQ: {
                X.set_block(0, 0, A);
                X.set_block(p, p, 0.5 * (Gd - Gd.adjoint()));
                X.set_block(0, p, Gb);
                X.set_block(p, 0, Gb.adjoint());
                break;
            }
            case GroupType::SP2N: {
                const ComplexMatrix B = 0.5 * (Gb + Gb.transpose());
                X.set_block(0, 0, A);
                X.set_block(p, p, A.conjugate());
                X.set_block(0, p, B);
                X.set_block(p, 0, B.conjugate());
                break;
            }
            case GroupType::SOSTAR: {
                const ComplexMatrix B = 0.5 * (Gb - Gb.transpose());
                X.set_block(0, 0, A);
                X.set_block(p, p, A.conjugate());
                X.set_block(0, p, B);
                X.set_block(p, 0, -B.conjugate());
                break;
            }
        }
        X *= scale;
        try {
            return group_from_algebra(t, p, q, X);
        } catch (const GenerationError&) {
        }
    }
    throw GenerationError("random_group_element: no element passed the form check");
}

ComplexMatrix mobius_boundary(const GroupElement& g, const ComplexMatrix& z) {
    check_point(g, z);
    const ComplexMatrix lhs = g.a() + z * g.c();
    const double cond = condition_number_1(lhs);
    if (!(cond <= kMobiusConditionLimit))
        throw ConditioningError("mobius: a + z c has condition number " + std::to_string(cond));
    return solve(lhs, g.b() + z * g.d());
}

ComplexMatrix mobius(const GroupElement& g, const ComplexMatrix& z) {
    check_point(g, z);
    if (!(operator_norm(z) < 1.0)) throw ContractError("mobius: point is not inside the matrix ball");
    return mobius_boundary(g, z);
}

double group_law_residual(const GroupElement& g, const GroupElement& h, const ComplexMatrix& z) {
    return (mobius(h, mobius(g, z)) - mobius(g * h, z)).frobenius_norm();
}

double scalar_composition_residual(std::uint64_t seed, int samples) {
    Rng rng(seed);
    double worst = 0.0;
    for (int k = 0; k < samples; ++k) {
        const cplx a = rng.complex_normal(), b = rng.complex_normal(), c = rng.complex_normal(),
                   d = rng.complex_normal();
        const cplx al = rng.complex_normal(), be = rng.complex_normal(), ga = rng.complex_normal(),
                   de = rng.complex_normal();
        const cplx z = 0.5 * rng.complex_normal();
        const cplx w = (b + z * d) / (a + z * c);
        const cplx composed = (be + w * de) / (al + w * ga);
        // Both sides cleared of the denominator a + z c.
        const cplx expanded = ((a * be + b * de) + z * (c * be + d * de)) / ((a * al + b * ga) + z * (c * al + d * ga));
        GroupElement G{GroupType::UPQ, 1, 1, {{a, b}, {c, d}}};
        GroupElement H{GroupType::UPQ, 1, 1, {{al, be}, {ga, de}}};
        const ComplexMatrix gh = (G * H).matrix;
        const cplx direct = (gh(0, 1) + z * gh(1, 1)) / (gh(0, 0) + z * gh(1, 0));
        const double scale = std::max(1.0, std::abs(composed));
        worst = std::max(worst, std::abs(composed - expanded) / scale);
        worst = std::max(worst, std::abs(composed - direct) / scale);
    }
    return worst;
}

ComplexMatrix random_domain_point(const Domain& d, std::uint64_t seed) {
    Rng rng(seed);
    return sample_point(d, rng);
}

}  // namespace cartan
