#include "cartanlab/kernel/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/eigen.hpp"

namespace cartan {

namespace {

// Configurations must regenerate bit for bit from their seed on any SIMD
// level, so sampling uses only scalar-kernel products.
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) { return reference_product(a, b); }

double spectral_norm(const ComplexMatrix& m) {
    ComplexMatrix H = mul(m.adjoint(), m);
    for (std::size_t i = 0; i < H.rows(); ++i) {
        H(i, i) = H(i, i).real();
        for (std::size_t j = i + 1; j < H.cols(); ++j) H(j, i) = std::conj(H(i, j));
    }
    return std::sqrt(std::max(0.0, hermitian_eigenvalues(H).back()));
}

ComplexMatrix gaussian_matrix(std::size_t r, std::size_t c, Rng& rng) {
    ComplexMatrix m(r, c);
    for (std::size_t i = 0; i < r * c; ++i) m.data()[i] = rng.complex_normal();
    return m;
}

ComplexMatrix shaped_gaussian(const Domain& d, Rng& rng) {
    ComplexMatrix g = gaussian_matrix(d.rows(), d.cols(), rng);
    if (d.type == DomainType::SymmetricII) g = 0.5 * (g + g.transpose());
    if (d.type == DomainType::SkewIII) g = 0.5 * (g - g.transpose());
    return g;
}

ComplexMatrix rescaled(const ComplexMatrix& m, double r) {
    const double nrm = spectral_norm(m);
    if (nrm == 0.0) return m;
    return m * cplx(r / nrm, 0.0);
}

// 2x2 patterns whose alternating sum isolates the determinant of the
// z-derivative at the centre: weights (+,-,-,-,+,+).
std::vector<ComplexMatrix> det_stencil_ball(std::size_t p, std::size_t q) {
    auto E = [&](std::size_t i, std::size_t j) {
        ComplexMatrix m(p, q);
        m(i, j) = 1.0;
        return m;
    };
    return {E(0, 0) + E(1, 1), E(0, 0), E(1, 1), E(0, 1) + E(1, 0), E(0, 1), E(1, 0)};
}

std::vector<ComplexMatrix> det_stencil_symmetric(std::size_t n) {
    auto E = [&](std::size_t i, std::size_t j) {
        ComplexMatrix m(n, n);
        m(i, j) = 1.0;
        return m;
    };
    return {E(0, 0) + E(1, 1), E(0, 0), E(1, 1), E(0, 1) + E(1, 0)};
}

std::vector<ComplexMatrix> stencil_points(const Domain& d, Rng& rng) {
    const double centre_radius = rng.uniform(0.0, 0.3);
    const double h = rng.uniform(0.1, 0.4);
    ComplexMatrix c = rescaled(shaped_gaussian(d, rng), centre_radius);
    std::vector<ComplexMatrix> pts;
    switch (d.type) {
        case DomainType::BallI:
            if (d.p >= 2 && d.q >= 2) {
                const ComplexMatrix U = haar_unitary(d.rows(), rng);
                const ComplexMatrix V = haar_unitary(d.cols(), rng);
                for (const auto& S : det_stencil_ball(d.rows(), d.cols())) pts.push_back(c + mul(mul(U, S), V) * cplx(h, 0.0));
                return pts;
            }
            break;
        case DomainType::SymmetricII:
            if (d.p >= 2) {
                const ComplexMatrix U = haar_unitary(d.rows(), rng);
                for (const auto& S : det_stencil_symmetric(d.rows()))
                    pts.push_back(c + mul(mul(U, S), U.transpose()) * cplx(h, 0.0));
                return pts;
            }
            break;
        default:
            break;
    }
    // Small-perturbation cluster around the centre.
    pts.push_back(c);
    for (int k = 0; k < 4; ++k) {
        if (d.type == DomainType::FockSpace) {
            pts.push_back(c + gaussian_matrix(1, d.cols(), rng) * cplx(h, 0.0));
        } else {
            pts.push_back(c + rescaled(shaped_gaussian(d, rng), h));
        }
    }
    return pts;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix Z = gaussian_matrix(n, n, rng);
    // Modified Gram-Schmidt on columns; column phases from the construction
    // make the result Haar distributed.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx dot = 0.0;
                for (std::size_t i = 0; i < n; ++i) dot += std::conj(Z(i, k)) * Z(i, j);
                for (std::size_t i = 0; i < n; ++i) Z(i, j) -= dot * Z(i, k);
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(Z(i, j));
        nrm = std::sqrt(nrm);
        if (nrm == 0.0) throw GenerationError("haar_unitary: rank-deficient sample");
        for (std::size_t i = 0; i < n; ++i) Z(i, j) /= nrm;
    }
    return Z;
}

ComplexMatrix sample_point(const Domain& d, Rng& rng, double rmin, double rmax) {
    switch (d.type) {
        case DomainType::BallI:
        case DomainType::SymmetricII:
        case DomainType::SkewIII: {
            const ComplexMatrix g = shaped_gaussian(d, rng);
            return rescaled(g, rng.uniform(rmin, rmax));
        }
        case DomainType::Polydisc: {
            ComplexMatrix z(1, d.cols());
            for (std::size_t k = 0; k < d.cols(); ++k)
                z(0, k) = std::polar(rmax * std::sqrt(rng.uniform()), 2.0 * std::numbers::pi * rng.uniform());
            return z;
        }
        case DomainType::FockSpace:
            return gaussian_matrix(1, d.cols(), rng);
    }
    throw ContractError("sample_point: unknown domain");
}

PointConfig sample_config(const Domain& d, int npoints, std::uint64_t seed, SamplerKind kind) {
    if (npoints < 1) throw ContractError("sample_config: need at least one point");
    Rng rng(seed);
    PointConfig cfg;
    cfg.seed = seed;
    if (kind == SamplerKind::Stencil) {
        auto pts = stencil_points(d, rng);
        for (auto& p : pts) {
            if (static_cast<int>(cfg.points.size()) == npoints) break;
            cfg.points.push_back(std::move(p));
        }
    }
    while (static_cast<int>(cfg.points.size()) < npoints) cfg.points.push_back(sample_point(d, rng));
    return cfg;
}

SamplerKind mixture_kind(int trial) noexcept {
    return (trial % 2 == 1) ? SamplerKind::Stencil : SamplerKind::Generic;
}

}  // namespace cartan
