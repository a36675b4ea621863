#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/kernel/fixture.hpp"
#include "cartanlab/kernel/gram.hpp"
#include "cartanlab/kernel/matrix_kernel.hpp"
#include "cartanlab/numeric/eigen.hpp"
#include "cartanlab/numeric/linalg.hpp"
#include "helpers.hpp"

using namespace cartan;
using testing::naive_det;
using testing::rel;

namespace {

std::vector<KernelSpec> catalog_specs() {
    return {KernelSpec::holomorphic_det(Domain::ball(2, 3), 1.7), KernelSpec::modulus_det(Domain::ball(2, 2), 0.8),
            KernelSpec::berezin(Domain::ball(1, 1), 3.0),         KernelSpec::holomorphic_det(Domain::symmetric(2), 0.5),
            KernelSpec::modulus_det(Domain::symmetric(3), 1.2),   KernelSpec::berezin(Domain::symmetric(2), 2.0),
            KernelSpec::holomorphic_det(Domain::skew(3), 2.0),    KernelSpec::modulus_det(Domain::skew(4), 1.5),
            KernelSpec::berezin(Domain::skew(2), 1.0),            KernelSpec::polydisc_product({0.3, 0.9}),
            KernelSpec::exp_fock(3)};
}

double min_eig(const ComplexMatrix& G) { return hermitian_eigenvalues(G).front(); }

}  // namespace

TEST_SUITE("kernel-engine") {
    TEST_CASE("catalog") {
        CHECK(kernel_catalog().size() == 11);
        for (const auto& spec : catalog_specs()) {
            CHECK(in_catalog(spec));
            CHECK_NOTHROW(validate_spec(spec));
        }
        CHECK_THROWS_AS(validate_spec(KernelSpec{Domain::fock(2), KernelFamily::Berezin, 1.0, {}}), ContractError);
        CHECK_THROWS_AS(validate_spec(KernelSpec{Domain::polydisc(2), KernelFamily::HolomorphicDet, 1.0, {}}), ContractError);
    }

    TEST_CASE("kernel values") {
        for (const auto& spec : catalog_specs()) {
            const ComplexMatrix zero(spec.domain.rows(), spec.domain.cols());
            CHECK(std::abs(kernel_value(spec, zero, zero) - 1.0) < 1e-15);
        }
        const auto disc = KernelSpec::holomorphic_det(Domain::ball(1, 1), 1.0);
        CHECK(std::abs(kernel_value(disc, ComplexMatrix::scalar(0.5), ComplexMatrix::scalar(0.5)) - 4.0 / 3.0) < 1e-15);

        const Domain b22 = Domain::ball(2, 2);
        const auto spec = KernelSpec::holomorphic_det(b22, 2.0);
        const PointConfig cfg = sample_config(b22, 6, 3, SamplerKind::Generic);
        for (std::size_t i = 0; i + 1 < cfg.points.size(); ++i) {
            const ComplexMatrix& z = cfg.points[i];
            const ComplexMatrix& u = cfg.points[i + 1];
            const cplx oracle = 1.0 / std::pow(naive_det(ComplexMatrix::identity(2) - z * u.adjoint()), 2);
            CHECK(std::abs(kernel_value(spec, z, u) - oracle) <= 1e-12 * std::abs(oracle));
        }

        // Polydisc product and Fock kernels against their formulas.
        const ComplexMatrix z{{cplx(0.3, 0.1), cplx(-0.2, 0.5)}}, u{{cplx(0.1, -0.4), cplx(0.6, 0.0)}};
        const cplx pd = std::pow(1.0 - z(0, 0) * std::conj(u(0, 0)), -0.3) * std::pow(1.0 - z(0, 1) * std::conj(u(0, 1)), -0.9);
        CHECK(std::abs(kernel_value(KernelSpec::polydisc_product({0.3, 0.9}), z, u) - pd) < 1e-14);
        const cplx fock = std::exp(z(0, 0) * std::conj(u(0, 0)) + z(0, 1) * std::conj(u(0, 1)));
        CHECK(std::abs(kernel_value(KernelSpec::exp_fock(2), z, u) - fock) < 1e-14);

        CHECK_THROWS_AS(kernel_value(disc, ComplexMatrix::scalar(1.2), ComplexMatrix::scalar(0.0)), ContractError);
    }

    TEST_CASE("rotation invariance and the modulus identity") {
        Rng rng(4);
        for (const auto& spec : catalog_specs()) {
            const PointConfig cfg = sample_config(spec.domain, 4, 10, SamplerKind::Generic);
            const cplx e = std::polar(1.0, rng.uniform(0, 2 * std::numbers::pi));
            for (std::size_t i = 0; i + 1 < cfg.points.size(); ++i) {
                const cplx k = kernel_value(spec, cfg.points[i], cfg.points[i + 1]);
                const cplx kr = kernel_value(spec, e * cfg.points[i], e * cfg.points[i + 1]);
                CHECK(std::abs(k - kr) <= 1e-12 * std::max(1.0, std::abs(k)));
            }
        }
        const Domain b = Domain::ball(2, 3);
        const PointConfig cfg = sample_config(b, 5, 11, SamplerKind::Generic);
        for (std::size_t i = 0; i + 1 < cfg.points.size(); ++i) {
            const cplx h = kernel_value(KernelSpec::holomorphic_det(b, 0.7), cfg.points[i], cfg.points[i + 1]);
            const cplx m = kernel_value(KernelSpec::modulus_det(b, 0.7), cfg.points[i], cfg.points[i + 1]);
            CHECK(rel(m.real(), std::norm(h)) <= 1e-12);
            CHECK(std::abs(m.imag()) == 0.0);
        }
    }

    TEST_CASE("sampling respects the domains") {
        for (const Domain& d : {Domain::ball(2, 3), Domain::symmetric(3), Domain::skew(4), Domain::polydisc(3)}) {
            for (SamplerKind k : {SamplerKind::Generic, SamplerKind::Stencil}) {
                const PointConfig cfg = sample_config(d, 12, 5, k);
                CHECK(cfg.points.size() == 12);
                for (const auto& z : cfg.points) {
                    CHECK(in_domain(d, z));
                    if (d.type == DomainType::SymmetricII) CHECK(max_abs_diff(z, z.transpose()) <= 1e-12);
                    if (d.type == DomainType::SkewIII) CHECK(max_abs_diff(z, -z.transpose()) <= 1e-12);
                }
                const PointConfig again = sample_config(d, 12, 5, k);
                for (std::size_t i = 0; i < 12; ++i) CHECK(max_abs_diff(cfg.points[i], again.points[i]) == 0.0);
            }
        }
    }

    TEST_CASE("gram matrices") {
        const Domain b = Domain::ball(2, 2);
        const auto spec = KernelSpec::holomorphic_det(b, 3.0);
        PointConfig one;
        one.points = {sample_config(b, 1, 1, SamplerKind::Generic).points[0]};
        const ComplexMatrix G1 = gram_matrix(spec, one);
        CHECK(G1(0, 0).real() > 0);
        CHECK(G1(0, 0).imag() == 0.0);

        PointConfig twin;
        twin.points = {one.points[0], one.points[0]};
        CHECK(std::abs(min_eig(gram_matrix(spec, twin))) <= 1e-12 * gram_matrix(spec, twin).max_abs());

        const PointConfig cfg = sample_config(b, 8, 2, SamplerKind::Generic);
        double herm = -1.0;
        const ComplexMatrix G = gram_matrix(spec, cfg, &herm);
        CHECK(herm >= 0.0);
        CHECK(max_abs_diff(G, G.adjoint()) == 0.0);
        CHECK(std::abs(G(0, 1) - kernel_value(spec, cfg.points[1], cfg.points[0])) <= 1e-12 * G.max_abs());
        CHECK(psd_check(spec, cfg).verdict == Verdict::PSD);

        for (const auto& s : catalog_specs()) {
            double h = 0.0;
            const ComplexMatrix g = gram_matrix(s, sample_config(s.domain, 7, 3, SamplerKind::Generic), &h);
            CHECK(h <= 1e-10 * std::max(1.0, g.max_abs()));
        }
    }

    TEST_CASE("positivity on the listed sets") {
        const PointConfig disc = sample_config(Domain::ball(1, 1), 6, 7, SamplerKind::Generic);
        CHECK(psd_check(KernelSpec::holomorphic_det(Domain::ball(1, 1), 0.37), disc).verdict == Verdict::PSD);

        const auto b22 = wallach_scan(Domain::ball(2, 2), {1.0}, 100, 10, 1);
        CHECK(b22[0].tolerance_violations == 0);

        const auto c2 = wallach_scan(Domain::symmetric(2), {0.5, 0.25}, 200, 10, 3);
        CHECK(c2[0].fraction_indefinite == 0.0);
        CHECK(c2[1].fraction_indefinite > 0.0);
        CHECK(c2[1].first_witness.has_value());

        const auto d3 = wallach_scan(Domain::skew(3), {0.0, 1.0, 2.0, 2.3, 3.5}, 50, 8, 4);
        for (const auto& r : d3) CHECK(r.tolerance_violations == 0);

        CHECK(in_listed_positivity_set(Domain::ball(2, 2), 0.0));
        CHECK(in_listed_positivity_set(Domain::ball(2, 2), 1.0));
        CHECK_FALSE(in_listed_positivity_set(Domain::ball(2, 2), 0.5));
        CHECK(in_listed_positivity_set(Domain::symmetric(2), 0.5));
        CHECK_FALSE(in_listed_positivity_set(Domain::symmetric(2), 0.25));
        CHECK(in_listed_positivity_set(Domain::skew(3), 2.0));
        CHECK_FALSE(in_listed_positivity_set(Domain::skew(3), 1.5));
    }

    TEST_CASE("scans are deterministic") {
        const auto a = wallach_scan(Domain::ball(2, 2), {0.5, 1.5}, 20, 6, 9);
        const auto b = wallach_scan(Domain::ball(2, 2), {0.5, 1.5}, 20, 6, 9);
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].trial_min_eigenvalues == b[i].trial_min_eigenvalues);
    }

    TEST_CASE("frozen witnesses") {
        for (const char* name : {"witness_ball_I_2x2_s0.5.json", "witness_symmetric_II_2_s0.25.json"}) {
            const auto path = std::filesystem::path(CARTANLAB_FIXTURE_DIR) / name;
            REQUIRE(std::filesystem::exists(path));
            const WitnessFixture w = load_witness(path.string());
            const auto spec = KernelSpec::holomorphic_det(w.domain, w.s);
            const GramReport r = psd_check(spec, w.config);
            CHECK(r.verdict == Verdict::INDEFINITE);
            CHECK(r.strong_witness());
            // Recomputation agrees up to rounding; the AVX2 and scalar kernels differ in the last bits.
            CHECK(std::abs(r.min_eigenvalue - w.min_eigenvalue) <= 1e-12 * std::abs(w.min_eigenvalue));
            // The witness survives perturbations of size 1e-8.
            PointConfig moved = w.config;
            Rng rng(1);
            for (auto& z : moved.points) {
                ComplexMatrix dz = testing::random_matrix(z.rows(), z.cols(), rng.next_u64());
                if (w.domain.type == DomainType::SymmetricII) dz = 0.5 * (dz + dz.transpose());
                z += (1e-8 / dz.frobenius_norm()) * dz;
            }
            CHECK(psd_check(spec, moved).min_eigenvalue < 0.0);
            // JSON round trip is lossless.
            const WitnessFixture back = read_witness_json(write_witness_json(w));
            CHECK(back.s == w.s);
            CHECK(back.config_seed == w.config_seed);
            CHECK(back.domain == w.domain);
            for (std::size_t i = 0; i < w.config.points.size(); ++i)
                CHECK(max_abs_diff(back.config.points[i], w.config.points[i]) == 0.0);
        }
        CHECK_THROWS(read_witness_json("{\"domain\": \"ball-I\"}"));
    }

    TEST_CASE("reproducing kernel Hilbert space elements") {
        const Domain b = Domain::ball(2, 2);
        const auto spec = KernelSpec::holomorphic_det(b, 2.0);
        const PointConfig centers = sample_config(b, 5, 12, SamplerKind::Generic);
        const PointConfig probes = sample_config(b, 3, 13, SamplerKind::Generic);
        RkhsElement psi{spec, {{centers.points[0]}, 0}, {1.0}};
        for (const auto& x : probes.points)
            CHECK(std::abs(rkhs_eval(psi, x) - kernel_value(spec, x, centers.points[0])) == 0.0);
        RkhsElement zero{spec, centers, std::vector<cplx>(5, 0.0)};
        CHECK(rkhs_eval(zero, probes.points[0]) == cplx(0.0));
        CHECK(rkhs_norm_sq(zero) == 0.0);

        Rng rng(2);
        RkhsElement h{spec, centers, {}};
        for (int i = 0; i < 5; ++i) h.coefficients.push_back(rng.complex_normal());
        cplx pair = 0.0;
        for (int i = 0; i < 5; ++i) pair += std::conj(h.coefficients[i]) * rkhs_eval(h, centers.points[i]);
        CHECK(rel(rkhs_norm_sq(h), pair.real()) <= 1e-12);
        CHECK(std::abs(pair.imag()) <= 1e-12 * std::abs(pair));
        CHECK(rkhs_norm_sq(h) > 0.0);
    }

    TEST_CASE("Schur products") {
        const Domain b = Domain::ball(2, 2);
        const PointConfig cfg = sample_config(b, 8, 14, SamplerKind::Generic);
        const auto k1 = KernelSpec::holomorphic_det(b, 1.0);
        const GramReport sq = schur_product_check(k1, k1, cfg);
        CHECK(sq.verdict == Verdict::PSD);
        const ComplexMatrix L = gram_matrix(KernelSpec::modulus_det(b, 1.0), cfg);
        const ComplexMatrix H = hadamard(gram_matrix(k1, cfg), gram_matrix(k1, cfg).conjugate());
        CHECK(max_abs_diff(L, H) <= 1e-12 * L.max_abs());

        const auto constant = KernelSpec::holomorphic_det(b, 0.0);
        const auto k3 = KernelSpec::holomorphic_det(b, 2.5);
        CHECK(std::abs(schur_product_check(constant, k3, cfg).min_eigenvalue - psd_check(k3, cfg).min_eigenvalue) <=
              1e-10 * gram_matrix(k3, cfg).max_abs());

        // Schur product theorem on the same matrices.
        for (double s : {1.0, 2.0, 2.7}) {
            const auto k = KernelSpec::holomorphic_det(b, s);
            CHECK(psd_check(k, cfg).verdict == Verdict::PSD);
            CHECK(schur_product_check(k, k3, cfg).verdict == Verdict::PSD);
        }
    }

    TEST_CASE("matrix-valued kernels") {
        const Domain b = Domain::ball(2, 2);
        const PointConfig cfg = sample_config(b, 6, 15, SamplerKind::Generic);
        MatrixKernelSpec det{b, MatrixRho::DetPower, 2.0, 3};
        CHECK(det.value_dim() == 3);
        LiftedConfig same{cfg.points, std::vector<std::vector<cplx>>(6, {1.0, 0.0, 0.0})};
        CHECK(max_abs_diff(matrix_gram(det, same), gram_matrix(KernelSpec::holomorphic_det(b, 2.0), cfg)) <= 1e-12);

        MatrixKernelSpec def{b, MatrixRho::Defining, 0.0, 1};
        CHECK(def.value_dim() == 4);
        Rng rng(3);
        LiftedConfig lifted{cfg.points, {}};
        for (int i = 0; i < 6; ++i) {
            std::vector<cplx> xi(4);
            for (auto& x : xi) x = rng.complex_normal();
            lifted.vectors.push_back(xi);
        }
        const ComplexMatrix Gd = matrix_gram(def, lifted);
        CHECK(max_abs_diff(Gd, Gd.adjoint()) <= 1e-12 * Gd.max_abs());
        LiftedConfig single{{cfg.points[0]}, {lifted.vectors[0]}};
        CHECK(std::abs(matrix_gram(def, single)(0, 0).imag()) <= 1e-14);

        const ComplexMatrix z = cfg.points[0], u = cfg.points[1];
        const ComplexMatrix I2 = ComplexMatrix::identity(2);
        CHECK(max_abs_diff(matrix_kernel_value(def, z, u), kronecker(I2 - z * u.adjoint(), I2 - u.adjoint() * z)) <= 1e-15);
        LiftedConfig bad{cfg.points, std::vector<std::vector<cplx>>(6, {1.0})};
        CHECK_THROWS_AS(matrix_gram(def, bad), ContractError);
    }
}
