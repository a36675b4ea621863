#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cartanlab/core/error.hpp"
#include "cartanlab/numeric/eigen.hpp"
#include "cartanlab/numeric/linalg.hpp"
#include "cartanlab/numeric/quadrature.hpp"
#include "cartanlab/numeric/special.hpp"
#include "helpers.hpp"
#include "oracles/frozen_values.hpp"

using namespace cartan;
using namespace testing;

TEST_SUITE("numeric-core") {
    TEST_CASE("log_gamma trivial values and domain") {
        CHECK(std::abs(log_gamma(1.0)) < 1e-15);
        CHECK(std::abs(log_gamma(2.0)) < 1e-15);
        CHECK(std::abs(log_gamma(0.5) - std::log(std::sqrt(std::numbers::pi))) < 1e-15);
        CHECK_THROWS_AS(log_gamma(0.0), DomainError);
        CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
    }

    TEST_CASE("log_gamma against arbitrary-precision values") {
        for (const auto& p : oracle::kLogGamma) {
            INFO("x = " << p.x);
            CHECK(rel(log_gamma(p.x), p.value) <= 1e-12);
        }
    }

    TEST_CASE("log_gamma recurrence on [0.1, 100]") {
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const double x = 0.1 + i * (99.9 / 2000.0);
            worst = std::max(worst, std::abs(log_gamma(x + 1) - log_gamma(x) - std::log(x)));
        }
        CHECK(worst <= 1e-12);
    }

    TEST_CASE("hermitian_eigen small cases") {
        const auto e = hermitian_eigen(ComplexMatrix::identity(5));
        for (double v : e.eigenvalues) CHECK(std::abs(v - 1.0) < 1e-15);
        const auto d = hermitian_eigenvalues(ComplexMatrix::diagonal({3.0, 1.0}));
        REQUIRE(d.size() == 2);
        CHECK(d[0] == doctest::Approx(1.0));
        CHECK(d[1] == doctest::Approx(3.0));
        CHECK_THROWS_AS(hermitian_eigen(ComplexMatrix{{1.0, 2.0}, {0.0, 1.0}}), ContractError);
    }

    TEST_CASE("hermitian_eigen reconstruction, orthonormality and ordering at size 50") {
        const ComplexMatrix H = random_hermitian(50, 11);
        const EigenResult e = hermitian_eigen(H);
        std::vector<cplx> lam(e.eigenvalues.begin(), e.eigenvalues.end());
        const double scale = operator_norm(H);
        CHECK((e.vectors * ComplexMatrix::diagonal(lam) * e.vectors.adjoint() - H).frobenius_norm() / scale <= 1e-10);
        CHECK(max_abs_diff(e.vectors.adjoint() * e.vectors, ComplexMatrix::identity(50)) <= 1e-10);
        CHECK(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()));
        for (std::size_t i = 0; i < 50; ++i) {
            ComplexMatrix v = e.vectors.block(0, i, 50, 1);
            CHECK((H * v - e.eigenvalues[i] * v).frobenius_norm() <= 1e-10 * scale);
        }
    }

    TEST_CASE("eigenvalue sum is the trace and product is the determinant") {
        for (std::size_t n : {2u, 7u, 16u, 40u, 64u}) {
            const ComplexMatrix H = random_hermitian(n, 100 + n);
            const auto ev = hermitian_eigenvalues(H);
            double sum = 0.0, logprod = 0.0;
            int sign = 1;
            for (double v : ev) {
                sum += v;
                logprod += std::log(std::abs(v));
                if (v < 0) sign = -sign;
            }
            CHECK(rel(sum, H.trace().real()) <= 1e-10);
            const cplx det = naive_det(H);
            CHECK(std::abs(std::log(std::abs(det.real())) - logprod) <= 1e-8);
            CHECK((det.real() < 0 ? -1 : 1) == sign);
        }
    }

    TEST_CASE("principal_det_power trivial values") {
        CHECK(std::abs(principal_det_power(ComplexMatrix::zeros(3, 3), 1.7) - 1.0) < 1e-15);
        CHECK(std::abs(principal_det_power(ComplexMatrix::scalar(0.5), 2.0) - 4.0) < 1e-13);
        CHECK_THROWS_AS(principal_det_power(ComplexMatrix::scalar(1.0), 1.0), DivergenceError);
    }

    TEST_CASE("principal_det_power matches the elimination determinant for integer s") {
        for (int t = 0; t < 20; ++t) {
            ComplexMatrix A = random_matrix(3, 3, 200 + t);
            A = (0.5 / operator_norm(A)) * A;
            const cplx oracle = 1.0 / std::pow(naive_det(ComplexMatrix::identity(3) - A), 3);
            CHECK(std::abs(principal_det_power(A, 3.0) - oracle) / std::abs(oracle) <= 1e-12);
            CHECK(std::abs(determinant(A) - naive_det(A)) <= 1e-13 * std::max(1.0, std::abs(naive_det(A))));
        }
    }

    TEST_CASE("principal_det_power branch additivity") {
        Rng rng(5);
        for (int t = 0; t < 50; ++t) {
            ComplexMatrix A = random_matrix(4, 4, 300 + t);
            A = (rng.uniform(0.1, 0.9) / operator_norm(A)) * A;
            const double s1 = rng.uniform(-3, 3), s2 = rng.uniform(-3, 3);
            const cplx lhs = principal_det_power(A, s1 + s2);
            CHECK(std::abs(lhs - principal_det_power(A, s1) * principal_det_power(A, s2)) / std::abs(lhs) <= 1e-11);
        }
    }

    TEST_CASE("principal_det_power is continuous along a path") {
        // The principal branch must not jump as A moves inside the unit ball.
        const ComplexMatrix A = random_matrix(3, 3, 17);
        const ComplexMatrix B = (0.9 / operator_norm(A)) * A;
        cplx prev = principal_det_power(ComplexMatrix::zeros(3, 3), 0.37);
        for (int k = 1; k <= 200; ++k) {
            const cplx cur = principal_det_power((k / 200.0) * B, 0.37);
            CHECK(std::abs(cur - prev) < 0.05 * std::abs(prev));
            prev = cur;
        }
    }

    TEST_CASE("matrix_exp") {
        CHECK(max_abs_diff(matrix_exp(ComplexMatrix::zeros(4, 4)), ComplexMatrix::identity(4)) == 0.0);
        CHECK(std::abs(matrix_exp(ComplexMatrix::scalar(cplx(0, std::numbers::pi)))(0, 0) + 1.0) < 1e-14);
        for (int t = 0; t < 20; ++t) {
            ComplexMatrix X = random_matrix(5, 5, 400 + t);
            X = (2.0 / operator_norm(X)) * X;
            CHECK(max_abs_diff(matrix_exp(X) * matrix_exp(-X), ComplexMatrix::identity(5)) <= 1e-10);
            // exp(X + X^2/3) = exp(X) exp(X^2/3): the two commute.
            const ComplexMatrix Y = (1.0 / 3.0) * (X * X);
            CHECK(max_abs_diff(matrix_exp(X + Y), matrix_exp(X) * matrix_exp(Y)) <= 1e-10 * matrix_exp(X + Y).max_abs());
        }
        const cplx t = 0.8;
        const ComplexMatrix e = matrix_exp(ComplexMatrix{{0.0, t}, {t, 0.0}});
        CHECK(std::abs(e(0, 0) - std::cosh(0.8)) < 1e-14);
        CHECK(std::abs(e(0, 1) - std::sinh(0.8)) < 1e-14);
    }

    TEST_CASE("operator_norm") {
        CHECK(operator_norm(ComplexMatrix::zeros(3, 4)) == 0.0);
        Rng rng(3);
        // A unitary is the exponential of a skew-Hermitian matrix.
        const ComplexMatrix K = random_matrix(3, 3, 21);
        const ComplexMatrix U = matrix_exp(0.5 * (K - K.adjoint()));
        CHECK(std::abs(operator_norm(U) - 1.0) <= 1e-12);
        for (int t = 0; t < 10; ++t) {
            const ComplexMatrix M = random_matrix(4, 6, 500 + t);
            CHECK(rel(operator_norm(M), power_iteration_norm(M)) <= 1e-8);
        }
    }

    TEST_CASE("singular values of a known product") {
        const ComplexMatrix K1 = random_matrix(3, 3, 31), K2 = random_matrix(4, 4, 32);
        const ComplexMatrix U = matrix_exp(0.5 * (K1 - K1.adjoint()));
        const ComplexMatrix V = matrix_exp(0.5 * (K2 - K2.adjoint()));
        ComplexMatrix D(3, 4);
        D(0, 0) = 2.0;
        D(1, 1) = 0.5;
        D(2, 2) = 1e-9;
        const auto sv = singular_values(U * D * V);
        REQUIRE(sv.size() == 3);
        CHECK(std::abs(sv[0] - 2.0) < 1e-12);
        CHECK(std::abs(sv[1] - 0.5) < 1e-12);
        CHECK(std::abs(sv[2] - 1e-9) < 1e-13);
    }

    TEST_CASE("lu solve and inverse") {
        const ComplexMatrix A = random_matrix(6, 6, 41) + 3.0 * ComplexMatrix::identity(6);
        const ComplexMatrix B = random_matrix(6, 2, 42);
        CHECK(max_abs_diff(A * solve(A, B), B) <= 1e-12);
        CHECK(max_abs_diff(A * inverse(A), ComplexMatrix::identity(6)) <= 1e-12);
        CHECK_THROWS_AS(solve(ComplexMatrix::zeros(2, 2), ComplexMatrix::identity(2)), ConditioningError);
    }

    TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
        const auto r = gauss_legendre(10, 0.0, 2.0);
        double s = 0.0;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], 19);
        CHECK(rel(s, std::pow(2.0, 20) / 20.0) <= 1e-13);
    }

    TEST_CASE("bessel_i series") {
        // I_0(1) and I_1(1) to 15 digits.
        CHECK(rel(bessel_i(0, 1.0), 1.2660658777520082) <= 1e-14);
        CHECK(rel(bessel_i(1, 1.0), 0.5651591039924851) <= 1e-14);
    }
}
