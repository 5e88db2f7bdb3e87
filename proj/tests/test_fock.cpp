#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qptheta/fock.hpp"
#include "qptheta/theta.hpp"
#include "support.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace qptheta;
using test_support::Draws;
using test_support::rel_err;

namespace
{
const SpaceParams p00(pi, 0.0);
const SpaceParams p03(pi, 0.3);

PlaneFunction psi(int n, const SpaceParams &p)
{
    return [n, p](Complex z) { return basis_psi(n, z, p); };
}

FockElement random_element(Draws &draws, const SpaceParams &p, int terms, int max_index)
{
    FockElement::Coefficients c;
    while (static_cast<int>(c.size()) < terms) {
        c[draws.integer(-max_index, max_index)] = Complex(draws.uniform(-1, 1), draws.uniform(-1, 1));
    }
    return FockElement::from_psi_coeffs(p, c);
}
} // namespace

TEST_CASE("space parameters")
{
    CHECK_THROWS_AS(SpaceParams(0.0, 0.1), DomainError);
    CHECK_THROWS_AS(SpaceParams(-1.0, 0.1), DomainError);
    CHECK_THROWS_AS(SpaceParams(std::nan(""), 0.1), DomainError);
    CHECK(SpaceParams(2, 0.1) == SpaceParams(2, 0.1));
}

TEST_CASE("basis functions")
{
    CHECK(std::abs(basis_e(0, 0, p00) - 1.0) < 1e-15);
    CHECK(rel_err(basis_e(1, I, p00), std::exp(-2.5 * pi)) < 1e-13);
    CHECK(quasiperiod_residual([](Complex z) { return basis_e(2, z, p03); }, Complex(0.3, 0.4), 1, p03) < 1e-12);

    CHECK(e_norm(0, p00) == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-15));
    CHECK(e_norm(3, SpaceParams(2.0, 0.3)) == e_norm(-3, SpaceParams(2.0, -0.3)));
    auto e2 = [](Complex z) { return basis_e(2, z, p03); };
    CHECK(rel_err(e_norm(2, p03), std::sqrt(strip_inner_product(e2, e2, pi, StripScheme::centered(pi, 0.3, 2)).real())) <
          1e-8);

    CHECK(basis_psi(0, 0, p00).real() == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-14));
    Draws draws(21);
    for (int k = 0; k < 10; ++k) {
        const int n = draws.integer(-5, 5);
        const Complex z = draws.point(1.5);
        CHECK(rel_err(basis_psi(n, z, p03), basis_e(n, z, p03) / e_norm(n, p03)) < 1e-13);
    }
}

TEST_CASE("psi_n are orthonormal for n in [-2, 2]")
{
    for (int n = -2; n <= 2; ++n) {
        for (int m = -2; m <= 2; ++m) {
            const Complex g = strip_inner_product(psi(n, p03), psi(m, p03), pi, StripScheme::centered(pi, 0.3, 0.5 * (n + m)));
            CHECK(std::abs(g - (n == m ? 1.0 : 0.0)) < 1e-8);
        }
    }
}

TEST_CASE("elements: evaluation, norm, conventions")
{
    const FockElement zero(p03);
    CHECK(zero.empty());
    CHECK(evaluate(zero, Complex(0.2, 0.1)) == Complex(0));
    CHECK(fock_norm(zero) == 0.0);

    const Complex z(0.1, 0.2);
    const FockElement two(p03, {{0, 1.0}, {1, Complex(0, 2)}});
    CHECK(std::abs(evaluate(two, z) - (basis_e(0, z, p03) + Complex(0, 2) * basis_e(1, z, p03))) < 1e-14);
    CHECK(fock_norm(FockElement(p00, {{0, 1.0}})) == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-15));

    Draws draws(4);
    const FockElement f = random_element(draws, p03, 5, 3);
    CHECK(std::abs(fock_norm(f.scaled(2.0)) - 2 * fock_norm(f)) <= 1e-15 * fock_norm(f) * 4);
    const auto back = FockElement::from_psi_coeffs(p03, f.psi_coeffs());
    for (const auto &[n, a] : f.coeffs()) {
        CHECK(rel_err(back.coeffs().at(n), a) < 1e-14);
    }

    const PlaneFunction fz = [&](Complex w) { return evaluate(f, w); };
    const double quad = std::sqrt(strip_inner_product(fz, fz, pi, StripScheme::centered(pi, 0.3, 0, 64, 128)).real());
    CHECK(rel_err(quad, fock_norm(f)) < 1e-7);
}

TEST_CASE("quasi-periodicity and periodic part")
{
    CHECK(quasiperiod_residual([](Complex) { return Complex(1); }, 0, 1, p00) ==
          doctest::Approx(std::exp(pi / 2) - 1).epsilon(1e-12));
    CHECK(quasiperiod_residual([](Complex) { return Complex(1); }, Complex(0.4, 0.2), 0, p00) == 0.0);

    Draws draws(12);
    const FockElement f = random_element(draws, p03, 4, 3);
    const PlaneFunction fz = [&](Complex w) { return evaluate(f, w); };
    // Re z stays in the centred fundamental domain: the factor exp(nu (z + m/2) m) reaches e^{4 pi}
    // near |Re z| = 1, and the residual then only measures double-precision rounding of f(z + m).
    for (int k = 0; k < 10; ++k) {
        const Complex z(draws.uniform(-0.5, 0.5), draws.uniform(-1, 1));
        for (int m = -2; m <= 2; ++m) {
            CHECK(quasiperiod_residual(fz, z, m, p03) < 1e-10);
        }
    }

    const Complex z(0.3, 0.5);
    const PlaneFunction e3 = [](Complex w) { return basis_e(3, w, p03); };
    CHECK(std::abs(periodic_part(e3, z, p03) - std::exp(2.0 * I * pi * 3.0 * z)) < 1e-12);
    CHECK(std::abs(periodic_part(psi(2, p03), z + 1.0, p03) - periodic_part(psi(2, p03), z, p03)) < 1e-11);
    const Complex restored = std::exp(0.5 * pi * z * z + 2.0 * I * pi * 0.3 * z) * periodic_part(psi(2, p03), z, p03);
    CHECK(rel_err(restored, basis_psi(2, z, p03)) < 1e-14);
}

TEST_CASE("reproducing kernel")
{
    const Complex z(0.1, 0.2), w(0.3, -0.1);
    CHECK(rel_err(reproducing_kernel(z, w, p03, {}, KernelPath::theta), reproducing_kernel(z, w, p03, {}, KernelPath::sum)) <
          1e-10);

    Draws draws(17);
    for (int k = 0; k < 10; ++k) {
        const Complex a = draws.point(1.2), b = draws.point(1.2);
        CHECK(std::abs(reproducing_kernel(a, b, p03) - std::conj(reproducing_kernel(b, a, p03))) < 1e-12);
    }

    const Complex wr(0.2, 0.3);
    const PlaneFunction kw = [&](Complex u) { return reproducing_kernel(u, wr, p03); };
    CHECK(rel_err(strip_inner_product(psi(2, p03), kw, pi, StripScheme::centered(pi, 0.3, 1)), basis_psi(2, wr, p03)) < 1e-6);
}

TEST_CASE("kernel Gram matrices are positive semidefinite")
{
    Draws draws(23);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Complex> pts;
        for (int k = 0; k < 4; ++k) {
            pts.push_back(draws.point(1.0));
        }
        Eigen::Matrix4cd gram;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                gram(i, j) = reproducing_kernel(pts[i], pts[j], p03);
            }
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(gram, Eigen::EigenvaluesOnly);
        CHECK(solver.eigenvalues().minCoeff() >= -1e-9);
    }
}

TEST_CASE("pointwise bound")
{
    CHECK(std::abs(pointwise_bound(0, p00) - std::sqrt(std::sqrt(2.0) * 1.0037348854877390)) < 1e-12);
    Draws draws(31);
    for (int k = 0; k < 20; ++k) {
        const Complex z = draws.point(1.5);
        CHECK(std::abs(pointwise_bound(z, p03) - std::sqrt(reproducing_kernel(z, z, p03).real())) < 1e-12);
        const FockElement f = random_element(draws, p03, 3, 3);
        CHECK(std::abs(evaluate(f, z)) <= fock_norm(f) * pointwise_bound(z, p03) * (1 + 1e-9));
    }
}

TEST_CASE("theta membership")
{
    CHECK(theta_membership(ThetaArgs(0.3, 0.2, Complex(0, 2)), p03).in_space);
    CHECK_FALSE(theta_membership(ThetaArgs(0.3, 0.2, Complex(0, 0.5)), p03).in_space);
    // The condition is strict: the boundary is excluded.
    const Membership edge = theta_membership(ThetaArgs(0.3, 0.2, Complex(0, 1)), p03);
    CHECK_FALSE(edge.in_space);
    CHECK_FALSE(edge.norm.has_value());

    const ThetaArgs args(0.3, 0.2, Complex(0, 2));
    const Membership in = theta_membership(args, p03);
    REQUIRE(in.norm.has_value());
    const PlaneFunction f = [&](Complex z) { return theta_element(args, p03, z); };
    const double quad = std::sqrt(strip_inner_product(f, f, pi, StripScheme{}).real());
    CHECK(rel_err(*in.norm, quad) < 1e-6);

    const DivergenceCertificate cert = certify_norm_divergence(ThetaArgs(0.3, 0.2, Complex(0, 0.5)), p03);
    CHECK(cert.divergent);
    CHECK(cert.log_partial_sums.size() == 3);
    CHECK_FALSE(certify_norm_divergence(args, p03).divergent);
}

TEST_CASE("theta integral identity")
{
    const ThetaArgs args(0.3, 0.1, Complex(0, 2));
    const Complex z(0.1, 0.1);
    const Complex lhs = theta_integral_lhs(z, args, p03, StripScheme{});
    CHECK(rel_err(lhs, theta_integral_rhs(z, args, p03)) < 1e-6);
}

TEST_CASE("the identity with weight exp(nu conj(w)^2 / 2) and factor exp(-nu z^2) does not hold")
{
    // Same integral with the holomorphic half of the Gaussian factor dropped, compared with a
    // right-hand side carrying exp(-nu z^2). Off by tens of percent, so it is not a rounding issue.
    const ThetaArgs args(0.3, 0.1, Complex(0, 2));
    const Complex z(0.1, 0.1);
    const double nu = p03.nu();
    const ThetaArgs kernel_args(0.3, 0.0, Complex(0, 2 * pi / nu));
    const PlaneFunction integrand = [&](Complex w) {
        const Complex wb = std::conj(w);
        return riemann_theta(kernel_args, z - wb) * riemann_theta(args, w) * std::exp(0.5 * nu * wb * wb);
    };
    const Complex lhs = strip_integral(integrand, nu, StripScheme{});
    const Complex rhs = std::sqrt(pi / (2 * nu)) * std::exp(-nu * z * z) * riemann_theta(args, z);
    CHECK(rel_err(lhs, rhs) > 0.1);
}
