#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qptheta/theta.hpp"
#include "support.hpp"

#include <cmath>

using namespace qptheta;
using test_support::rel_err;

namespace
{
Complex brute_theta3(Complex z, Complex tau, int N)
{
    Complex s = 0;
    for (int n = -N; n <= N; ++n) {
        s += std::exp(I * pi * double(n * n) * tau + 2.0 * I * pi * double(n) * z);
    }
    return s;
}
} // namespace

TEST_CASE("jacobi theta3 examples")
{
    CHECK(std::abs(jacobi_theta3(0, I) - 1.086434811213308) < 1e-12);
    const Complex z(0.2, 0.1), tau(0, 2);
    CHECK(std::abs(jacobi_theta3(z + 1.0, tau) - jacobi_theta3(z, tau)) < 1e-12);
    CHECK(rel_err(jacobi_theta3(Complex(0.3, 0.2), tau), brute_theta3(Complex(0.3, 0.2), tau, 50)) < 1e-12);
    // sum exp(-2 pi n^2)
    CHECK(std::abs(jacobi_theta3(0, 2.0 * I) - 1.0037348854877390) < 1e-12);
}

TEST_CASE("domain and truncation errors")
{
    CHECK_THROWS_AS(ThetaArgs(0, 0, Complex(1, 0)), DomainError);
    CHECK_THROWS_AS(ThetaArgs(0, 0, Complex(0, -1)), DomainError);
    CHECK_THROWS_AS(jacobi_theta3(0, Complex(0.5, 0)), DomainError);
    // A tiny Im tau needs far more than 5 terms.
    try {
        jacobi_theta3(0, Complex(0, 1e-3), {1e-12, 5});
        FAIL("expected a truncation error");
    } catch (const TruncationError &e) {
        CHECK(e.achieved_bound() > 1e-12);
    }
}

TEST_CASE("riemann theta examples")
{
    CHECK(std::abs(riemann_theta(ThetaArgs(0, 0, I), 0.1) - jacobi_theta3(0.1, I)) < 1e-13);
    const Complex tau(0, 2);
    CHECK(std::abs(riemann_theta(ThetaArgs(1, 0, tau), 0.2) - riemann_theta(ThetaArgs(0, 0, tau), 0.2)) < 1e-12);

    const double a = 0.3, b = 0.7;
    const Complex z(0.1, 0.05), t(0, 1.5);
    const Complex rhs = std::exp(I * pi * a * a * t + 2.0 * I * pi * a * (z + b)) * jacobi_theta3(z + a * t + b, t);
    CHECK(rel_err(riemann_theta(ThetaArgs(a, b, t), z), rhs) < 1e-11);
}

TEST_CASE("series centring handles large imaginary parts")
{
    const Complex tau(0, 1.2), z(0.3, 7.5);
    CHECK(rel_err(jacobi_theta3(z, tau), brute_theta3(z, tau, 80)) < 1e-12);
    const auto detailed = riemann_theta_detailed(ThetaArgs(0.4, 0.1, tau), z);
    CHECK(detailed.tail_bound < 1e-12);
    CHECK(detailed.terms > 1);
}

TEST_CASE("periodicity factor")
{
    CHECK(std::abs(theta3_periodicity_factor(Complex(0.4, -0.3), Complex(0.2, 1.1), 0, 3) - 1.0) < 1e-15);
    CHECK(std::abs(theta3_periodicity_factor(0, I, 1, 0) - std::exp(pi)) < 1e-12);
    const Complex z(0.1), tau(0, 2);
    const Complex ratio = jacobi_theta3(z + tau + 1.0, tau) / jacobi_theta3(z, tau);
    CHECK(rel_err(ratio, theta3_periodicity_factor(z, tau, 1, 1)) < 1e-10);
}

TEST_CASE("inversion formula")
{
    CHECK(std::abs(theta3_inversion_rhs(0, I) - jacobi_theta3(0, I)) < 1e-13);
    CHECK(rel_err(theta3_inversion_rhs(0.2, Complex(0, 0.8)), jacobi_theta3(0.2, Complex(0, 0.8))) < 1e-11);
    CHECK(rel_err(theta3_inversion_rhs(Complex(0.1, 0.1), Complex(1, 2)), jacobi_theta3(Complex(0.1, 0.1), Complex(1, 2))) <
          1e-10);

    test_support::Draws draws(5);
    for (int k = 0; k < 20; ++k) {
        const Complex tau(draws.uniform(-1, 1), draws.uniform(0.5, 3));
        const Complex z = draws.point(0.5);
        CHECK(rel_err(theta3_inversion_rhs(z, tau), jacobi_theta3(z, tau)) < 1e-9);
    }
}

TEST_CASE("quasi-periodicity and translation identities on random draws")
{
    test_support::Draws draws(8);
    for (int k = 0; k < 20; ++k) {
        const double a = draws.uniform(-1, 1), b = draws.uniform(-1, 1);
        const Complex tau(draws.uniform(-0.5, 0.5), draws.uniform(0.5, 3));
        const Complex z = draws.point(0.8);
        const ThetaArgs args(a, b, tau);
        const Complex base = riemann_theta(args, z);
        for (int m = -2; m <= 2; ++m) {
            CHECK(rel_err(riemann_theta(args, z + double(m)), character(a, m) * base) < 1e-11);
        }
        const Complex rhs = std::exp(I * pi * a * a * tau + 2.0 * I * pi * a * (z + b)) * jacobi_theta3(z + a * tau + b, tau);
        CHECK(rel_err(base, rhs) < 1e-10);
    }
}

TEST_CASE("tolerance refinement changes results by less than the tolerance")
{
    test_support::Draws draws(9);
    for (int k = 0; k < 20; ++k) {
        const ThetaArgs args(draws.uniform(-1, 1), draws.uniform(-1, 1), Complex(0, draws.uniform(0.3, 3)));
        const Complex z = draws.point(2.0);
        for (double tol : {1e-6, 1e-9, 1e-12}) {
            const Complex coarse = riemann_theta(args, z, {tol, 10000});
            const Complex fine = riemann_theta(args, z, {tol / 10, 10000});
            CHECK(std::abs(coarse - fine) < tol);
        }
    }
}
