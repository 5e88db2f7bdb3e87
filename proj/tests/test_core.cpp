#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qptheta/core.hpp"
#include "support.hpp"

#include <cmath>

using namespace qptheta;
using test_support::rel_err;

TEST_CASE("hermite polynomials")
{
    CHECK(hermite_poly(0, 3.7) == 1.0);
    CHECK(hermite_poly(1, 0.5) == doctest::Approx(1.0));
    CHECK(hermite_poly(3, 1.0) == doctest::Approx(-4.0));
    CHECK(hermite_poly(4, 0.3) == doctest::Approx(16 * std::pow(0.3, 4) - 48 * 0.09 + 12));
    CHECK_THROWS_AS(hermite_poly(-1, 0.0), DomainError);
    CHECK_THROWS_AS(hermite_poly(2, std::nan("")), DomainError);
}

TEST_CASE("hermite recurrence with H'_m = 2m H_{m-1}")
{
    for (int m = 1; m < 30; ++m) {
        for (double x = -5.0; x <= 5.0; x += 0.25) {
            const double next = hermite_poly(m + 1, x);
            const double rhs = 2 * x * hermite_poly(m, x) - 2 * m * hermite_poly(m - 1, x);
            CHECK(std::abs(next - rhs) <= 1e-9 * std::abs(next) + 1e-300);
        }
    }
}

TEST_CASE("gaussian integral closed form")
{
    CHECK(std::abs(gaussian_integral(1, 0) - std::sqrt(pi)) < 1e-14);
    CHECK(std::abs(gaussian_integral(2 * pi, 0) - std::sqrt(0.5)) < 1e-14);
    CHECK(std::abs(gaussian_integral(1, 2) - std::exp(1.0) * std::sqrt(pi)) < 1e-12);
    CHECK_THROWS_AS(gaussian_integral(0, 1), DomainError);
    CHECK_THROWS_AS(gaussian_integral(-1, 1), DomainError);
}

TEST_CASE("gaussian integral against dense quadrature")
{
    // Trapezoid on a wide interval is spectrally accurate for Gaussians.
    for (double a : {0.5, 1.0, 2 * pi}) {
        for (Complex b : {Complex(0), Complex(2), Complex(0, 3), Complex(1, 1)}) {
            const double Y = 10 / std::sqrt(a) + std::abs(b) / a;
            const int n = 20000;
            const double h = 2 * Y / n;
            Complex sum = 0;
            for (int k = 0; k <= n; ++k) {
                const double y = -Y + k * h;
                sum += (k == 0 || k == n ? 0.5 : 1.0) * std::exp(-a * y * y + b * y);
            }
            CHECK(rel_err(gaussian_integral(a, b), sum * h) < 1e-10);
        }
    }
}

TEST_CASE("character")
{
    CHECK(std::abs(character(0, 5) - 1.0) < 1e-15);
    CHECK(std::abs(character(0.25, 2) + 1.0) < 1e-15);
    const Complex c = character(0.3, 1);
    CHECK(c.real() == doctest::Approx(-0.309017).epsilon(1e-6));
    CHECK(c.imag() == doctest::Approx(0.951057).epsilon(1e-6));

    test_support::Draws draws(11);
    for (int k = 0; k < 50; ++k) {
        const double alpha = draws.uniform(-3, 3);
        const long long m1 = draws.integer(-100000, 100000);
        const long long m2 = draws.integer(-100000, 100000);
        CHECK(std::abs(std::abs(character(alpha, m1)) - 1.0) <= 1e-15);
        CHECK(std::abs(character(alpha, m1 + m2) - character(alpha, m1) * character(alpha, m2)) < 1e-14);
    }
}

TEST_CASE("hermitian pairing")
{
    const Complex i(0, 1);
    CHECK(hermitian_pairing(i, i) == Complex(1, 0));
    CHECK(hermitian_pairing(Complex(1, 1), 1.0) == Complex(1, 1));
    CHECK(hermitian_pairing(Complex(2, 3), Complex(1, -1)) == Complex(-1, 5));
    const Complex z(0.3, -1.7), w(-2.5, 0.4);
    CHECK(hermitian_pairing(z, w) == std::conj(hermitian_pairing(w, z)));
}

TEST_CASE("budget validation")
{
    CHECK_NOTHROW(TruncationBudget{}.validate());
    CHECK_THROWS_AS((TruncationBudget{0.0, 10}.validate()), DomainError);
    CHECK_THROWS_AS((TruncationBudget{1e-12, 0}.validate()), DomainError);
}
