#include "qptheta/core.hpp"

#include <cmath>
#include <string>

namespace qptheta
{

void TruncationBudget::validate() const
{
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw DomainError("truncation budget: tol must be positive and finite, got " + std::to_string(tol));
    }
    if (max_terms < 1) {
        throw DomainError("truncation budget: max_terms must be >= 1, got " + std::to_string(max_terms));
    }
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex require_finite(Complex z, const char *what)
{
    if (!is_finite(z)) {
        throw RangeError(std::string(what) + ": result is not finite");
    }
    return z;
}

double require_finite(double x, const char *what)
{
    if (!std::isfinite(x)) {
        throw RangeError(std::string(what) + ": result is not finite");
    }
    return x;
}

double hermite_poly(int m, double x)
{
    if (m < 0) {
        throw DomainError("hermite_poly: degree must be nonnegative, got " + std::to_string(m));
    }
    if (!std::isfinite(x)) {
        throw DomainError("hermite_poly: argument must be finite");
    }
    double prev = 1.0;
    if (m == 0) {
        return prev;
    }
    double cur = 2.0 * x;
    for (int k = 1; k < m; ++k) {
        const double next = 2.0 * x * cur - 2.0 * k * prev;
        prev = cur;
        cur = next;
    }
    return require_finite(cur, "hermite_poly");
}

Complex gaussian_integral(double a, Complex b)
{
    if (!(a > 0.0)) {
        throw DomainError("gaussian_integral: a must be positive, got " + std::to_string(a));
    }
    return require_finite(std::sqrt(pi / a) * std::exp(b * b / (4.0 * a)), "gaussian_integral");
}

Complex character(double alpha, long long m)
{
    if (!std::isfinite(alpha)) {
        throw DomainError("character: alpha must be finite");
    }
    // Reduce alpha*m mod 1 before exponentiating; the fma residual keeps the
    // low-order bits of the product that the reduction would otherwise drop.
    const double a = alpha - std::round(alpha);
    const double mm = static_cast<double>(m);
    const double p = a * mm;
    const double err = std::fma(a, mm, -p);
    const double frac = (p - std::round(p)) + err;
    return std::polar(1.0, 2.0 * pi * frac);
}

} // namespace qptheta
