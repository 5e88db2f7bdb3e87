#ifndef QPTHETA_CORE_HPP
#define QPTHETA_CORE_HPP

#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qptheta
{

using Complex = std::complex<double>;

/// Pointwise-evaluable functions on the plane and on the real line.
using PlaneFunction = std::function<Complex(Complex)>;
using LineFunction = std::function<Complex(double)>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

// Error taxonomy. Every failure raised by the library derives from Error so the
// command-line front end can map categories to exit codes.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error
{
public:
    using Error::Error;
};

/// Result not representable in double precision.
class RangeError : public Error
{
public:
    using Error::Error;
};

/// A truncated series or refinement loop exhausted its budget.
class TruncationError : public Error
{
public:
    TruncationError(const std::string &what, double achieved_bound)
        : Error(what), achieved_bound_(achieved_bound)
    {
    }
    double achieved_bound() const noexcept { return achieved_bound_; }

private:
    double achieved_bound_;
};

/// A user-supplied function returned a non-finite value at a quadrature node.
class EvaluationError : public Error
{
public:
    using Error::Error;
};

/// Controls every infinite series and refinement loop: an absolute error
/// target and a hard cap on the number of terms per one-sided tail.
struct TruncationBudget
{
    double tol = 1e-12;
    int max_terms = 10000;

    void validate() const;
};

bool is_finite(Complex z) noexcept;

/// Throws RangeError naming `what` if `z` has a non-finite component.
Complex require_finite(Complex z, const char *what);
double require_finite(double x, const char *what);

/// Physicists' Hermite polynomial by upward three-term recurrence.
double hermite_poly(int m, double x);

/// Closed form of the integral of exp(-a y^2 + b y) over the real line.
Complex gaussian_integral(double a, Complex b);

/// The character m -> exp(2 i pi alpha m) of the integers.
Complex character(double alpha, long long m);

/// H(z, w) = z * conj(w).
inline Complex hermitian_pairing(Complex z, Complex w) noexcept { return z * std::conj(w); }

} // namespace qptheta

#endif
