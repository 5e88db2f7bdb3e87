#include "qptheta/theta.hpp"

#include <cmath>
#include <string>

namespace qptheta
{

namespace
{

void require_upper_half_plane(Complex tau, const char *what)
{
    if (!is_finite(tau) || !(tau.imag() > 0.0)) {
        throw DomainError(std::string(what) + ": Im(tau) must be positive, got " + std::to_string(tau.imag()));
    }
}

} // namespace

ThetaArgs::ThetaArgs(double alpha, double beta, Complex tau) : alpha_(alpha), beta_(beta), tau_(tau)
{
    if (!std::isfinite(alpha) || !std::isfinite(beta)) {
        throw DomainError("theta args: characteristics must be finite");
    }
    require_upper_half_plane(tau, "theta args");
}

SeriesResult riemann_theta_detailed(const ThetaArgs &args, Complex z, const TruncationBudget &budget)
{
    if (!is_finite(z)) {
        throw DomainError("riemann_theta: z must be finite");
    }
    const double alpha = args.alpha();
    const Complex tau = args.tau();
    const Complex shifted = z + args.beta();
    // Index of the largest term: the real part of the exponent is
    // -pi k^2 Im(tau) - 2 pi k Im(z), maximal at k = -Im(z)/Im(tau).
    const long long center = detail::center_index(-alpha - z.imag() / tau.imag());
    auto term = [&](long long n) {
        const double k = static_cast<double>(n) + alpha;
        return std::exp(I * pi * (k * k) * tau + 2.0 * I * pi * k * shifted);
    };
    return detail::sum_outward(center, term, budget, "riemann_theta");
}

Complex riemann_theta(const ThetaArgs &args, Complex z, const TruncationBudget &budget)
{
    return riemann_theta_detailed(args, z, budget).value;
}

Complex jacobi_theta3(Complex z, Complex tau, const TruncationBudget &budget)
{
    require_upper_half_plane(tau, "jacobi_theta3");
    return riemann_theta(ThetaArgs(0.0, 0.0, tau), z, budget);
}

Complex theta3_periodicity_factor(Complex z, Complex tau, long long l, long long /*m*/)
{
    require_upper_half_plane(tau, "theta3_periodicity_factor");
    const double ld = static_cast<double>(l);
    return require_finite(std::exp(-I * pi * (ld * ld) * tau - 2.0 * I * pi * ld * z), "theta3_periodicity_factor");
}

Complex theta3_inversion_rhs(Complex z, Complex tau, const TruncationBudget &budget)
{
    require_upper_half_plane(tau, "theta3_inversion_rhs");
    // std::sqrt takes the principal branch, argument in (-pi, pi].
    const Complex root = std::sqrt(I / tau);
    const Complex prefactor = root * std::exp(-I * pi * z * z / tau);
    return require_finite(prefactor * jacobi_theta3(z / tau, -1.0 / tau, budget), "theta3_inversion_rhs");
}

} // namespace qptheta
