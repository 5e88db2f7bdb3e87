#ifndef QPTHETA_THETA_HPP
#define QPTHETA_THETA_HPP

#include "qptheta/core.hpp"
#include "qptheta/series.hpp"

namespace qptheta
{

/// Characteristics (alpha, beta) and modulus tau in the upper half-plane.
class ThetaArgs
{
public:
    ThetaArgs(double alpha, double beta, Complex tau);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }
    Complex tau() const noexcept { return tau_; }

private:
    double alpha_;
    double beta_;
    Complex tau_;
};

/// theta_3(z | tau) = sum_n exp(i pi n^2 tau + 2 i pi n z).
Complex jacobi_theta3(Complex z, Complex tau, const TruncationBudget &budget = {});

/// theta_{alpha,beta}(z | tau) = sum_n exp(i pi (n+alpha)^2 tau + 2 i pi (n+alpha)(z+beta)).
Complex riemann_theta(const ThetaArgs &args, Complex z, const TruncationBudget &budget = {});

/// Same sum, also reporting the number of terms and the tail bound.
SeriesResult riemann_theta_detailed(const ThetaArgs &args, Complex z, const TruncationBudget &budget = {});

/// exp(-i pi l^2 tau - 2 i pi l z); theta_3(z + l tau + m) = factor * theta_3(z).
Complex theta3_periodicity_factor(Complex z, Complex tau, long long l, long long m);

/// (i/tau)^{1/2} exp(-i pi z^2 / tau) theta_3(z/tau | -1/tau), principal root.
Complex theta3_inversion_rhs(Complex z, Complex tau, const TruncationBudget &budget = {});

} // namespace qptheta

#endif
