#ifndef QPTHETA_FOCK_HPP
#define QPTHETA_FOCK_HPP

#include "qptheta/core.hpp"
#include "qptheta/quadrature.hpp"
#include "qptheta/theta.hpp"

#include <map>
#include <optional>
#include <vector>

namespace qptheta
{

/// The weight nu > 0 and the character parameter alpha of the functional
/// equation f(z+m) = exp(2 i pi alpha m) exp(nu (z + m/2) m) f(z).
class SpaceParams
{
public:
    SpaceParams(double nu, double alpha);

    double nu() const noexcept { return nu_; }
    double alpha() const noexcept { return alpha_; }

    friend bool operator==(const SpaceParams &, const SpaceParams &) = default;

private:
    double nu_;
    double alpha_;
};

/// Finite combination sum_n a_n e_n of the orthogonal basis e_n.
///
/// Coefficients are stored in the e_n convention; psi_coeffs() and
/// from_psi_coeffs() convert to and from the orthonormal psi_n convention.
class FockElement
{
public:
    using Coefficients = std::map<int, Complex>;

    explicit FockElement(SpaceParams params, Coefficients e_coeffs = {});

    static FockElement from_psi_coeffs(SpaceParams params, const Coefficients &psi_coeffs);

    const SpaceParams &params() const noexcept { return params_; }
    const Coefficients &coeffs() const noexcept { return coeffs_; }
    Coefficients psi_coeffs() const;
    bool empty() const noexcept { return coeffs_.empty(); }

    FockElement scaled(Complex factor) const;

private:
    SpaceParams params_;
    Coefficients coeffs_;
};

/// e_n(z) = exp(nu z^2 / 2 + 2 i pi (alpha + n) z).
Complex basis_e(int n, Complex z, const SpaceParams &params);

/// ||e_n|| = (pi / (2 nu))^{1/4} exp(pi^2 (n + alpha)^2 / nu).
double e_norm(int n, const SpaceParams &params);

/// psi_n = e_n / ||e_n||, evaluated in log space.
Complex basis_psi(int n, Complex z, const SpaceParams &params);

Complex evaluate(const FockElement &elem, Complex z);

/// Closed-form norm from the e_n coefficients.
double fock_norm(const FockElement &elem);

/// |f(z+m) - chi_alpha(m) exp(nu (z + m/2) m) f(z)| / max(1, |f(z)|).
double quasiperiod_residual(const PlaneFunction &f, Complex z, long long m, const SpaceParams &params);

/// g(z) = exp(-nu z^2 / 2 - 2 i pi alpha z) f(z); 1-periodic when f is quasi-periodic.
Complex periodic_part(const PlaneFunction &f, Complex z, const SpaceParams &params);

enum class KernelPath
{
    theta, ///< (2 nu / pi)^{1/2} exp(nu (z^2 + conj(w)^2) / 2) theta_{alpha,0}(z - conj(w) | 2 i pi / nu)
    sum,   ///< sum_n psi_n(z) conj(psi_n(w))
};

Complex reproducing_kernel(Complex z, Complex w, const SpaceParams &params, const TruncationBudget &budget = {},
                           KernelPath path = KernelPath::theta);

/// K(z, z)^{1/2}; |f(z)| <= ||f|| * pointwise_bound(z) for every f in the space.
double pointwise_bound(Complex z, const SpaceParams &params, const TruncationBudget &budget = {});

struct Membership
{
    bool in_space = false;
    std::optional<double> norm;
};

/// Whether exp(nu z^2 / 2) theta_{alpha,beta}(z | tau) has finite norm
/// (iff Im tau > pi / nu, strictly), and its closed-form norm when it does.
Membership theta_membership(const ThetaArgs &args, const SpaceParams &params, const TruncationBudget &budget = {});

/// The function exp(nu z^2 / 2) theta_{alpha,beta}(z | tau) itself.
Complex theta_element(const ThetaArgs &args, const SpaceParams &params, Complex z, const TruncationBudget &budget = {});

struct DivergenceCertificate
{
    std::vector<int> cutoffs;
    std::vector<double> log_partial_sums; ///< log sum_{|n| <= N} exp(-2 pi (n+alpha)^2 (Im tau - pi/nu))
    bool divergent = false;
};

/// Partial sums of the norm series at N = 10, 20, 40. Divergence is certified
/// when each doubling of N grows the partial sum by a factor of at least 1.5.
DivergenceCertificate certify_norm_divergence(const ThetaArgs &args, const SpaceParams &params);

/// Left side of the theta integral identity, by strip quadrature:
/// integral over S of theta_{alpha,0}(z - conj(w) | 2 i pi / nu) theta_{alpha,beta}(w | tau)
/// exp(nu (w^2 + conj(w)^2) / 2 - nu |w|^2) dm(w).
Complex theta_integral_lhs(Complex z, const ThetaArgs &args, const SpaceParams &params, const StripScheme &scheme,
                           const TruncationBudget &budget = {});

/// Right side: (pi / (2 nu))^{1/2} theta_{alpha,beta}(z | tau).
Complex theta_integral_rhs(Complex z, const ThetaArgs &args, const SpaceParams &params,
                           const TruncationBudget &budget = {});

} // namespace qptheta

#endif
