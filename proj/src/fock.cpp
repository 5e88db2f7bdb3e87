#include "qptheta/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace qptheta
{

SpaceParams::SpaceParams(double nu, double alpha) : nu_(nu), alpha_(alpha)
{
    if (!std::isfinite(nu) || !(nu > 0.0)) {
        throw DomainError("space params: nu must be positive and finite, got " + std::to_string(nu));
    }
    if (!std::isfinite(alpha)) {
        throw DomainError("space params: alpha must be finite");
    }
}

FockElement::FockElement(SpaceParams params, Coefficients e_coeffs) : params_(params), coeffs_(std::move(e_coeffs))
{
}

FockElement FockElement::from_psi_coeffs(SpaceParams params, const Coefficients &psi_coeffs)
{
    Coefficients e_coeffs;
    for (const auto &[n, b] : psi_coeffs) {
        e_coeffs[n] = b / e_norm(n, params);
    }
    return FockElement(params, std::move(e_coeffs));
}

FockElement::Coefficients FockElement::psi_coeffs() const
{
    Coefficients out;
    for (const auto &[n, a] : coeffs_) {
        out[n] = a * e_norm(n, params_);
    }
    return out;
}

FockElement FockElement::scaled(Complex factor) const
{
    Coefficients out = coeffs_;
    for (auto &entry : out) {
        entry.second *= factor;
    }
    return FockElement(params_, std::move(out));
}

Complex basis_e(int n, Complex z, const SpaceParams &params)
{
    const double k = n + params.alpha();
    return require_finite(std::exp(0.5 * params.nu() * z * z + 2.0 * I * pi * k * z), "basis_e");
}

double e_norm(int n, const SpaceParams &params)
{
    const double k = n + params.alpha();
    const double nu = params.nu();
    return require_finite(std::pow(pi / (2.0 * nu), 0.25) * std::exp(pi * pi * k * k / nu), "e_norm");
}

Complex basis_psi(int n, Complex z, const SpaceParams &params)
{
    const double k = n + params.alpha();
    const double nu = params.nu();
    const Complex exponent = 0.25 * std::log(2.0 * nu / pi) - pi * pi * k * k / nu + 0.5 * nu * z * z + 2.0 * I * pi * k * z;
    return require_finite(std::exp(exponent), "basis_psi");
}

Complex evaluate(const FockElement &elem, Complex z)
{
    Complex total = 0.0;
    for (const auto &[n, a] : elem.coeffs()) {
        total += a * basis_e(n, z, elem.params());
    }
    return total;
}

double fock_norm(const FockElement &elem)
{
    const double nu = elem.params().nu();
    double weighted = 0.0;
    for (const auto &[n, a] : elem.coeffs()) {
        const double k = n + elem.params().alpha();
        weighted += std::exp(2.0 * pi * pi * k * k / nu) * std::norm(a);
    }
    return require_finite(std::sqrt(std::sqrt(pi / (2.0 * nu)) * weighted), "fock_norm");
}

double quasiperiod_residual(const PlaneFunction &f, Complex z, long long m, const SpaceParams &params)
{
    if (m == 0) {
        return 0.0;
    }
    const double md = static_cast<double>(m);
    const Complex fz = f(z);
    const Complex factor = character(params.alpha(), m) * std::exp(params.nu() * (z + 0.5 * md) * md);
    return std::abs(f(z + md) - factor * fz) / std::max(1.0, std::abs(fz));
}

Complex periodic_part(const PlaneFunction &f, Complex z, const SpaceParams &params)
{
    return std::exp(-0.5 * params.nu() * z * z - 2.0 * I * pi * params.alpha() * z) * f(z);
}

Complex reproducing_kernel(Complex z, Complex w, const SpaceParams &params, const TruncationBudget &budget,
                           KernelPath path)
{
    const double nu = params.nu();
    const double alpha = params.alpha();
    const Complex wbar = std::conj(w);
    if (path == KernelPath::theta) {
        const ThetaArgs args(alpha, 0.0, Complex(0.0, 2.0 * pi / nu));
        const Complex prefactor = std::sqrt(2.0 * nu / pi) * std::exp(0.5 * nu * (z * z + wbar * wbar));
        return require_finite(prefactor * riemann_theta(args, z - wbar, budget), "reproducing_kernel");
    }
    // Peak of |psi_n(z) psi_n(w)| sits at n + alpha = -nu (Im z + Im w) / (2 pi).
    const long long center = detail::center_index(-alpha - nu * (z.imag() + w.imag()) / (2.0 * pi));
    auto term = [&](long long n) {
        const int idx = static_cast<int>(n);
        return basis_psi(idx, z, params) * std::conj(basis_psi(idx, w, params));
    };
    return detail::sum_outward(center, term, budget, "reproducing_kernel").value;
}

double pointwise_bound(Complex z, const SpaceParams &params, const TruncationBudget &budget)
{
    // K(z, z) is real and positive; drop the rounding-level imaginary part.
    const double diag = reproducing_kernel(z, z, params, budget, KernelPath::theta).real();
    return std::sqrt(std::max(0.0, diag));
}

Membership theta_membership(const ThetaArgs &args, const SpaceParams &params, const TruncationBudget &budget)
{
    const double gap = args.tau().imag() - pi / params.nu();
    Membership out;
    out.in_space = gap > 0.0;
    if (out.in_space) {
        // sum_n exp(-2 pi (n+alpha)^2 gap) is theta_{alpha,0}(0 | 2 i gap).
        const ThetaArgs norm_args(args.alpha(), 0.0, Complex(0.0, 2.0 * gap));
        const double series = riemann_theta(norm_args, 0.0, budget).real();
        out.norm = std::sqrt(std::sqrt(pi / (2.0 * params.nu())) * series);
    }
    return out;
}

Complex theta_element(const ThetaArgs &args, const SpaceParams &params, Complex z, const TruncationBudget &budget)
{
    return require_finite(std::exp(0.5 * params.nu() * z * z) * riemann_theta(args, z, budget), "theta_element");
}

DivergenceCertificate certify_norm_divergence(const ThetaArgs &args, const SpaceParams &params)
{
    const double gap = args.tau().imag() - pi / params.nu();
    DivergenceCertificate cert;
    cert.cutoffs = {10, 20, 40};
    for (int cutoff : cert.cutoffs) {
        // log-sum-exp; the exponents reach thousands when gap < 0.
        std::vector<double> exponents;
        for (int n = -cutoff; n <= cutoff; ++n) {
            const double k = n + args.alpha();
            exponents.push_back(-2.0 * pi * k * k * gap);
        }
        const double top = *std::max_element(exponents.begin(), exponents.end());
        double acc = 0.0;
        for (double e : exponents) {
            acc += std::exp(e - top);
        }
        cert.log_partial_sums.push_back(top + std::log(acc));
    }
    const double growth = std::log(1.5);
    cert.divergent = cert.log_partial_sums[1] - cert.log_partial_sums[0] >= growth &&
                     cert.log_partial_sums[2] - cert.log_partial_sums[1] >= growth;
    return cert;
}

Complex theta_integral_lhs(Complex z, const ThetaArgs &args, const SpaceParams &params, const StripScheme &scheme,
                           const TruncationBudget &budget)
{
    const double nu = params.nu();
    const ThetaArgs kernel_args(params.alpha(), 0.0, Complex(0.0, 2.0 * pi / nu));
    auto integrand = [&](Complex w) {
        const Complex wbar = std::conj(w);
        return riemann_theta(kernel_args, z - wbar, budget) * riemann_theta(args, w, budget) *
               std::exp(0.5 * nu * (w * w + wbar * wbar));
    };
    return strip_integral(integrand, nu, scheme);
}

Complex theta_integral_rhs(Complex z, const ThetaArgs &args, const SpaceParams &params, const TruncationBudget &budget)
{
    return std::sqrt(pi / (2.0 * params.nu())) * riemann_theta(args, z, budget);
}

} // namespace qptheta
