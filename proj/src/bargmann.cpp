#include "qptheta/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qptheta
{

LineElement::LineElement(double alpha, Coefficients coeffs) : alpha_(alpha), coeffs_(std::move(coeffs))
{
    if (!std::isfinite(alpha)) {
        throw DomainError("line element: alpha must be finite");
    }
}

Complex phi_basis(int n, double q, double alpha)
{
    return std::pow(2.0, -0.25) * std::exp(sqrt2 * I * pi * (n + alpha) * q);
}

Complex evaluate_line(const LineElement &elem, double q)
{
    Complex total = 0.0;
    for (const auto &[n, b] : elem.coeffs()) {
        total += b * phi_basis(n, q, elem.alpha());
    }
    return total;
}

double line_norm(const LineElement &elem)
{
    double sum = 0.0;
    for (const auto &entry : elem.coeffs()) {
        sum += std::norm(entry.second);
    }
    return std::sqrt(sum);
}

Complex bargmann_kernel_A(Complex z, double q, const SpaceParams &params, const TruncationBudget &budget)
{
    const double nu = params.nu();
    const Complex tau(0.0, nu / pi);
    const Complex offset = q / sqrt2 - z;
    const Complex prefactor = std::pow(nu / pi, 0.75) * std::exp(0.5 * nu * z * z - nu * offset * offset);
    return require_finite(prefactor * jacobi_theta3(tau * offset + params.alpha(), tau, budget), "bargmann_kernel_A");
}

Complex generating_kernel_G(Complex z, double q, const SpaceParams &params, const TruncationBudget &budget,
                            KernelPath path)
{
    const double nu = params.nu();
    const double alpha = params.alpha();
    if (path == KernelPath::theta) {
        const ThetaArgs args(alpha, 0.0, Complex(0.0, pi / nu));
        const Complex prefactor = std::pow(nu / pi, 0.25) * std::exp(0.5 * nu * z * z);
        return require_finite(prefactor * riemann_theta(args, z - q / sqrt2, budget), "generating_kernel_G");
    }
    const long long center = detail::center_index(-alpha - nu * z.imag() / pi);
    auto term = [&](long long n) {
        const int idx = static_cast<int>(n);
        return basis_psi(idx, z, params) * std::conj(phi_basis(idx, q, alpha));
    };
    return detail::sum_outward(center, term, budget, "generating_kernel_G").value;
}

FockElement bargmann_transform_coeffs(const LineElement &elem, double nu)
{
    return FockElement::from_psi_coeffs(SpaceParams(nu, elem.alpha()), elem.coeffs());
}

Complex bargmann_pointwise(const LineFunction &phi, Complex z, const SpaceParams &params,
                           const TruncationBudget &budget, const LineRefinement &refinement)
{
    budget.validate();
    if (refinement.initial_points < 4 || refinement.max_points < refinement.initial_points) {
        throw DomainError("bargmann_pointwise: invalid refinement schedule");
    }
    auto integrand = [&](double q) {
        const Complex value = bargmann_kernel_A(z, q, params, budget) * phi(q);
        if (!is_finite(value)) {
            throw EvaluationError("bargmann_pointwise: integrand not finite at q = " + std::to_string(q));
        }
        return value;
    };

    // Periodic trapezoid; each doubling adds only the midpoints.
    int points = refinement.initial_points;
    double step = sqrt2 / points;
    Complex sum = 0.0;
    for (int j = 0; j < points; ++j) {
        sum += integrand(j * step);
    }
    Complex estimate = sum * step;
    double change = 0.0;
    while (2 * points <= refinement.max_points) {
        for (int j = 0; j < points; ++j) {
            sum += integrand((j + 0.5) * step);
        }
        points *= 2;
        step *= 0.5;
        const Complex refined = sum * step;
        change = std::abs(refined - estimate);
        estimate = refined;
        if (change <= budget.tol * std::max(1.0, std::abs(refined))) {
            return refined;
        }
    }
    throw TruncationError("bargmann_pointwise: no convergence at " + std::to_string(points) + " nodes", change);
}

Complex bargmann_whole_line(const LineFunction &phi, Complex z, const SpaceParams &params, int points)
{
    if (points < 3) {
        throw DomainError("bargmann_whole_line: need at least 3 nodes");
    }
    const double nu = params.nu();
    const double center = sqrt2 * z.real();
    const double half_width = 10.0 / std::sqrt(nu);
    const double step = 2.0 * half_width / (points - 1);
    Complex total = 0.0;
    for (int j = 0; j < points; ++j) {
        const double q = center - half_width + j * step;
        const double weight = (j == 0 || j == points - 1) ? 0.5 : 1.0;
        const Complex d = q - sqrt2 * z;
        total += weight * phi(q) * std::exp(-0.5 * nu * d * d);
    }
    return require_finite(std::pow(nu / pi, 0.75) * std::exp(0.5 * nu * z * z) * total * step, "bargmann_whole_line");
}

Complex bargmann_inverse(const FockElement &elem, double q, const TruncationBudget &budget, const StripScheme &scheme)
{
    if (elem.empty()) {
        return 0.0;
    }
    const SpaceParams &params = elem.params();
    return strip_inner_product([&](Complex z) { return evaluate(elem, z); },
                               [&](Complex z) { return generating_kernel_G(z, q, params, budget); }, params.nu(),
                               scheme);
}

} // namespace qptheta
