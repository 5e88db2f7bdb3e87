#include "qptheta/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>

namespace qptheta
{

void StripScheme::validate() const
{
    if (x_points < 4) {
        throw DomainError("strip scheme: x_points must be >= 4, got " + std::to_string(x_points));
    }
    if (y_order < 8) {
        throw DomainError("strip scheme: y_order must be >= 8, got " + std::to_string(y_order));
    }
    if (!std::isfinite(y_shift)) {
        throw DomainError("strip scheme: y_shift must be finite");
    }
}

StripScheme StripScheme::centered(double nu, double alpha, double n_bar, int x_points, int y_order)
{
    if (!(nu > 0.0)) {
        throw DomainError("strip scheme: nu must be positive");
    }
    return {x_points, y_order, -pi * (alpha + n_bar) / nu};
}

void LineScheme::validate() const
{
    if (q_points < 4) {
        throw DomainError("line scheme: q_points must be >= 4, got " + std::to_string(q_points));
    }
}

namespace
{

GaussHermiteRule build_gauss_hermite(int order)
{
    // Symmetric Jacobi matrix of the orthonormal Hermite recurrence.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(order, order);
    for (int k = 1; k < order; ++k) {
        const double b = std::sqrt(0.5 * k);
        jacobi(k, k - 1) = b;
        jacobi(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
    GaussHermiteRule rule;
    rule.nodes.resize(order);
    for (int k = 0; k < order; ++k) {
        rule.nodes[k] = solver.eigenvalues()(k);
    }
    // Symmetrize; the eigen solver leaves rounding-level asymmetry.
    for (int k = 0; k < order / 2; ++k) {
        const int j = order - 1 - k;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[k]);
        rule.nodes[k] = -x;
        rule.nodes[j] = x;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0.0;
    }
    // Christoffel numbers from the normalized Hermite functions h_j(u), which
    // stay O(1) at the outer nodes: w exp(u^2) = 1 / sum_j h_j(u)^2.
    rule.weights.resize(order);
    rule.scaled_weights.resize(order);
    for (int k = 0; k < order; ++k) {
        const double u = rule.nodes[k];
        double prev = 0.0;
        double cur = std::pow(pi, -0.25) * std::exp(-0.5 * u * u);
        double sum = cur * cur;
        for (int j = 0; j + 1 < order; ++j) {
            const double next = std::sqrt(2.0 / (j + 1)) * u * cur - std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
            prev = cur;
            cur = next;
            sum += cur * cur;
        }
        rule.scaled_weights[k] = 1.0 / sum;
        rule.weights[k] = std::exp(-u * u) / sum;
    }
    return rule;
}

std::string node_name(double x, double y)
{
    std::ostringstream os;
    os.precision(17);
    os << "(" << x << ", " << y << ")";
    return os.str();
}

} // namespace

const GaussHermiteRule &gauss_hermite(int order)
{
    if (order < 1) {
        throw DomainError("gauss_hermite: order must be positive");
    }
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<GaussHermiteRule>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = cache[order];
    if (!slot) {
        slot = std::make_unique<GaussHermiteRule>(build_gauss_hermite(order));
    }
    return *slot;
}

Complex strip_integral(const PlaneFunction &h, double nu, const StripScheme &scheme)
{
    if (!(nu > 0.0)) {
        throw DomainError("strip_integral: nu must be positive");
    }
    scheme.validate();
    const GaussHermiteRule &rule = gauss_hermite(scheme.y_order);
    const double root_nu = std::sqrt(nu);
    const double dx = 1.0 / scheme.x_points;

    Complex total = 0.0;
    for (int j = 0; j < scheme.x_points; ++j) {
        const double x = j * dx;
        Complex column = 0.0;
        for (int k = 0; k < scheme.y_order; ++k) {
            const double u = rule.nodes[k];
            const double y = scheme.y_shift + u / root_nu;
            const double factor = rule.scaled_weights[k] * std::exp(-nu * (x * x + y * y));
            const Complex value = h(Complex(x, y));
            if (!is_finite(value)) {
                throw EvaluationError("strip_integral: integrand not finite at node " + node_name(x, y));
            }
            column += factor * value;
        }
        total += column;
    }
    return total * (dx / root_nu);
}

Complex strip_inner_product(const PlaneFunction &f, const PlaneFunction &g, double nu, const StripScheme &scheme)
{
    return strip_integral([&](Complex z) { return f(z) * std::conj(g(z)); }, nu, scheme);
}

Complex line_integral(const LineFunction &h, const LineScheme &scheme)
{
    scheme.validate();
    const double dq = sqrt2 / scheme.q_points;
    Complex total = 0.0;
    for (int j = 0; j < scheme.q_points; ++j) {
        const double q = j * dq;
        const Complex value = h(q);
        if (!is_finite(value)) {
            throw EvaluationError("line_integral: integrand not finite at node q = " + std::to_string(q));
        }
        total += value;
    }
    return total * dq;
}

Complex line_inner_product(const LineFunction &phi1, const LineFunction &phi2, const LineScheme &scheme)
{
    return line_integral([&](double q) { return phi1(q) * std::conj(phi2(q)); }, scheme);
}

} // namespace qptheta
