#ifndef QPTHETA_QUADRATURE_HPP
#define QPTHETA_QUADRATURE_HPP

#include "qptheta/core.hpp"

#include <vector>

namespace qptheta
{

/// Tensor rule on the fundamental strip [0,1] x R: periodic trapezoid in x,
/// Gauss-Hermite in y against exp(-nu (y - y_shift)^2).
struct StripScheme
{
    int x_points = 64;
    int y_order = 64;
    double y_shift = 0.0;

    void validate() const;

    /// Same scheme with both resolutions doubled.
    StripScheme refined() const { return {2 * x_points, 2 * y_order, y_shift}; }

    /// Recenters on the Gaussian peak of the basis function with (possibly
    /// half-integer) dominant index n_bar, at y = -pi (alpha + n_bar) / nu.
    static StripScheme centered(double nu, double alpha, double n_bar, int x_points = 64, int y_order = 64);
};

/// Uniform periodic trapezoid rule on [0, sqrt 2).
struct LineScheme
{
    int q_points = 256;

    void validate() const;
};

inline constexpr double sqrt2 = std::numbers::sqrt2;

struct GaussHermiteRule
{
    std::vector<double> nodes;
    std::vector<double> weights;
    /// weights[k] * exp(nodes[k]^2), computed without forming either factor.
    std::vector<double> scaled_weights;
};

/// Nodes and weights for the weight exp(-u^2) on R (Golub-Welsch).
/// Rules are cached per order; the returned reference stays valid.
const GaussHermiteRule &gauss_hermite(int order);

/// Integral over the strip of h(z) exp(-nu |z|^2).
Complex strip_integral(const PlaneFunction &h, double nu, const StripScheme &scheme);

/// <f, g>_nu = integral over the strip of f conj(g) exp(-nu |z|^2).
Complex strip_inner_product(const PlaneFunction &f, const PlaneFunction &g, double nu, const StripScheme &scheme);

/// Integral of h(q) over [0, sqrt 2).
Complex line_integral(const LineFunction &h, const LineScheme &scheme);

/// Integral of phi1 conj(phi2) over [0, sqrt 2).
Complex line_inner_product(const LineFunction &phi1, const LineFunction &phi2, const LineScheme &scheme);

} // namespace qptheta

#endif
