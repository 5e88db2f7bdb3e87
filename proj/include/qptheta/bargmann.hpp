#ifndef QPTHETA_BARGMANN_HPP
#define QPTHETA_BARGMANN_HPP

#include "qptheta/core.hpp"
#include "qptheta/fock.hpp"
#include "qptheta/quadrature.hpp"

#include <map>

namespace qptheta
{

/// Finite combination sum_n b_n phi_n^alpha of the orthonormal basis of the
/// (sqrt(2) Z, chi_alpha)-quasi-periodic line space.
class LineElement
{
public:
    using Coefficients = std::map<int, Complex>;

    explicit LineElement(double alpha, Coefficients coeffs = {});

    double alpha() const noexcept { return alpha_; }
    const Coefficients &coeffs() const noexcept { return coeffs_; }

private:
    double alpha_;
    Coefficients coeffs_;
};

/// phi_n^alpha(q) = 2^{-1/4} exp(sqrt(2) i pi (n + alpha) q).
Complex phi_basis(int n, double q, double alpha);

Complex evaluate_line(const LineElement &elem, double q);

/// (sum |b_n|^2)^{1/2}.
double line_norm(const LineElement &elem);

/// Kernel of the Bargmann transform restricted to one period, theta_3 form:
/// (nu/pi)^{3/4} exp(nu z^2/2 - nu (q/sqrt2 - z)^2) theta_3((i nu/pi)(q/sqrt2 - z) + alpha | i nu/pi).
Complex bargmann_kernel_A(Complex z, double q, const SpaceParams &params, const TruncationBudget &budget = {});

/// Bilateral generating function sum_n psi_n(z) conj(phi_n(q)); the theta path
/// evaluates (nu/pi)^{1/4} exp(nu z^2/2) theta_{alpha,0}(z - q/sqrt2 | i pi/nu).
Complex generating_kernel_G(Complex z, double q, const SpaceParams &params, const TruncationBudget &budget = {},
                            KernelPath path = KernelPath::theta);

/// Coefficient-level transform: phi_n maps to psi_n, so the psi-convention
/// coefficients are carried over unchanged.
FockElement bargmann_transform_coeffs(const LineElement &elem, double nu);

struct LineRefinement
{
    int initial_points = 256;
    int max_points = 4096;
};

/// Integral over [0, sqrt 2) of A(z; q) phi(q), by trapezoid refinement until
/// two successive levels agree to tol * max(1, |result|).
Complex bargmann_pointwise(const LineFunction &phi, Complex z, const SpaceParams &params,
                           const TruncationBudget &budget = {}, const LineRefinement &refinement = {});

/// Whole-line definition (nu/pi)^{3/4} exp(nu z^2/2) integral phi(q) exp(-nu (q - sqrt2 z)^2 / 2) dq,
/// truncated to |q - sqrt2 Re z| <= 10 / sqrt(nu). For bounded phi only.
Complex bargmann_whole_line(const LineFunction &phi, Complex z, const SpaceParams &params, int points = 4001);

/// Inverse transform <f, G(.; q)>_nu by strip quadrature.
Complex bargmann_inverse(const FockElement &elem, double q, const TruncationBudget &budget = {},
                         const StripScheme &scheme = {});

} // namespace qptheta

#endif
