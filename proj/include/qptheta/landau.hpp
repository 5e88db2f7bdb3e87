#ifndef QPTHETA_LANDAU_HPP
#define QPTHETA_LANDAU_HPP

#include "qptheta/core.hpp"
#include "qptheta/fock.hpp"

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace qptheta
{

/// (Landau level m >= 0, Fourier index n).
struct LevelIndex
{
    int m = 0;
    int n = 0;

    friend auto operator<=>(const LevelIndex &, const LevelIndex &) = default;
};

/// Finite combination sum a_{m,n} psi_{m,n} of the orthonormal basis of the
/// full quasi-periodic L^2 space.
class LandauElement
{
public:
    using Coefficients = std::map<LevelIndex, Complex>;

    explicit LandauElement(SpaceParams params, Coefficients coeffs = {});

    const SpaceParams &params() const noexcept { return params_; }
    const Coefficients &coeffs() const noexcept { return coeffs_; }
    bool empty() const noexcept { return coeffs_.empty(); }
    std::set<int> levels() const;

    friend bool operator==(const LandauElement &, const LandauElement &) = default;

private:
    SpaceParams params_;
    Coefficients coeffs_;
};

/// Finite-difference step for the Wirtinger derivatives, 1e-7 <= h <= 1e-2.
class WirtingerStep
{
public:
    explicit WirtingerStep(double h = 1e-4);
    double h() const noexcept { return h_; }

private:
    double h_;
};

inline constexpr int max_landau_level = 40;

/// psi_{m,n}(z) = C_{m,n} e_n(z) H_m(sqrt(2 nu) y + sqrt(2/nu) pi (n + alpha)), with
/// C_{m,n} = (2^m m!)^{-1/2} (2 nu / pi)^{1/4} exp(-pi^2 (n + alpha)^2 / nu).
Complex basis_psi_mn(int m, int n, Complex z, const SpaceParams &params);

Complex evaluate(const LandauElement &elem, Complex z);

/// Central-difference Wirtinger derivatives with one Richardson step.
Complex d_dz(const PlaneFunction &f, Complex z, const WirtingerStep &step = WirtingerStep());
Complex d_dzbar(const PlaneFunction &f, Complex z, const WirtingerStep &step = WirtingerStep());

/// d^2 f / dz dzbar = (f_xx + f_yy) / 4 from the 9-point Laplacian stencil,
/// Richardson-extrapolated over h and h/2.
Complex d2_dz_dzbar(const PlaneFunction &f, Complex z, const WirtingerStep &step = WirtingerStep());

/// (Delta_nu f)(z) = -d^2 f/dz dzbar + nu conj(z) df/dzbar, numerically.
Complex landau_apply(const PlaneFunction &f, Complex z, const SpaceParams &params,
                     const WirtingerStep &step = WirtingerStep());

/// Coefficient path: Delta_nu acts on level m as multiplication by nu m.
Complex landau_apply_exact(const LandauElement &elem, Complex z);

/// A* f = -df/dz + nu conj(z) f, numerically.
Complex creation_apply(const PlaneFunction &f, Complex z, const SpaceParams &params,
                       const WirtingerStep &step = WirtingerStep());

/// A f = df/dzbar, numerically.
Complex annihilation_apply(const PlaneFunction &f, Complex z, const WirtingerStep &step = WirtingerStep());

/// Normalized creation step on coefficients: (m, n) -> (m+1, n). At function
/// level this is i A* / sqrt(nu (m+1)).
LandauElement raise(const LandauElement &elem);

/// Adjoint of raise: (m, n) -> (m-1, n), level 0 annihilated. At function
/// level this is -i A / sqrt(nu m), since A psi_{m,n} = i sqrt(nu m) psi_{m-1,n}.
LandauElement lower(const LandauElement &elem);

/// max over samples of |Delta_nu psi_{m,n} - lambda psi_{m,n}| / max(1, |psi_{m,n}|),
/// with lambda = nu m unless overridden.
double eigen_residual(int m, int n, const SpaceParams &params, const std::vector<Complex> &sample_points,
                      const WirtingerStep &step = WirtingerStep(), std::optional<double> eigenvalue = std::nullopt);

LandauElement project_level(const LandauElement &elem, int m);

/// (sum |a_{m,n}|^2)^{1/2}.
double landau_norm(const LandauElement &elem);

/// Polynomial P_m in y with (i A*)^m e_n = e_n P_m, built from P_0 = 1 by
/// P_{k+1}(y) = (2 nu y + 2 pi (n + alpha)) P_k(y) - P_k'(y) / 2.
/// Coefficients in increasing powers of y.
std::vector<double> ladder_polynomial(int m, int n, const SpaceParams &params);

/// (nu^m m!)^{-1/2} (i A*)^m psi_n evaluated through ladder_polynomial.
Complex ladder_evaluate(int m, int n, Complex z, const SpaceParams &params);

} // namespace qptheta

#endif
