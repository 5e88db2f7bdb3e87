#include "qptheta/landau.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qptheta
{

LandauElement::LandauElement(SpaceParams params, Coefficients coeffs) : params_(params), coeffs_(std::move(coeffs))
{
    for (const auto &entry : coeffs_) {
        if (entry.first.m < 0) {
            throw DomainError("landau element: level index must be nonnegative, got " + std::to_string(entry.first.m));
        }
    }
}

std::set<int> LandauElement::levels() const
{
    std::set<int> out;
    for (const auto &entry : coeffs_) {
        out.insert(entry.first.m);
    }
    return out;
}

WirtingerStep::WirtingerStep(double h) : h_(h)
{
    if (!(h >= 1e-7 && h <= 1e-2)) {
        throw DomainError("wirtinger step: h must lie in [1e-7, 1e-2], got " + std::to_string(h));
    }
}

Complex basis_psi_mn(int m, int n, Complex z, const SpaceParams &params)
{
    if (m < 0 || m > max_landau_level) {
        throw DomainError("basis_psi_mn: level must lie in [0, " + std::to_string(max_landau_level) + "], got " +
                          std::to_string(m));
    }
    const double nu = params.nu();
    const double k = n + params.alpha();
    const double log_norm = -0.5 * (m * std::log(2.0) + std::lgamma(m + 1.0)) + 0.25 * std::log(2.0 * nu / pi) -
                            pi * pi * k * k / nu;
    const Complex exponent = log_norm + 0.5 * nu * z * z + 2.0 * I * pi * k * z;
    const double xi = std::sqrt(2.0 * nu) * z.imag() + std::sqrt(2.0 / nu) * pi * k;
    return require_finite(std::exp(exponent) * hermite_poly(m, xi), "basis_psi_mn");
}

Complex evaluate(const LandauElement &elem, Complex z)
{
    Complex total = 0.0;
    for (const auto &[idx, a] : elem.coeffs()) {
        total += a * basis_psi_mn(idx.m, idx.n, z, elem.params());
    }
    return total;
}

namespace
{

// Central differences along the unit direction `dir` (1 or i).
Complex central(const PlaneFunction &f, Complex z, Complex dir, double h)
{
    return (f(z + h * dir) - f(z - h * dir)) / (2.0 * h);
}

Complex richardson_central(const PlaneFunction &f, Complex z, Complex dir, double h)
{
    return (4.0 * central(f, z, dir, 0.5 * h) - central(f, z, dir, h)) / 3.0;
}

Complex nine_point_laplacian(const PlaneFunction &f, Complex z, double h)
{
    const Complex ex(h, 0.0);
    const Complex ey(0.0, h);
    const Complex edges = f(z + ex) + f(z - ex) + f(z + ey) + f(z - ey);
    const Complex corners = f(z + ex + ey) + f(z + ex - ey) + f(z - ex + ey) + f(z - ex - ey);
    return (4.0 * edges + corners - 20.0 * f(z)) / (6.0 * h * h);
}

} // namespace

Complex d_dz(const PlaneFunction &f, Complex z, const WirtingerStep &step)
{
    const double h = step.h();
    return 0.5 * (richardson_central(f, z, 1.0, h) - I * richardson_central(f, z, I, h));
}

Complex d_dzbar(const PlaneFunction &f, Complex z, const WirtingerStep &step)
{
    const double h = step.h();
    return 0.5 * (richardson_central(f, z, 1.0, h) + I * richardson_central(f, z, I, h));
}

Complex d2_dz_dzbar(const PlaneFunction &f, Complex z, const WirtingerStep &step)
{
    const double h = step.h();
    const Complex lap = (4.0 * nine_point_laplacian(f, z, 0.5 * h) - nine_point_laplacian(f, z, h)) / 3.0;
    return 0.25 * lap;
}

Complex landau_apply(const PlaneFunction &f, Complex z, const SpaceParams &params, const WirtingerStep &step)
{
    return -d2_dz_dzbar(f, z, step) + params.nu() * std::conj(z) * d_dzbar(f, z, step);
}

Complex landau_apply_exact(const LandauElement &elem, Complex z)
{
    Complex total = 0.0;
    for (const auto &[idx, a] : elem.coeffs()) {
        total += elem.params().nu() * idx.m * a * basis_psi_mn(idx.m, idx.n, z, elem.params());
    }
    return total;
}

Complex creation_apply(const PlaneFunction &f, Complex z, const SpaceParams &params, const WirtingerStep &step)
{
    return -d_dz(f, z, step) + params.nu() * std::conj(z) * f(z);
}

Complex annihilation_apply(const PlaneFunction &f, Complex z, const WirtingerStep &step) { return d_dzbar(f, z, step); }

LandauElement raise(const LandauElement &elem)
{
    LandauElement::Coefficients out;
    for (const auto &[idx, a] : elem.coeffs()) {
        out[{idx.m + 1, idx.n}] = a;
    }
    return LandauElement(elem.params(), std::move(out));
}

LandauElement lower(const LandauElement &elem)
{
    LandauElement::Coefficients out;
    for (const auto &[idx, a] : elem.coeffs()) {
        if (idx.m > 0) {
            out[{idx.m - 1, idx.n}] = a;
        }
    }
    return LandauElement(elem.params(), std::move(out));
}

double eigen_residual(int m, int n, const SpaceParams &params, const std::vector<Complex> &sample_points,
                      const WirtingerStep &step, std::optional<double> eigenvalue)
{
    const double lambda = eigenvalue.value_or(params.nu() * m);
    const PlaneFunction f = [&](Complex w) { return basis_psi_mn(m, n, w, params); };
    double worst = 0.0;
    for (Complex z : sample_points) {
        const Complex value = f(z);
        const double r = std::abs(landau_apply(f, z, params, step) - lambda * value) / std::max(1.0, std::abs(value));
        worst = std::max(worst, r);
    }
    return worst;
}

LandauElement project_level(const LandauElement &elem, int m)
{
    LandauElement::Coefficients out;
    for (const auto &[idx, a] : elem.coeffs()) {
        if (idx.m == m) {
            out[idx] = a;
        }
    }
    return LandauElement(elem.params(), std::move(out));
}

double landau_norm(const LandauElement &elem)
{
    double sum = 0.0;
    for (const auto &entry : elem.coeffs()) {
        sum += std::norm(entry.second);
    }
    return std::sqrt(sum);
}

std::vector<double> ladder_polynomial(int m, int n, const SpaceParams &params)
{
    if (m < 0) {
        throw DomainError("ladder_polynomial: level must be nonnegative");
    }
    const double nu = params.nu();
    const double shift = 2.0 * pi * (n + params.alpha());
    std::vector<double> poly{1.0};
    for (int k = 0; k < m; ++k) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += 2.0 * nu * poly[j];
            next[j] += shift * poly[j];
            if (j > 0) {
                next[j - 1] -= 0.5 * j * poly[j];
            }
        }
        poly = std::move(next);
    }
    return poly;
}

Complex ladder_evaluate(int m, int n, Complex z, const SpaceParams &params)
{
    const std::vector<double> poly = ladder_polynomial(m, n, params);
    const double y = z.imag();
    double value = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        value = value * y + *it;
    }
    const double scale = std::exp(-0.5 * (m * std::log(params.nu()) + std::lgamma(m + 1.0)));
    return require_finite(scale * value * basis_psi(n, z, params), "ladder_evaluate");
}

} // namespace qptheta
