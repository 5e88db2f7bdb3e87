#include "qptheta/verify.hpp"

#include "qptheta/bargmann.hpp"
#include "qptheta/fock.hpp"
#include "qptheta/io.hpp"
#include "qptheta/landau.hpp"
#include "qptheta/theta.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

namespace qptheta
{

VerifyCase VerifyCase::make(std::string name, double expected, double actual, double tolerance)
{
    const bool pass = std::isfinite(actual) && std::abs(expected - actual) <= tolerance;
    return {std::move(name), expected, actual, tolerance, pass};
}

bool VerifyReport::all_passed() const
{
    return std::all_of(cases.begin(), cases.end(), [](const VerifyCase &c) { return c.pass; });
}

namespace
{

double cap(const VerifyOptions &opts, double stated) { return std::min(stated, opts.tol_cap); }

double rel_err(Complex actual, Complex expected)
{
    return std::abs(actual - expected) / std::max(std::abs(expected), 1e-300);
}

std::string label(double nu, double alpha)
{
    std::ostringstream os;
    os.precision(6);
    os << "nu=" << nu << ", alpha=" << alpha;
    return os.str();
}

// Per-pair strip rule centered on the Gaussian peak of psi_k conj(psi_n).
StripScheme pair_scheme(const SpaceParams &p, int k, int n, const StripScheme &resolution)
{
    return StripScheme::centered(p.nu(), p.alpha(), 0.5 * (k + n), resolution.x_points, resolution.y_order);
}

double psi_gram_deviation(const SpaceParams &p, int nmin, int nmax, const StripScheme &resolution)
{
    double worst = 0.0;
    for (int k = nmin; k <= nmax; ++k) {
        for (int n = nmin; n <= nmax; ++n) {
            const Complex g = strip_inner_product([&](Complex z) { return basis_psi(k, z, p); },
                                                  [&](Complex z) { return basis_psi(n, z, p); }, p.nu(),
                                                  pair_scheme(p, k, n, resolution));
            worst = std::max(worst, std::abs(g - (k == n ? 1.0 : 0.0)));
        }
    }
    return worst;
}

double landau_gram_deviation(const SpaceParams &p, int max_level, int nmax, const StripScheme &resolution)
{
    std::vector<LevelIndex> basis;
    for (int m = 0; m <= max_level; ++m) {
        for (int n = -nmax; n <= nmax; ++n) {
            basis.push_back({m, n});
        }
    }
    double worst = 0.0;
    for (const auto &a : basis) {
        for (const auto &b : basis) {
            const Complex g = strip_inner_product([&](Complex z) { return basis_psi_mn(a.m, a.n, z, p); },
                                                  [&](Complex z) { return basis_psi_mn(b.m, b.n, z, p); }, p.nu(),
                                                  pair_scheme(p, a.n, b.n, resolution));
            worst = std::max(worst, std::abs(g - (a == b ? 1.0 : 0.0)));
        }
    }
    return worst;
}

Complex random_complex(std::mt19937_64 &rng)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return {re, u(rng)};
}

// psi-convention coefficients on `terms` distinct indices drawn from [-span, span].
FockElement random_fock_element(const SpaceParams &p, int terms, int span, std::mt19937_64 &rng)
{
    std::vector<int> indices;
    for (int n = -span; n <= span; ++n) {
        indices.push_back(n);
    }
    std::shuffle(indices.begin(), indices.end(), rng);
    FockElement::Coefficients psi;
    for (int k = 0; k < terms; ++k) {
        psi[indices[k]] = random_complex(rng);
    }
    return FockElement::from_psi_coeffs(p, psi);
}

double mean_index(const FockElement &elem)
{
    double total = 0.0;
    for (const auto &entry : elem.coeffs()) {
        total += entry.first;
    }
    return elem.empty() ? 0.0 : total / elem.coeffs().size();
}

const SpaceParams main_params(pi, 0.3);

const std::vector<SpaceParams> &gram_settings()
{
    static const std::vector<SpaceParams> settings{{pi, 0.0}, {pi, 0.3}, {2.0, 0.5}, {0.7, -0.25}};
    return settings;
}

// 1 --------------------------------------------------------------------------
std::vector<VerifyCase> orthonormality(const VerifyOptions &opts)
{
    std::vector<VerifyCase> out;
    for (const auto &p : gram_settings()) {
        out.push_back(VerifyCase::make("C01 psi_n Gram deviation, n in [-4,4], " + label(p.nu(), p.alpha()), 0.0,
                                       psi_gram_deviation(p, -4, 4, StripScheme{}), cap(opts, 1e-8)));
    }
    return out;
}

// 2 --------------------------------------------------------------------------
double e_norm_quadrature_error(const StripScheme &resolution)
{
    double worst = 0.0;
    for (int n = -3; n <= 3; ++n) {
        const auto e = [&](Complex z) { return basis_e(n, z, main_params); };
        const double quad = strip_inner_product(e, e, main_params.nu(), pair_scheme(main_params, n, n, resolution)).real();
        const double closed = std::pow(e_norm(n, main_params), 2);
        worst = std::max(worst, std::abs(quad - closed) / closed);
    }
    return worst;
}

std::vector<VerifyCase> closed_form_norm(const VerifyOptions &opts)
{
    return {VerifyCase::make("C02 ||e_n||^2 closed form vs quadrature, n in [-3,3]", 0.0,
                             e_norm_quadrature_error(StripScheme{}), cap(opts, 1e-8))};
}

// 3 --------------------------------------------------------------------------
double parseval_error(const StripScheme &resolution, int elements)
{
    std::mt19937_64 rng(20261016);
    double worst = 0.0;
    for (int trial = 0; trial < elements; ++trial) {
        const FockElement f = random_fock_element(main_params, 6, 3, rng);
        const auto eval = [&](Complex z) { return evaluate(f, z); };
        const StripScheme scheme = StripScheme::centered(main_params.nu(), main_params.alpha(), mean_index(f),
                                                         resolution.x_points, resolution.y_order);
        const double quad = strip_inner_product(eval, eval, main_params.nu(), scheme).real();
        const double closed = std::pow(fock_norm(f), 2);
        worst = std::max(worst, std::abs(quad - closed) / closed);
    }
    return worst;
}

const StripScheme parseval_resolution{64, 128, 0.0};

std::vector<VerifyCase> parseval(const VerifyOptions &opts)
{
    return {VerifyCase::make("C03 Parseval: fock_norm^2 vs quadrature, 10 random 6-term elements", 0.0,
                             parseval_error(parseval_resolution, 10), cap(opts, 1e-6))};
}

// 4 --------------------------------------------------------------------------
const std::vector<Complex> &grid_a()
{
    static const std::vector<Complex> pts{{0.1, 0.2}, {0.3, -0.1}, {-0.5, 0.4}, {0.9, 0.7}, {0.25, -0.8}};
    return pts;
}

// Chosen so that no pair lands on a zero of K(., w): relative error is undefined there.
const std::vector<Complex> &grid_b()
{
    static const std::vector<Complex> pts{{0.3, -0.1}, {-0.2, 0.7}, {0.6, 0.0}, {1.3, -0.6}, {0.05, 0.9}};
    return pts;
}

std::vector<VerifyCase> kernel_two_path(const VerifyOptions &opts)
{
    double worst = 0.0;
    for (Complex z : grid_a()) {
        for (Complex w : grid_b()) {
            const Complex via_theta = reproducing_kernel(z, w, main_params, {}, KernelPath::theta);
            const Complex via_sum = reproducing_kernel(z, w, main_params, {}, KernelPath::sum);
            worst = std::max(worst, rel_err(via_theta, via_sum));
        }
    }
    return {VerifyCase::make("C04 kernel theta path vs psi-sum path, 5x5 grid", 0.0, worst, cap(opts, 1e-9))};
}

// 5 --------------------------------------------------------------------------
double reproducing_error(const StripScheme &resolution)
{
    const std::vector<Complex> ws{{0.2, 0.3}, {0.7, -0.4}, {-0.3, 0.1}};
    double worst = 0.0;
    for (int n : {-1, 0, 2}) {
        const auto f = [&](Complex z) { return basis_psi(n, z, main_params); };
        for (Complex w : ws) {
            const auto kw = [&](Complex z) { return reproducing_kernel(z, w, main_params); };
            const StripScheme scheme = pair_scheme(main_params, n, n, resolution);
            const Complex quad = strip_inner_product(f, kw, main_params.nu(), scheme);
            worst = std::max(worst, rel_err(quad, f(w)));
        }
    }
    return worst;
}

std::vector<VerifyCase> reproducing(const VerifyOptions &opts)
{
    return {VerifyCase::make("C05 reproducing property <f, K(., w)> = f(w)", 0.0, reproducing_error(StripScheme{}),
                             cap(opts, 1e-6))};
}

// 6 --------------------------------------------------------------------------
std::vector<VerifyCase> growth_bound(const VerifyOptions &opts)
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> coord(-1.0, 1.0);
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const FockElement f = random_fock_element(main_params, 4, 3, rng);
        const double x = coord(rng);
        const Complex z(x, coord(rng));
        const double ratio = std::abs(evaluate(f, z)) / (fock_norm(f) * pointwise_bound(z, main_params));
        worst_ratio = std::max(worst_ratio, ratio);
    }
    // Excess of |f(z)| over the bound, relative; zero when the bound holds.
    return {VerifyCase::make("C06 growth bound |f(z)| <= ||f|| K(z,z)^{1/2}, 20 draws", 0.0,
                             std::max(0.0, worst_ratio - 1.0), cap(opts, 1e-9))};
}

// 7 --------------------------------------------------------------------------
const ThetaArgs membership_args(0.3, 0.2, Complex(0.0, 2.0));

double membership_norm_error(const StripScheme &resolution)
{
    const double closed = theta_membership(membership_args, main_params).norm.value();
    const auto f = [&](Complex z) { return theta_element(membership_args, main_params, z); };
    const double quad = std::sqrt(strip_inner_product(f, f, main_params.nu(), resolution).real());
    return std::abs(quad - closed) / closed;
}

std::vector<VerifyCase> membership(const VerifyOptions &opts)
{
    const SpaceParams p = main_params;
    int correct = 0;
    const std::vector<std::pair<double, bool>> decisions{
        {2.0 * pi / p.nu(), true}, {pi / (2.0 * p.nu()), false}, {pi / p.nu(), false}};
    int certified = 0;
    for (const auto &[im_tau, expected] : decisions) {
        const ThetaArgs args(0.3, 0.2, Complex(0.0, im_tau));
        if (theta_membership(args, p).in_space == expected) {
            ++correct;
        }
        if (!expected && certify_norm_divergence(args, p).divergent) {
            ++certified;
        }
    }
    return {
        VerifyCase::make("C07 membership decisions (Im tau = 2pi/nu, pi/(2nu), pi/nu)", 3.0, correct, 0.0),
        VerifyCase::make("C07 membership norm vs quadrature", 0.0, membership_norm_error(StripScheme{}),
                         cap(opts, 1e-6)),
        VerifyCase::make("C07 divergence certified by partial sums", 2.0, certified, 0.0),
    };
}

// 8 --------------------------------------------------------------------------
double transport_error(const LineRefinement &refinement)
{
    double worst = 0.0;
    for (int n = -2; n <= 2; ++n) {
        const auto phi = [&](double q) { return phi_basis(n, q, main_params.alpha()); };
        for (double x : {0.0, 0.5, 1.0}) {
            for (double y : {-1.0, 0.0, 1.0}) {
                const Complex z(x, y);
                const Complex expected = basis_psi(n, z, main_params);
                const Complex actual = bargmann_pointwise(phi, z, main_params, {}, refinement);
                worst = std::max(worst, std::abs(actual - expected) / std::max(1.0, std::abs(expected)));
            }
        }
    }
    return worst;
}

std::vector<VerifyCase> transport(const VerifyOptions &opts)
{
    return {VerifyCase::make("C08 Bargmann transform of phi_n equals psi_n (line quadrature)", 0.0,
                             transport_error(LineRefinement{}), cap(opts, 1e-8))};
}

// 9 --------------------------------------------------------------------------
std::vector<VerifyCase> kernel_identity(const VerifyOptions &opts)
{
    const std::vector<SpaceParams> settings{{pi, 0.0}, {pi, 0.3}, {2.0, -0.4}};
    const std::vector<double> qs{0.0, 0.35, 0.7, 1.05, 1.4};
    std::vector<VerifyCase> out;
    for (const auto &p : settings) {
        double worst = 0.0;
        for (Complex z : grid_a()) {
            for (double q : qs) {
                worst = std::max(worst, rel_err(bargmann_kernel_A(z, q, p), generating_kernel_G(z, q, p)));
            }
        }
        out.push_back(
            VerifyCase::make("C09 kernel A == G on 5x5 (z, q) grid, " + label(p.nu(), p.alpha()), 0.0, worst,
                             cap(opts, 1e-9)));
    }
    return out;
}

// 10 -------------------------------------------------------------------------
const std::vector<Complex> &eigen_samples()
{
    static const std::vector<Complex> pts{{0.2, 0.1}, {0.5, -0.6}, {0.9, 0.9}, {-0.3, -1.0}, {0.1, 0.45}};
    return pts;
}

std::vector<VerifyCase> landau_eigen(const VerifyOptions &opts)
{
    const SpaceParams p(pi, 0.3);
    double worst = 0.0;
    double worst_null = 0.0;
    for (int m = 0; m <= 4; ++m) {
        for (int n = -2; n <= 2; ++n) {
            const double r = eigen_residual(m, n, p, eigen_samples());
            worst = std::max(worst, r);
            if (m == 0) {
                worst_null = std::max(worst_null, r);
            }
        }
    }
    return {
        VerifyCase::make("C10 Landau eigen-residual, m <= 4, |n| <= 2", 0.0, worst, cap(opts, 1e-5)),
        VerifyCase::make("C10 null space: Delta psi_n = 0, |n| <= 2", 0.0, worst_null, cap(opts, 1e-6)),
    };
}

// 11 -------------------------------------------------------------------------
std::vector<VerifyCase> ladder(const VerifyOptions &opts)
{
    const SpaceParams p(pi, 0.3);
    double worst_closed = 0.0;
    double worst_fd = 0.0;
    for (int n = -2; n <= 2; ++n) {
        LandauElement elem(p, {{{0, n}, 1.0}});
        for (int m = 1; m <= 5; ++m) {
            const LandauElement raised = raise(elem);
            for (Complex z : eigen_samples()) {
                // Analytic (i A*)^m iteration vs the raised coefficient element.
                const Complex closed = evaluate(raised, z);
                const Complex analytic = ladder_evaluate(m, n, z, p);
                worst_closed = std::max(worst_closed, std::abs(closed - analytic) / std::max(1.0, std::abs(analytic)));
                // Numerical A* applied to the previous level.
                const auto prev = [&](Complex w) { return evaluate(elem, w); };
                const Complex fd = I * creation_apply(prev, z, p) / std::sqrt(p.nu() * m);
                worst_fd = std::max(worst_fd, std::abs(fd - closed) / std::max(1.0, std::abs(closed)));
            }
            elem = raised;
        }
    }
    return {
        VerifyCase::make("C11 raise^m psi_{0,n} == (nu^m m!)^{-1/2} (iA*)^m psi_n, m <= 5", 0.0, worst_closed,
                         cap(opts, 1e-9)),
        VerifyCase::make("C11 finite-difference iA*/sqrt(nu(m+1)) == raise", 0.0, worst_fd, cap(opts, 1e-5)),
    };
}

// 12 -------------------------------------------------------------------------
std::vector<VerifyCase> landau_gram(const VerifyOptions &opts)
{
    return {VerifyCase::make("C12 psi_{m,n} Gram deviation, m <= 3, |n| <= 2", 0.0,
                             landau_gram_deviation(main_params, 3, 2, StripScheme{}), cap(opts, 1e-7))};
}

// 13 -------------------------------------------------------------------------
const ThetaArgs integral_args(0.3, 0.1, Complex(0.0, 2.0));
const Complex integral_point(0.1, 0.1);

double theta_integral_error(const StripScheme &resolution)
{
    const Complex lhs = theta_integral_lhs(integral_point, integral_args, main_params, resolution);
    return rel_err(lhs, theta_integral_rhs(integral_point, integral_args, main_params));
}

std::vector<VerifyCase> theta_integral(const VerifyOptions &opts)
{
    return {VerifyCase::make("C13 theta integral identity at z = 0.1+0.1i", 0.0, theta_integral_error(StripScheme{}),
                             cap(opts, 1e-6))};
}

// 14 -------------------------------------------------------------------------
double series_stability(double tol)
{
    const TruncationBudget coarse{tol, 10000};
    const TruncationBudget fine{tol / 10.0, 10000};
    double worst = 0.0;
    auto track = [&](auto eval) { worst = std::max(worst, std::abs(eval(coarse) - eval(fine))); };
    track([](const TruncationBudget &b) { return jacobi_theta3(0.0, I, b); });
    track([](const TruncationBudget &b) { return jacobi_theta3({0.3, 0.2}, 2.0 * I, b); });
    track([](const TruncationBudget &b) { return riemann_theta(ThetaArgs(0.3, 0.7, 1.5 * I), {0.1, 0.05}, b); });
    track([](const TruncationBudget &b) { return theta3_inversion_rhs({0.1, 0.1}, {1.0, 2.0}, b); });
    for (Complex z : grid_a()) {
        for (Complex w : grid_b()) {
            track([&](const TruncationBudget &b) { return reproducing_kernel(z, w, main_params, b); });
            track([&](const TruncationBudget &b) {
                return reproducing_kernel(z, w, main_params, b, KernelPath::sum);
            });
        }
        track([&](const TruncationBudget &b) { return bargmann_kernel_A(z, 0.7, main_params, b); });
        track([&](const TruncationBudget &b) { return generating_kernel_G(z, 0.7, main_params, b); });
    }
    track([](const TruncationBudget &b) {
        return Complex(theta_membership(membership_args, main_params, b).norm.value(), 0.0);
    });
    return worst;
}

std::vector<VerifyCase> truncation_soundness(const VerifyOptions &opts)
{
    const StripScheme base{};
    const StripScheme doubled = base.refined();
    auto change = [](double a, double b) { return std::abs(a - b); };
    return {
        VerifyCase::make("C14 series stable under tol -> tol/10 (tol = 1e-12)", 0.0, series_stability(1e-12),
                         cap(opts, 1e-12)),
        VerifyCase::make("C14 doubling: psi_n Gram", 0.0,
                         change(psi_gram_deviation(main_params, -4, 4, base),
                                psi_gram_deviation(main_params, -4, 4, doubled)),
                         cap(opts, 1e-8)),
        VerifyCase::make("C14 doubling: e_n norms", 0.0,
                         change(e_norm_quadrature_error(base), e_norm_quadrature_error(doubled)), cap(opts, 1e-8)),
        VerifyCase::make("C14 doubling: Parseval", 0.0,
                         change(parseval_error(parseval_resolution, 3), parseval_error(parseval_resolution.refined(), 3)),
                         cap(opts, 1e-6)),
        VerifyCase::make("C14 doubling: reproducing property", 0.0,
                         change(reproducing_error(base), reproducing_error(doubled)), cap(opts, 1e-6)),
        VerifyCase::make("C14 doubling: membership norm", 0.0,
                         change(membership_norm_error(base), membership_norm_error(doubled)), cap(opts, 1e-6)),
        VerifyCase::make("C14 doubling: Bargmann line quadrature", 0.0,
                         change(transport_error(LineRefinement{}), transport_error(LineRefinement{512, 8192})),
                         cap(opts, 1e-8)),
        VerifyCase::make("C14 doubling: psi_{m,n} Gram", 0.0,
                         change(landau_gram_deviation(main_params, 3, 2, base),
                                landau_gram_deviation(main_params, 3, 2, doubled)),
                         cap(opts, 1e-7)),
        VerifyCase::make("C14 doubling: theta integral", 0.0,
                         change(theta_integral_error(base), theta_integral_error(doubled)), cap(opts, 1e-6)),
    };
}

} // namespace

const std::vector<Criterion> &acceptance_criteria()
{
    static const std::vector<Criterion> criteria{
        {"C01", "orthonormality of psi_n", &orthonormality},
        {"C02", "closed-form norm of e_n", &closed_form_norm},
        {"C03", "Parseval identity", &parseval},
        {"C04", "kernel two-path agreement", &kernel_two_path},
        {"C05", "reproducing property", &reproducing},
        {"C06", "pointwise growth bound", &growth_bound},
        {"C07", "theta membership", &membership},
        {"C08", "Bargmann basis transport", &transport},
        {"C09", "kernel identity A == G", &kernel_identity},
        {"C10", "Landau eigenvalues", &landau_eigen},
        {"C11", "ladder identity", &ladder},
        {"C12", "psi_{m,n} orthonormality", &landau_gram},
        {"C13", "theta integral identity", &theta_integral},
        {"C14", "truncation soundness", &truncation_soundness},
    };
    return criteria;
}

VerifyReport verify_suite(std::optional<double> tol)
{
    if (tol && !(*tol > 0.0)) {
        throw DomainError("verify_suite: tol must be positive");
    }
    VerifyOptions opts;
    if (tol) {
        opts.tol_cap = *tol;
    }
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    report.suite = "all";
    for (const auto &criterion : acceptance_criteria()) {
        try {
            for (auto &c : criterion.run(opts)) {
                report.cases.push_back(std::move(c));
            }
        } catch (const Error &e) {
            // A criterion that cannot be evaluated counts as a failure.
            VerifyCase failed{criterion.id + " " + criterion.title + ": " + e.what(), 0.0,
                              std::numeric_limits<double>::quiet_NaN(), 0.0, false};
            report.cases.push_back(std::move(failed));
        }
    }
    report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const VerifyReport &report)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto &c : report.cases) {
        // NaN is not representable in JSON; an unevaluated case reports null.
        nlohmann::json actual = std::isfinite(c.actual) ? nlohmann::json(c.actual) : nlohmann::json(nullptr);
        cases.push_back(
            {{"name", c.name}, {"expected", c.expected}, {"actual", actual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    return {{"suite", report.suite}, {"cases", cases}, {"wall_time", report.wall_time}};
}

VerifyReport report_from_json(const nlohmann::json &j)
{
    try {
        VerifyReport report;
        report.suite = j.at("suite").get<std::string>();
        report.wall_time = j.at("wall_time").get<double>();
        for (const auto &c : j.at("cases")) {
            const auto &actual = c.at("actual");
            report.cases.push_back({c.at("name").get<std::string>(), c.at("expected").get<double>(),
                                    actual.is_null() ? std::numeric_limits<double>::quiet_NaN() : actual.get<double>(),
                                    c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
        }
        return report;
    } catch (const nlohmann::json::exception &e) {
        throw InputError(std::string("verify report: ") + e.what());
    }
}

} // namespace qptheta
