#include "qptheta/cli.hpp"

#include "qptheta/bargmann.hpp"
#include "qptheta/fock.hpp"
#include "qptheta/io.hpp"
#include "qptheta/landau.hpp"
#include "qptheta/theta.hpp"
#include "qptheta/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace qptheta
{

namespace
{

using nlohmann::json;

enum class Format
{
    json,
    csv
};

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

struct Output
{
    json payload;
    std::string csv;
    int exit_code = exit_code::ok;
};

Output complex_output(Complex z)
{
    return {complex_to_json(z), "value_re,value_im\n" + fmt(z.real()) + "," + fmt(z.imag()) + "\n"};
}

// Options shared by every leaf command.
struct Common
{
    std::string format = "json";
};

void add_format(CLI::App *cmd, Common &common)
{
    cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

Complex complex_arg(const std::string &text) { return parse_complex(text); }

const std::vector<Complex> &eigres_samples()
{
    static const std::vector<Complex> pts{{0.2, 0.1}, {0.5, -0.6}, {0.9, 0.9}, {-0.3, -1.0}, {0.1, 0.45}};
    return pts;
}

Output gram_output(const SpaceParams &p, int nmin, int nmax, int mlevels)
{
    if (nmax < nmin) {
        throw InputError("fock gram: --nmax must be >= --nmin");
    }
    if (mlevels < 1 || mlevels - 1 > max_landau_level) {
        throw InputError("fock gram: --mlevels must lie in [1, " + std::to_string(max_landau_level + 1) + "]");
    }
    std::vector<LevelIndex> basis;
    for (int m = 0; m < mlevels; ++m) {
        for (int n = nmin; n <= nmax; ++n) {
            basis.push_back({m, n});
        }
    }
    json re = json::array();
    json im = json::array();
    json labels = json::array();
    std::string csv = "row_m,row_n,col_m,col_n,value_re,value_im\n";
    double deviation = 0.0;
    for (const auto &a : basis) {
        labels.push_back({{"m", a.m}, {"n", a.n}});
        json re_row = json::array();
        json im_row = json::array();
        for (const auto &b : basis) {
            const StripScheme scheme = StripScheme::centered(p.nu(), p.alpha(), 0.5 * (a.n + b.n));
            const Complex g = strip_inner_product([&](Complex z) { return basis_psi_mn(a.m, a.n, z, p); },
                                                  [&](Complex z) { return basis_psi_mn(b.m, b.n, z, p); }, p.nu(),
                                                  scheme);
            deviation = std::max(deviation, std::abs(g - (a == b ? 1.0 : 0.0)));
            re_row.push_back(g.real());
            im_row.push_back(g.imag());
            csv += std::to_string(a.m) + "," + std::to_string(a.n) + "," + std::to_string(b.m) + "," +
                   std::to_string(b.n) + "," + fmt(g.real()) + "," + fmt(g.imag()) + "\n";
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    json payload{{"nu", p.nu()}, {"alpha", p.alpha()}, {"basis", labels},
                 {"re", re},     {"im", im},           {"max_deviation", deviation}};
    return {payload, csv};
}

Output membership_output(const ThetaArgs &args, const SpaceParams &p)
{
    const Membership mem = theta_membership(args, p);
    json payload{{"in_space", mem.in_space}, {"norm", mem.norm ? json(*mem.norm) : json(nullptr)}};
    std::string csv = "in_space,norm\n" + std::string(mem.in_space ? "true" : "false") + "," +
                      (mem.norm ? fmt(*mem.norm) : std::string()) + "\n";
    if (!mem.in_space) {
        const DivergenceCertificate cert = certify_norm_divergence(args, p);
        payload["divergence"] = {
            {"cutoffs", cert.cutoffs}, {"log_partial_sums", cert.log_partial_sums}, {"certified", cert.divergent}};
    }
    return {payload, csv};
}

Output report_output(const VerifyReport &report)
{
    std::string csv = "name,expected,actual,tolerance,pass\n";
    for (const auto &c : report.cases) {
        std::string name = c.name;
        std::replace(name.begin(), name.end(), ',', ';');
        csv += "\"" + name + "\"," + fmt(c.expected) + "," + fmt(c.actual) + "," + fmt(c.tolerance) + "," +
               (c.pass ? "true" : "false") + "\n";
    }
    return {to_json(report), csv, report.all_passed() ? exit_code::ok : exit_code::verification_failed};
}

Output element_output(const json &j) { return {j, j.dump() + "\n"}; }

} // namespace

CommandResult run_command(const std::vector<std::string> &args)
{
    CLI::App app{"Quasi-periodic theta function spaces: bases, kernels, Bargmann transform, Landau levels",
                 "qptheta"};
    app.require_subcommand(1);

    Common common;
    std::function<Output()> action;

    // theta ---------------------------------------------------------------
    auto *theta_cmd = app.add_subcommand("theta", "Riemann theta series")->require_subcommand(1);
    struct
    {
        double alpha = 0, beta = 0, tol = 1e-12;
        std::string tau, z;
    } theta_opts;
    auto *theta_eval = theta_cmd->add_subcommand("eval", "Evaluate theta_{alpha,beta}(z | tau)");
    theta_eval->add_option("--alpha", theta_opts.alpha)->required();
    theta_eval->add_option("--beta", theta_opts.beta)->required();
    theta_eval->add_option("--tau", theta_opts.tau, "Modulus, e.g. 0+1i")->required();
    theta_eval->add_option("--z", theta_opts.z, "Argument, e.g. 0.1-0.2i")->required();
    theta_eval->add_option("--tol", theta_opts.tol, "Absolute truncation tolerance");
    add_format(theta_eval, common);
    theta_eval->callback([&] {
        action = [&] {
            const ThetaArgs targs(theta_opts.alpha, theta_opts.beta, complex_arg(theta_opts.tau));
            return complex_output(riemann_theta(targs, complex_arg(theta_opts.z), {theta_opts.tol, 10000}));
        };
    });

    // fock ----------------------------------------------------------------
    auto *fock_cmd = app.add_subcommand("fock", "Holomorphic quasi-periodic space")->require_subcommand(1);
    struct
    {
        double nu = 0, alpha = 0, beta = 0;
        int n = 0, nmin = 0, nmax = 0, mlevels = 1;
        std::string z, w, tau, path = "theta";
    } fock_opts;

    auto *fock_psi = fock_cmd->add_subcommand("psi", "Evaluate the orthonormal basis function psi_n");
    fock_psi->add_option("--nu", fock_opts.nu)->required();
    fock_psi->add_option("--alpha", fock_opts.alpha)->required();
    fock_psi->add_option("--n", fock_opts.n)->required();
    fock_psi->add_option("--z", fock_opts.z)->required();
    add_format(fock_psi, common);
    fock_psi->callback([&] {
        action = [&] {
            return complex_output(basis_psi(fock_opts.n, complex_arg(fock_opts.z), SpaceParams(fock_opts.nu, fock_opts.alpha)));
        };
    });

    auto *fock_gram = fock_cmd->add_subcommand("gram", "Gram matrix of psi_{m,n} by strip quadrature");
    fock_gram->add_option("--nu", fock_opts.nu)->required();
    fock_gram->add_option("--alpha", fock_opts.alpha)->required();
    fock_gram->add_option("--nmin", fock_opts.nmin)->required();
    fock_gram->add_option("--nmax", fock_opts.nmax)->required();
    fock_gram->add_option("--mlevels", fock_opts.mlevels, "Number of Landau levels (1 = holomorphic basis only)");
    add_format(fock_gram, common);
    fock_gram->callback([&] {
        action = [&] {
            return gram_output(SpaceParams(fock_opts.nu, fock_opts.alpha), fock_opts.nmin, fock_opts.nmax,
                               fock_opts.mlevels);
        };
    });

    auto *fock_kernel = fock_cmd->add_subcommand("kernel", "Reproducing kernel K(z, w)");
    fock_kernel->add_option("--nu", fock_opts.nu)->required();
    fock_kernel->add_option("--alpha", fock_opts.alpha)->required();
    fock_kernel->add_option("--z", fock_opts.z)->required();
    fock_kernel->add_option("--w", fock_opts.w)->required();
    fock_kernel->add_option("--path", fock_opts.path)->check(CLI::IsMember({"theta", "sum"}));
    add_format(fock_kernel, common);
    fock_kernel->callback([&] {
        action = [&] {
            const KernelPath path = fock_opts.path == "sum" ? KernelPath::sum : KernelPath::theta;
            return complex_output(reproducing_kernel(complex_arg(fock_opts.z), complex_arg(fock_opts.w),
                                                     SpaceParams(fock_opts.nu, fock_opts.alpha), {}, path));
        };
    });

    auto *fock_member = fock_cmd->add_subcommand("member", "Membership of exp(nu z^2/2) theta_{alpha,beta}(z|tau)");
    fock_member->add_option("--nu", fock_opts.nu)->required();
    fock_member->add_option("--alpha", fock_opts.alpha)->required();
    fock_member->add_option("--beta", fock_opts.beta)->required();
    fock_member->add_option("--tau", fock_opts.tau)->required();
    add_format(fock_member, common);
    fock_member->callback([&] {
        action = [&] {
            return membership_output(ThetaArgs(fock_opts.alpha, fock_opts.beta, complex_arg(fock_opts.tau)),
                                     SpaceParams(fock_opts.nu, fock_opts.alpha));
        };
    });

    // bargmann ------------------------------------------------------------
    auto *barg_cmd = app.add_subcommand("bargmann", "Bargmann transform")->require_subcommand(1);
    struct
    {
        std::string in, out, z;
        double nu = pi, q = 0;
    } barg_opts;

    auto *barg_fwd = barg_cmd->add_subcommand("forward", "Transform a line element into the holomorphic space");
    barg_fwd->add_option("--in", barg_opts.in, "Line element JSON")->required();
    auto *z_opt = barg_fwd->add_option("--z", barg_opts.z, "Evaluate the transform at z");
    auto *out_opt = barg_fwd->add_option("--out", barg_opts.out, "Write the transformed element to FILE");
    z_opt->excludes(out_opt);
    barg_fwd->add_option("--nu", barg_opts.nu, "Weight of the target space (default pi)");
    add_format(barg_fwd, common);
    barg_fwd->callback([&] {
        action = [&]() -> Output {
            const LineElement line = line_from_json(read_json_file(barg_opts.in));
            const FockElement image = bargmann_transform_coeffs(line, barg_opts.nu);
            if (!barg_opts.z.empty()) {
                return complex_output(evaluate(image, complex_arg(barg_opts.z)));
            }
            if (!barg_opts.out.empty()) {
                write_json_file(barg_opts.out, to_json(image));
            }
            return element_output(to_json(image));
        };
    });

    auto *barg_inv = barg_cmd->add_subcommand("inverse", "Inverse transform <f, G(., q)> by strip quadrature");
    barg_inv->add_option("--in", barg_opts.in, "Fock element JSON")->required();
    barg_inv->add_option("--q", barg_opts.q)->required();
    add_format(barg_inv, common);
    barg_inv->callback([&] {
        action = [&] {
            const FockElement elem = fock_from_json(read_json_file(barg_opts.in));
            return complex_output(bargmann_inverse(elem, barg_opts.q));
        };
    });

    // landau --------------------------------------------------------------
    auto *landau_cmd = app.add_subcommand("landau", "Landau levels of the full L^2 space")->require_subcommand(1);
    struct
    {
        std::string in, out, z;
        double nu = 0, alpha = 0;
        int m = 0, n = 0;
    } landau_opts;

    auto *landau_apply_cmd = landau_cmd->add_subcommand("apply", "Apply the Landau operator at z");
    landau_apply_cmd->add_option("--in", landau_opts.in, "Landau element JSON")->required();
    landau_apply_cmd->add_option("--z", landau_opts.z)->required();
    add_format(landau_apply_cmd, common);
    landau_apply_cmd->callback([&] {
        action = [&]() -> Output {
            const LandauElement elem = landau_from_json(read_json_file(landau_opts.in));
            const Complex z = complex_arg(landau_opts.z);
            const Complex exact = landau_apply_exact(elem, z);
            const Complex numeric = landau_apply([&](Complex w) { return evaluate(elem, w); }, z, elem.params());
            json payload{{"exact", complex_to_json(exact)}, {"finite_difference", complex_to_json(numeric)}};
            std::string csv = "exact_re,exact_im,finite_difference_re,finite_difference_im\n" + fmt(exact.real()) +
                              "," + fmt(exact.imag()) + "," + fmt(numeric.real()) + "," + fmt(numeric.imag()) + "\n";
            return {payload, csv};
        };
    });

    for (const char *name : {"raise", "lower"}) {
        const bool up = std::string(name) == "raise";
        auto *cmd = landau_cmd->add_subcommand(name, up ? "Normalized creation step on coefficients"
                                                        : "Normalized annihilation step on coefficients");
        cmd->add_option("--in", landau_opts.in, "Landau element JSON")->required();
        cmd->add_option("--out", landau_opts.out, "Output file")->required();
        add_format(cmd, common);
        cmd->callback([&, up] {
            action = [&, up] {
                const LandauElement elem = landau_from_json(read_json_file(landau_opts.in));
                const json result = to_json(up ? raise(elem) : lower(elem));
                write_json_file(landau_opts.out, result);
                return element_output(result);
            };
        });
    }

    auto *landau_eigres = landau_cmd->add_subcommand("eigres", "Finite-difference eigen-residual of psi_{m,n}");
    landau_eigres->add_option("--nu", landau_opts.nu)->required();
    landau_eigres->add_option("--alpha", landau_opts.alpha)->required();
    landau_eigres->add_option("--m", landau_opts.m)->required();
    landau_eigres->add_option("--n", landau_opts.n)->required();
    add_format(landau_eigres, common);
    landau_eigres->callback([&] {
        action = [&]() -> Output {
            const SpaceParams p(landau_opts.nu, landau_opts.alpha);
            const double r = eigen_residual(landau_opts.m, landau_opts.n, p, eigres_samples());
            const double lambda = p.nu() * landau_opts.m;
            json payload{{"m", landau_opts.m}, {"n", landau_opts.n}, {"eigenvalue", lambda}, {"residual", r}};
            return {payload, "m,n,eigenvalue,residual\n" + std::to_string(landau_opts.m) + "," +
                                 std::to_string(landau_opts.n) + "," + fmt(lambda) + "," + fmt(r) + "\n"};
        };
    });

    // verify --------------------------------------------------------------
    auto *verify_cmd = app.add_subcommand("verify", "Acceptance verification")->require_subcommand(1);
    std::optional<double> verify_tol;
    auto *verify_all = verify_cmd->add_subcommand("all", "Run every acceptance criterion");
    verify_all->add_option("--tol", verify_tol, "Cap applied to every stated tolerance")
        ->check(CLI::PositiveNumber);
    add_format(verify_all, common);
    verify_all->callback([&] { action = [&] { return report_output(verify_suite(verify_tol)); }; });

    CommandResult result;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        result.out = app.help();
        return result;
    } catch (const CLI::CallForAllHelp &) {
        result.out = app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError &e) {
        result.exit_code = exit_code::usage;
        result.err = std::string("usage error: ") + e.what() + "\n";
        return result;
    }

    try {
        const Output output = action();
        result.exit_code = output.exit_code;
        result.out = common.format == "csv" ? output.csv : output.payload.dump(2) + "\n";
    } catch (const InputError &e) {
        result.exit_code = exit_code::usage;
        result.err = std::string("input error: ") + e.what() + "\n";
    } catch (const Error &e) {
        result.exit_code = exit_code::domain;
        result.err = std::string("error: ") + e.what() + "\n";
    }
    return result;
}

} // namespace qptheta
