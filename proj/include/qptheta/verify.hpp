#ifndef QPTHETA_VERIFY_HPP
#define QPTHETA_VERIFY_HPP

#include <json.hpp>

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace qptheta
{

struct VerifyCase
{
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    /// pass = |expected - actual| <= tolerance.
    static VerifyCase make(std::string name, double expected, double actual, double tolerance);
};

struct VerifyReport
{
    std::string suite;
    std::vector<VerifyCase> cases;
    double wall_time = 0.0; // seconds; not part of the deterministic payload

    bool all_passed() const;
};

struct VerifyOptions
{
    /// Caps every stated tolerance: a case passes only within min(stated, tol_cap).
    double tol_cap = std::numeric_limits<double>::infinity();
};

struct Criterion
{
    std::string id;
    std::string title;
    std::vector<VerifyCase> (*run)(const VerifyOptions &);
};

/// One entry per acceptance criterion, in order.
const std::vector<Criterion> &acceptance_criteria();

/// Runs every criterion. Failures are recorded in the report, not thrown.
VerifyReport verify_suite(std::optional<double> tol = std::nullopt);

nlohmann::json to_json(const VerifyReport &report);
VerifyReport report_from_json(const nlohmann::json &j);

} // namespace qptheta

#endif
