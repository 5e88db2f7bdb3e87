#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qptheta/io.hpp"
#include "qptheta/verify.hpp"

#include <cmath>

using namespace qptheta;

namespace
{
const VerifyCase &find(const VerifyReport &r, const std::string &prefix)
{
    for (const auto &c : r.cases) {
        if (c.name.rfind(prefix, 0) == 0) {
            return c;
        }
    }
    throw std::runtime_error("no case " + prefix);
}
} // namespace

TEST_CASE("case construction")
{
    CHECK(VerifyCase::make("a", 0, 1e-9, 1e-8).pass);
    CHECK_FALSE(VerifyCase::make("a", 0, 1e-7, 1e-8).pass);
    CHECK(VerifyCase::make("a", 3, 3, 0).pass);
    CHECK_FALSE(VerifyCase::make("a", 0, std::nan(""), 1.0).pass);
}

TEST_CASE("criteria are listed in order")
{
    const auto &crit = acceptance_criteria();
    REQUIRE(crit.size() == 14);
    for (std::size_t k = 0; k < crit.size(); ++k) {
        char id[8];
        std::snprintf(id, sizeof id, "C%02zu", k + 1);
        CHECK(crit[k].id == id);
    }
}

TEST_CASE("default run passes, strict run fails only where it should")
{
    const VerifyReport report = verify_suite();
    CHECK(report.all_passed());
    for (const auto &c : report.cases) {
        CAPTURE(c.name);
        CHECK(c.pass == (std::abs(c.expected - c.actual) <= c.tolerance));
    }

    // Quadrature-backed cases cannot reach 1e-15; exact decisions and bounds still pass.
    const VerifyReport strict = verify_suite(1e-15);
    CHECK_FALSE(strict.all_passed());
    CHECK_FALSE(find(strict, "C01").pass);
    CHECK_FALSE(find(strict, "C02").pass);
    CHECK_FALSE(find(strict, "C05").pass);
    CHECK_FALSE(find(strict, "C10").pass);
    CHECK(find(strict, "C06").pass);
    CHECK(find(strict, "C07 membership decisions").pass);
    CHECK(find(strict, "C07 divergence").pass);

    CHECK_THROWS_AS(verify_suite(0.0), DomainError);
    CHECK_THROWS_AS(verify_suite(-1.0), DomainError);
}

TEST_CASE("report json round trip")
{
    VerifyReport r;
    r.suite = "sample";
    r.wall_time = 1.25;
    r.cases = {VerifyCase::make("x", 0, 1e-9, 1e-8), VerifyCase::make("y", 0, std::nan(""), 1e-8)};
    const VerifyReport back = report_from_json(to_json(r));
    CHECK(back.suite == r.suite);
    CHECK(back.wall_time == r.wall_time);
    REQUIRE(back.cases.size() == 2);
    CHECK(back.cases[0].name == "x");
    CHECK(back.cases[0].actual == r.cases[0].actual);
    CHECK(back.cases[0].pass);
    CHECK(std::isnan(back.cases[1].actual));
    CHECK_FALSE(back.cases[1].pass);
    CHECK(to_json(back) == to_json(r));
    CHECK_THROWS_AS(report_from_json(nlohmann::json::object()), InputError);
}
