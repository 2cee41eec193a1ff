#include "doctest.h"

#include <cstdlib>
#include <set>

#include "json.hpp"
#include "xoplab/io.hpp"
#include "xoplab/verify.hpp"

using namespace xoplab;

namespace {

RunConfig small_config() {
    RunConfig cfg = RunConfig::defaults();
    cfg.m_max = 1;
    cfg.n_max = 5;
    cfg.perm_trials = 3;
    return cfg;
}

}  // namespace

TEST_CASE("small verification run passes everywhere") {
    VerificationReport report = run_verification(small_config());
    Totals t = report.totals();
    CHECK(t.fail == 0);
    CHECK(t.refused == 0);
    CHECK(t.count() > 50);
    CHECK(report.all_passed());
}

TEST_CASE("minimal smoke configuration still passes") {
    RunConfig cfg = RunConfig::defaults();
    cfg.m_max = 1;
    cfg.n_max = 1;
    cfg.perm_trials = 2;
    VerificationReport report = run_verification(cfg);
    CHECK(report.all_passed());
    CHECK(report.totals().fail == 0);
}

TEST_CASE("config validation") {
    RunConfig cfg = small_config();
    cfg.n_max = 31;
    CHECK_THROWS_AS(run_verification(cfg), std::invalid_argument);
    cfg = small_config();
    cfg.agree_tol = -1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.format = "yaml";
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("json report is deterministic and schema-complete") {
    RunConfig cfg = small_config();
    VerificationReport a = run_verification(cfg);
    VerificationReport b = run_verification(cfg);
    std::string ja = report_to_json(a, cfg);
    std::string jb = report_to_json(b, cfg);
    CHECK(ja == jb);

    auto parsed = nlohmann::json::parse(ja);
    CHECK(parsed.contains("suite"));
    CHECK(parsed.contains("config"));
    CHECK(parsed.contains("cases"));
    CHECK(parsed.contains("totals"));
    CHECK(parsed["cases"].size() == a.cases.size());
    int pass = 0, fail = 0, skipped = 0, refused = 0;
    for (const auto& c : parsed["cases"]) {
        std::string status = c["status"];
        if (status == "PASS") ++pass;
        else if (status == "FAIL") ++fail;
        else if (status == "SKIPPED") ++skipped;
        else if (status == "REFUSED") ++refused;
    }
    Totals t = a.totals();
    CHECK(pass == t.pass);
    CHECK(fail == t.fail);
    CHECK(skipped == t.skipped);
    CHECK(refused == t.refused);
    CHECK(parsed["totals"]["count"] == t.count());
}

TEST_CASE("parallel execution does not reorder the report") {
    RunConfig serial = small_config();
    RunConfig parallel = small_config();
    parallel.jobs = 4;
    std::string a = report_to_json(run_verification(serial), serial);
    std::string b = report_to_json(run_verification(parallel), serial);
    CHECK(a == b);
}

TEST_CASE("each grid case appears exactly once") {
    VerificationReport report = run_verification(small_config());
    std::set<std::string> keys;
    for (const auto& c : report.cases) {
        std::string key = c.suite + "|" + c.id + "|" + c.check;
        CHECK(keys.insert(key).second);
    }
}

TEST_CASE("exact checks report exact-zero residuals") {
    VerificationReport report;
    RunConfig cfg = small_config();
    suite_path_agreement(cfg, report);
    suite_ode_relations(cfg, report);
    CHECK(!report.cases.empty());
    for (const auto& c : report.cases) {
        CHECK(c.status == CaseStatus::Pass);
        CHECK(c.residual == "exact-zero");
    }
}

TEST_CASE("negative control: corrupted prefactor is caught") {
    RunConfig cfg = small_config();
    cfg.corrupt_lag1_prefactor = 1.01;
    VerificationReport report;
    suite_determinantal_agreement(cfg, report);
    bool lag1_failed = false;
    for (const auto& c : report.cases)
        if (c.status == CaseStatus::Fail && c.id.find("lag1") != std::string::npos) {
            lag1_failed = true;
            CHECK(c.detail.find("leading-coefficient mismatch") != std::string::npos);
        }
    CHECK(lag1_failed);
}

TEST_CASE("constant resolution suite documents the resolved grouping") {
    RunConfig cfg = RunConfig::defaults();
    cfg.m_max = 2;
    cfg.n_max = 8;
    VerificationReport report;
    suite_lag2_constant_resolution(cfg, report);
    bool documented = false, rejected = false;
    for (const auto& c : report.cases) {
        CHECK(c.status == CaseStatus::Pass);
        if (c.detail.find("(-1)^(n+1) (alpha+n+1-2m) / (m! (n-m)!)") != std::string::npos)
            documented = true;
        if (c.check == "difference_reading_rejected") rejected = true;
    }
    CHECK(documented);
    CHECK(rejected);
}

TEST_CASE("csv output quotes and round-trips rationals") {
    RunConfig cfg = small_config();
    VerificationReport report;
    suite_classical_identities(cfg, report);
    std::string csv = report_to_csv(report, cfg);
    CHECK(csv.find("suite,id,check,status,residual,tolerance") == 0);
    // Partition ids carry commas and must be quoted.
    CHECK(csv.find("\"lambda=(1,1)\"") != std::string::npos);
}

TEST_CASE("serialization round trips") {
    // Rationals survive the wire exactly.
    for (const char* s : {"-35/6", "22/7", "0/1", "123456789123456789/2"}) {
        Rational r = parse_rational(s);
        CHECK(parse_rational(r.to_fraction_string()) == r);
    }
    CHECK(parse_rational("1.5") == Rational(3, 2));
    CHECK(parse_rational("-0.25") == Rational(-1, 4));
    // Doubles print at shortest round-trip length.
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-11}) {
        CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
    }
    CHECK(parse_complex("2,-3").imag() == doctest::Approx(-3.0));
    CHECK(parse_complex("1/2").real() == doctest::Approx(0.5));
}

TEST_CASE("grid spec enumeration respects family constraints") {
    RunConfig cfg = RunConfig::defaults();
    cfg.m_max = 3;
    cfg.n_max = 12;
    for (auto family : {XopFamily::LagI, XopFamily::LagII, XopFamily::LagIII,
                        XopFamily::Jacobi, XopFamily::Hermite11, XopFamily::HermiteGeneral})
        for (const auto& s : grid_specs(family, cfg)) CHECK(validate(s) == std::nullopt);
}
