// Acceptance suite: one line per criterion, exit 0 iff everything holds.
#include <chrono>
#include <cstdio>
#include <functional>

#include "xoplab/verify.hpp"

using namespace xoplab;

namespace {

int failures = 0;

struct SuiteOutcome {
    VerificationReport report;
    double seconds = 0.0;
};

SuiteOutcome timed(const std::function<void(VerificationReport&)>& run) {
    SuiteOutcome outcome;
    outcome.report.suite = "acceptance";
    auto t0 = std::chrono::steady_clock::now();
    run(outcome.report);
    outcome.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return outcome;
}

void line(int criterion, const char* name, bool pass, const SuiteOutcome& outcome,
          double budget_seconds, const std::string& extra = "") {
    Totals t = outcome.report.totals();
    bool timely = outcome.seconds < budget_seconds;
    bool ok = pass && timely;
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s  (%d cases: %d pass, %d fail, %d skipped, %d refused; %.2fs / %.0fs budget)%s%s\n",
                ok ? "PASS" : "FAIL", criterion, name, t.count(), t.pass, t.fail,
                t.skipped, t.refused, outcome.seconds, budget_seconds,
                extra.empty() ? "" : "  ", extra.c_str());
    if (!timely) std::printf("       runtime budget exceeded\n");
    for (const auto& c : outcome.report.cases)
        if (c.status == CaseStatus::Fail || c.status == CaseStatus::Refused)
            std::printf("       %s  %s  %s  residual=%s  %s\n", to_string(c.status),
                        c.check.c_str(), c.id.c_str(), c.residual.c_str(),
                        c.detail.c_str());
}

bool clean(const VerificationReport& r) {
    Totals t = r.totals();
    return t.fail == 0 && t.refused == 0;
}

}  // namespace

int main() {
    RunConfig cfg = RunConfig::defaults();
    cfg.m_max = 3;
    cfg.n_max = 12;

    // 1. Exact classical identity suite, n <= 10 over the stated
    //    alpha/beta grid, all residuals identically zero.
    {
        auto outcome = timed([&](VerificationReport& r) {
            RunConfig c = cfg;
            c.n_max = 10;
            suite_classical_identities(c, r);
        });
        bool exact = clean(outcome.report);
        for (const auto& c : outcome.report.cases) exact = exact && c.residual == "exact-zero";
        line(1, "classical identities exact over the grid", exact, outcome, 5.0);
    }

    // 2. Exact first-order relation suite, m <= 3, n <= 12.
    {
        auto outcome =
            timed([&](VerificationReport& r) { suite_ode_relations(cfg, r); });
        bool exact = clean(outcome.report);
        for (const auto& c : outcome.report.cases) exact = exact && c.residual == "exact-zero";
        line(2, "first-order relations exactly zero", exact, outcome, 10.0);
    }

    // 3. Exact path agreement: product/integral/wronskian/closed-form routes
    //    return identical rational coefficients.
    {
        auto outcome =
            timed([&](VerificationReport& r) { suite_path_agreement(cfg, r); });
        bool exact = clean(outcome.report);
        for (const auto& c : outcome.report.cases) exact = exact && c.residual == "exact-zero";
        line(3, "evaluation paths agree exactly", exact, outcome, 10.0);
    }

    // 4. Determinantal agreement: 1e-8 to n = 12, 1e-10 to n = 6, and the
    //    fully worked degree-3 Hermite value at 1e-12.
    {
        auto outcome = timed(
            [&](VerificationReport& r) { suite_determinantal_agreement(cfg, r); });
        line(4, "determinantal route matches the exact route", clean(outcome.report),
             outcome, 30.0);
    }

    // 5. Leading-coefficient law, all five determinantal families,
    //    m <= 3, n <= 10, 1e-9 relative.
    {
        auto outcome = timed(
            [&](VerificationReport& r) { suite_leading_coefficient_law(cfg, r); });
        line(5, "top determinant coefficient obeys the Vandermonde law",
             clean(outcome.report), outcome, 30.0);
    }

    // 6. Zero-location checks plus even partitions up to weight 8.
    {
        auto outcome =
            timed([&](VerificationReport& r) { suite_zero_theorems(cfg, r); });
        line(6, "zero-location properties hold on the grid", clean(outcome.report),
             outcome, 30.0);
    }

    // 7. Permutation invariance, 20 random node orders per spec, 1e-10.
    {
        auto outcome = timed(
            [&](VerificationReport& r) { suite_permutation_invariance(cfg, r); });
        line(7, "determinants invariant under node permutations", clean(outcome.report),
             outcome, 60.0);
    }

    // 8. The type-II constant: one symbolic form fits the whole grid at
    //    1e-9 and is recorded in the report.
    {
        auto outcome = timed(
            [&](VerificationReport& r) { suite_lag2_constant_resolution(cfg, r); });
        bool documented = false;
        for (const auto& c : outcome.report.cases)
            if (c.detail.find("(-1)^(n+1) (alpha+n+1-2m) / (m! (n-m)!)") != std::string::npos)
                documented = true;
        line(8, "type-II determinantal constant resolved and documented",
             clean(outcome.report) && documented, outcome, 30.0,
             "constant = (-1)^(n+1) (alpha+n+1-2m) / (m! (n-m)!)");
    }

    std::printf("%s\n", failures == 0 ? "ACCEPTANCE: all criteria pass"
                                      : "ACCEPTANCE: criteria failed");
    return failures == 0 ? 0 : 1;
}
