#pragma once

#include <string>
#include <vector>

namespace xoplab {

enum class CaseStatus { Pass, Fail, Skipped, Refused };

const char* to_string(CaseStatus s);

// One verification case: which check ran on which inputs, and how it ended.
// `residual` is the literal string "exact-zero" for rational-arithmetic
// checks, otherwise a decimal float; `detail` carries extra context on
// failures (offending polynomial, first failing index, ...).
struct CaseResult {
    std::string suite;
    std::string id;
    std::string check;
    CaseStatus status = CaseStatus::Pass;
    std::string residual = "exact-zero";
    double tolerance = 0.0;
    double wall_ms = 0.0;
    std::string detail;
};

struct Totals {
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int refused = 0;
    int count() const { return pass + fail + skipped + refused; }
};

struct VerificationReport {
    std::string suite;
    std::vector<CaseResult> cases;

    Totals totals() const;
    bool all_passed() const;
    void add(CaseResult c) { cases.push_back(std::move(c)); }
};

}  // namespace xoplab
