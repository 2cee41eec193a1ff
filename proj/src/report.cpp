#include "xoplab/report.hpp"

namespace xoplab {

const char* to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "PASS";
        case CaseStatus::Fail: return "FAIL";
        case CaseStatus::Skipped: return "SKIPPED";
        case CaseStatus::Refused: return "REFUSED";
    }
    return "?";
}

Totals VerificationReport::totals() const {
    Totals t;
    for (const auto& c : cases) {
        switch (c.status) {
            case CaseStatus::Pass: ++t.pass; break;
            case CaseStatus::Fail: ++t.fail; break;
            case CaseStatus::Skipped: ++t.skipped; break;
            case CaseStatus::Refused: ++t.refused; break;
        }
    }
    return t;
}

bool VerificationReport::all_passed() const { return totals().fail == 0; }

}  // namespace xoplab
