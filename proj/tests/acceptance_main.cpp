// Acceptance suite: re-runs every verification criterion at the pinned
// tolerances and enforces the runtime budgets.  One line per check.

#include <cstdio>

#include "orbitacc/verify.hpp"

int main() {
    const orbitacc::verify::VerifyReport report = orbitacc::verify::run_verification();
    for (const auto& r : report.checks) {
        const char* rel = r.cmp == orbitacc::verify::Cmp::less_than ? "<" : "+-";
        std::printf("%-4s %-28s observed=%-14.6g expected=%.6g %s %.3g\n",
                    r.pass ? "PASS" : "FAIL", r.name.c_str(), r.observed, r.expected,
                    rel, r.cmp == orbitacc::verify::Cmp::less_than ? 0.0 : r.tolerance);
    }
    for (const auto& t : report.timings) {
        std::printf("%-4s %-28s %.3f s (budget %.0f s)\n", t.pass ? "PASS" : "FAIL",
                    t.name.c_str(), t.seconds, t.budget);
    }
    std::printf("%s\n", report.overall() ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL");
    return report.overall() ? 0 : 1;
}
