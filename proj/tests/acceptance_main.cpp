// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>

#include "ccr/battery.hpp"

int main() {
    const auto results = ccr::run_battery(1);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::printf("%-36s %s  observed=%.3e  tol=%.3e  %.2fs  (%s)\n", r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.observed, r.tolerance, r.seconds,
                    r.detail.c_str());
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED");
    return all ? 0 : 1;
}
