#pragma once

#include <string>
#include <vector>

namespace ccr {

// One verification battery backs both the standalone acceptance runner and
// the CLI `suite` subcommand.  Tolerances and instance counts are fixed
// constants here, not configuration.
struct CriterionResult {
    std::string name;
    bool passed;
    double observed;   // worst observed error / defect for the criterion
    double tolerance;  // bound the observation was tested against
    double seconds;
    std::string detail;
};

std::vector<CriterionResult> run_battery(unsigned long seed = 1);

}  // namespace ccr
