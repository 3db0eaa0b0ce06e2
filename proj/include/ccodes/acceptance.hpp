#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccodes {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;  // one-line summary of the measured values
};

// Runs the full acceptance battery, streaming one PASS/FAIL line per
// criterion to `out` as results arrive.  Returns all results.
std::vector<CriterionResult> run_acceptance(std::ostream& out);

}  // namespace ccodes
