#pragma once

#include <string>
#include <vector>

namespace wgcalc {

enum class VerifyLevel { smoke, desk, deep };

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanation or brief stats
};

/// Runs the verification battery. smoke is a fast subset, desk is the full
/// battery, deep adds the d = 3 alternation targets and a longer table scan.
std::vector<CriterionResult> run_verification(VerifyLevel level);

VerifyLevel parse_verify_level(const std::string& s);

}  // namespace wgcalc
