// Acceptance battery: runs each verification criterion at full (desk) scale
// and prints one pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>

#include "wgcalc/verify.hpp"

int main() {
    auto start = std::chrono::steady_clock::now();
    std::vector<wgcalc::CriterionResult> results =
        wgcalc::run_verification(wgcalc::VerifyLevel::desk);
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%s  criterion %2d: %s%s%s\n", r.passed ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.empty() ? "" : " — ", r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
        std::chrono::steady_clock::now() - start);
    std::printf("%s (%zu criteria, %lds)\n", all_passed ? "ALL PASS" : "FAILURES PRESENT",
                results.size(), static_cast<long>(elapsed.count()));
    return all_passed ? 0 : 1;
}
