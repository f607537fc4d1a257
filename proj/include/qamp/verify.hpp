#pragma once

#include <string>
#include <vector>

namespace qamp {

struct VerifySuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every built-in invariant suite (gate identities, comparator closed
// form, bisection error bound, reduced/full pipeline equivalence,
// separability round trips, projection partition, shot-sampling checks).
// Deterministic: all randomness is drawn from fixed seeds.
std::vector<VerifySuiteResult> run_verification();

} // namespace qamp
