#pragma once

#include <string>
#include <vector>

namespace catphase::validation {

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // observed worst-case figure
};

/// Runs the library's invariant suite on a fixed set of states and reports
/// one result per check. tol bounds the quadrature-backed checks.
std::vector<CheckResult> run_all(double tol = 1e-8);

}  // namespace catphase::validation
