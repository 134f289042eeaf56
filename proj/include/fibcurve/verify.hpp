#pragma once

// Self-checks over every module, used by `fibcurve verify`.

#include <string>
#include <vector>

namespace fibcurve {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

// Depth-limited checks; the expensive ones cap their own level below max_depth.
std::vector<CheckResult> run_verification(int max_depth);

}  // namespace fibcurve
