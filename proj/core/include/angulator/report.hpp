#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace angulator {

// Outcome of one theorem-shaped exhaustive check.  counterexample is a list
// of key/value strings describing the first failing instance in scan order;
// it is empty exactly when the check passed.
struct CheckReport {
    std::string theorem;
    std::uint64_t instances_checked = 0;
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> counterexample;
};

} // namespace angulator
