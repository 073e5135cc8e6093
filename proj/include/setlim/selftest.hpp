#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace setlim {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// The module property suites: norm/pairing inequalities, hull and Hausdorff
/// lemmas, embedding properties, e-set closed forms against brute force,
/// generator invariants, sum additivity, and the infratype inequalities.
std::vector<CheckResult> run_property_suite(std::uint64_t seed);

}  // namespace setlim
