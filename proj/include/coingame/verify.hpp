#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace coingame {

struct CheckResult {
        std::string suite;
        std::string name;
        bool passed = false;
        std::string detail; // first counterexample, exact, when failed
};

/// Known suite names: identities, theorems, tables, oracle, perturbation, limits, all.
std::vector<std::string_view> verify_suite_names();

/// Runs one named suite. Throws std::invalid_argument for an unknown name.
std::vector<CheckResult> run_verify_suite(std::string_view suite);

} // namespace coingame
