#pragma once

#include <string>
#include <vector>

namespace tropcomm {

// Curated worked examples with frozen known-good results.  Every check
// recomputes one published-style reference value from scratch and compares
// exactly; the CLI exposes the table via the paper-suite subcommand.
struct SuiteCheck {
    std::string name;
    bool pass = false;
    std::string detail; // empty on pass
};

std::vector<SuiteCheck> run_reference_suite();

} // namespace tropcomm
