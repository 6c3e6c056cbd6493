#ifndef TREELATTICE_ACCEPTANCE_HPP
#define TREELATTICE_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "treelattice/counter.hpp"

namespace treelattice {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 when the criterion has none
};

struct AcceptanceOptions {
    std::uint64_t budget = default_budget;
    Execution exec = Execution::parallel;
};

/// Runs the eleven acceptance checks on the built-in fixtures.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

/// "PASS  3 oracle-equivalence  12.3s  <detail>"
std::string format_result(const CriterionResult& r);

}  // namespace treelattice

#endif  // TREELATTICE_ACCEPTANCE_HPP
