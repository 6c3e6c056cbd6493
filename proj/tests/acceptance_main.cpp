#include <cstdio>

#include "treelattice/acceptance.hpp"

int main() {
    int failures = 0;
    for (const auto& r : treelattice::run_acceptance()) {
        std::printf("%s\n", treelattice::format_result(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
