// Acceptance suite: runs every criterion and prints one pass/fail line each.

#include <cstdlib>
#include <iostream>
#include <string>

#include "ordpath/acceptance.hpp"

int main(int argc, char** argv) {
    using namespace ordpath;
    bool all_ok = true;
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    for (int id = 1; id <= criterion_count(); ++id) {
        if (only != 0 && id != only) continue;
        const CriterionResult r = run_criterion(id);
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                  << " (" << r.detail << ", " << r.seconds << "s)" << std::endl;
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}
