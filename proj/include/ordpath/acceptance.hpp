#pragma once

#include <string>
#include <vector>

namespace ordpath {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

int criterion_count();
CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all_criteria();

} // namespace ordpath
