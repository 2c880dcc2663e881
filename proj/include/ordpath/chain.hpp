#pragma once

#include "ordpath/lp.hpp"
#include "ordpath/oracle.hpp"

namespace ordpath {

/// The four quantities nu <= nu* = tau* <= tau with exact comparisons.
struct DualityChain {
    int n = 0;
    PatternSpec pattern{PatternKind::NaturalPath, 0, 0};
    ExactResult nu;
    ExactResult tau;
    Rat lp_value; // nu* = tau*
    bool chain_holds = false;
    Rat integrality_gap; // tau - tau*, measured only
};

DualityChain duality_chain(int n, const PatternSpec& pattern, const SearchBudget& budget = {});

} // namespace ordpath
