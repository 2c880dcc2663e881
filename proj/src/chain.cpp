#include "ordpath/chain.hpp"

namespace ordpath {

DualityChain duality_chain(int n, const PatternSpec& pattern, const SearchBudget& budget) {
    DualityChain chain;
    chain.n = n;
    chain.pattern = pattern;
    const LPOutcome lp = solve_fractional(n, pattern);
    chain.lp_value = lp.value;
    chain.nu = exact_nu(n, pattern, budget);
    chain.tau = exact_tau(n, pattern, budget);
    chain.chain_holds = chain.nu.optimal && chain.tau.optimal &&
                        Rat(static_cast<unsigned long>(chain.nu.value)) <= lp.value &&
                        lp.value <= Rat(static_cast<unsigned long>(chain.tau.value));
    chain.integrality_gap = Rat(static_cast<unsigned long>(chain.tau.value)) - lp.value;
    return chain;
}

} // namespace ordpath
