#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ordpath/certificate.hpp"
#include "ordpath/constructions.hpp"
#include "ordpath/copies.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/rational.hpp"

namespace ordpath {

/// Nonnegative rational weight per copy of the pattern in K^(r)_n
/// (a fractional packing when every edge load is at most 1).
struct CopyWeighting {
    int n = 0;
    PatternSpec spec{PatternKind::NaturalPath, 0, 0};
    std::vector<std::vector<int>> copies; // ascending s-tuples
    std::vector<Rat> w;

    Rat total() const;
};

enum class LPStatus { Optimal, OptimalNoCopies };

/// Optimal value with mutually certifying primal (fractional transversal) and
/// dual (fractional packing) solutions; value = tau* = nu* exactly.
struct LPOutcome {
    LPStatus status = LPStatus::Optimal;
    Rat value;
    EdgeWeighting primal;
    CopyWeighting dual;
    std::uint64_t copy_count = 0;
    std::uint64_t pivots = 0;
};

struct LPLimits {
    std::uint64_t max_copies = kDefaultCopyCap;
};

/// Low-level exact packing LP: max 1'y subject to per-edge load <= 1, y >= 0,
/// for copies given as sorted edge-rank lists over a colex universe. Returns
/// the optimum with the per-copy solution and the per-edge duals (the
/// fractional transversal of the same instance). Used by solve_fractional and
/// as a residual bound inside the oracle searches.
struct PackingLP {
    Rat value;
    std::vector<Rat> copy_weight;
    std::vector<Rat> edge_dual;
    std::uint64_t pivots = 0;
};

PackingLP packing_lp(std::uint64_t universe, const std::vector<std::vector<std::uint32_t>>& copy_edges);

/// Solves the fractional transversal/packing LP exactly. The simplex result is
/// re-verified from scratch (primal feasible, dual feasible, objectives equal)
/// before being returned; failure of that audit throws std::logic_error.
LPOutcome solve_fractional(int n, const PatternSpec& pattern, const LPLimits& limits = {});

/// Exhaustive primal feasibility: every copy receives total weight >= 1.
Certificate verify_feasible(const EdgeWeighting& w, int n, const PatternSpec& pattern);

/// Exhaustive dual feasibility: every edge load is <= 1 and weights >= 0.
Certificate verify_feasible(const CopyWeighting& w);

/// Writes the covering LP in CPLEX LP text format for external cross-checking.
void export_lp(std::ostream& os, int n, const PatternSpec& pattern,
               const LPLimits& limits = {});

} // namespace ordpath
