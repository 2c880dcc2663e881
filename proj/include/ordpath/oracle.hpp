#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordpath/certificate.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/patterns.hpp"

namespace ordpath {

/// Limits for the exact searches. Exceeding a limit aborts with a partial
/// bound, never a silent wrong answer.
struct SearchBudget {
    std::uint64_t node_limit = 100'000'000;
    double time_limit_seconds = 60.0;
    bool symmetry_reduction = true; // reversal-inversion map, f-search value pass only
};

enum class Quantity { Tau, Nu, Ex, F, MonotoneF };

/// Result of an exact search. When optimal, the witness attains the value and
/// re-verifies against the definition; otherwise lower/upper bracket it.
struct ExactResult {
    Quantity quantity = Quantity::Tau;
    int n = 0;
    std::optional<PatternSpec> pattern; // tau/nu/ex
    int k = 0;                          // f variants
    std::uint64_t value = 0;
    bool optimal = false;
    std::uint64_t lower_bound = 0;
    std::uint64_t upper_bound = 0;
    std::uint64_t nodes = 0;

    std::vector<Edge> witness_edges;              // tau: hitting set; ex: pattern-free graph
    std::vector<std::vector<int>> witness_copies; // nu: packed copy vertex tuples
    std::optional<Labeling> witness_labeling;     // f variants
};

/// Minimum number of edges of K^(r)_n meeting every copy of the pattern.
/// Branch and bound over uncovered copies; admissible lower bounds from the
/// root LP's fractional packing (when the instance is small enough) and from
/// greedy edge-disjoint copy packing. The witness is the lexicographically
/// least optimal hitting set by colex edge rank.
ExactResult exact_tau(int n, const PatternSpec& pattern, const SearchBudget& budget = {});

/// Maximum size of an edge-disjoint family of copies. Include/exclude branch
/// and bound over copies in lexicographic order; upper bounds from the root
/// LP's fractional transversal. Witness is the lex-least optimal family.
ExactResult exact_nu(int n, const PatternSpec& pattern, const SearchBudget& budget = {});

/// Maximum edges of a pattern-free n-vertex ordered hypergraph, computed as
/// C(n,r) - exact_tau and cross-checked by direct search on small universes.
ExactResult exact_ex(int n, const PatternSpec& pattern, const SearchBudget& budget = {});

/// Direct maximum pattern-free subgraph search by exhaustive edge-mask scan;
/// requires C(n,r) <= 24.
std::uint64_t exact_ex_direct(int n, const PatternSpec& pattern);

/// Maximum number of good triples over k-labelings (monotone_only restricts
/// the feasible set). Exhaustive DFS with an admissible potential bound.
ExactResult exact_f(int n, int k, const SearchBudget& budget = {}, bool monotone_only = false);

/// Streams every labeling attaining the given good-triple count, in
/// lexicographic order of the label vector; visit returning false stops.
/// Throws ResourceLimitError if the budget is exhausted mid-enumeration.
void for_each_optimal_labeling(int n, int k, bool monotone, std::uint64_t good_value,
                               const std::function<bool(const Labeling&)>& visit,
                               const SearchBudget& budget = {});

/// Structural checks on an optimal labeling witness: unrestricted optima must
/// carry no (k,1) triple; monotone optima must satisfy the part-size and
/// partition-similarity inequalities. Violations become findings in the
/// certificate, not errors.
Certificate check_optimum_structure(const ExactResult& result);

} // namespace ordpath
