#pragma once

#include <cstdint>
#include <vector>

#include "ordpath/certificate.hpp"
#include "ordpath/hypergraph.hpp"
#include "ordpath/intervals.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/rational.hpp"

namespace ordpath {

// ---------------------------------------------------------------------------
// Biased-set counting
// ---------------------------------------------------------------------------

enum class HMode { Formula, Enumerate };
enum class BiasSide { Left, Right };

/// Number of m-left-biased t-sets in [n], n even. Formula mode evaluates
/// sum_{k=m}^{n/2} C(k-1,m-1) C(n-2k,t-m); enumerate mode counts sets against
/// the definition. Rejects odd n and m outside 1..t.
std::uint64_t h_count(int n, int t, int m, HMode mode = HMode::Formula);

/// True iff some symmetric interval split (X,Y,Z) with |X|=|Z| has exactly m
/// vertices of S in X and none in Z (left) or the mirror condition (right).
bool is_biased(const std::vector<int>& set, int n, int m, BiasSide side);
bool is_biased_either(const std::vector<int>& set, int n, int m);

/// True iff S contains some vertex together with its reflection n+1-u.
bool is_degenerate_set(const std::vector<int>& set, int n);

// ---------------------------------------------------------------------------
// Transversal / packing constructions for r <= s <= 2r-1, n even
// ---------------------------------------------------------------------------

/// E1 = m-biased r-sets, E2 = r-sets whose m-th and last vertices reflect each
/// other, m = s-r+1. The union hits every copy of the loose path (and hence of
/// the tight path).
struct BiasedTransversal {
    int n = 0, r = 0, s = 0, m = 0;
    std::vector<Edge> e1;
    std::vector<Edge> e2;
    std::size_t overlap = 0; // |E1 cap E2|, measured
    OrderedHypergraph graph; // deduplicated union

    BiasedTransversal() : graph(0, 0, {}) {}
};

BiasedTransversal biased_transversal(int n, int r, int s);

/// Edge-disjoint family of natural-path copies, one per generator edge.
struct PackingFamily {
    int n = 0, r = 0, s = 0;
    bool approximate = false; // padded sweep mode dropped trailing vertices
    std::vector<Edge> generators;
    std::vector<std::vector<int>> members; // ascending s-tuples
};

/// Exhaustively checks that g meets every copy of the pattern in K^(r)_n;
/// the counterexample, if any, is the lexicographically least uncovered copy.
Certificate verify_transversal(const OrderedHypergraph& g, const PatternSpec& pattern);

/// Checks every member is an s-subset hosting a natural-path copy and that the
/// members are pairwise edge-disjoint.
Certificate verify_packing(const PackingFamily& family);

/// The interval partition (X,Y,Z) maximizing |X| subject to |X|=|Z|,
/// max(|X∩e|,|Z∩e|) = m-1 and min(|X∩e|,|Z∩e|) = 0, with m = s-r+1.
/// Equivalently minimizes |Y| subject to |X|=|Z| and |Y∩e| = 2r-s; both
/// characterizations are computed and must agree.
IntervalPartition canonical_partition(const Edge& e, int n, int s);

/// One copy Q_e per edge of biased_transversal(n,r,s); pairwise edge-disjoint.
PackingFamily generate_packing(int n, int r, int s);

/// Recovers the generator edge from any edge f of any packed copy Q_e.
/// Throws DecodeError when f belongs to no member of the family.
Edge decode_generator(const Edge& f, int n, int r, int s);

/// Prop-3.1 flower packing: requires r | s and (s/r) | n unless padded, in
/// which case trailing vertices are dropped and the result is approximate.
PackingFamily flower_packing(int n, int r, int s, bool padded = false);

/// Recovers the generator edge inside X_1 from any edge of a flower member.
Edge flower_recover(const Edge& f, int n, int r, int s);

/// Exact rational fractional transversal: weight r/s on edges inside a part.
struct EdgeWeighting {
    int n = 0, r = 0;
    bool approximate = false;
    std::vector<Rat> w; // dense over the colex edge universe

    Rat total() const;
};

EdgeWeighting fractional_transversal_weights(int n, int r, int s, bool padded = false);

/// K^(r)_n minus the edges inside a single part of the balanced partition into
/// (s-1)/(r-1) parts; contains no natural path on s vertices.
OrderedHypergraph interval_blowup(int n, int r, int s);

} // namespace ordpath
