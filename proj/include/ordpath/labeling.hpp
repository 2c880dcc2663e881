#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordpath/hypergraph.hpp"
#include "ordpath/intervals.hpp"
#include "ordpath/rational.hpp"

namespace ordpath {

/// A total labeling of the pairs u < v of [n] with labels in 1..k.
class Labeling {
public:
    Labeling(int n, int k, int fill = 1);

    int n() const { return n_; }
    int k() const { return k_; }

    int at(int u, int v) const; // u < v
    void set(int u, int v, int label);

    const std::vector<int>& values() const { return values_; } // by pair_rank

    bool operator==(const Labeling& o) const {
        return n_ == o.n_ && k_ == o.k_ && values_ == o.values_;
    }

private:
    int n_;
    int k_;
    std::vector<int> values_;
};

struct GoodBad {
    std::uint64_t good = 0;
    std::uint64_t bad = 0;
};

/// Counts good triples (u<v<w with phi(uv) < phi(vw)) and bad ones by
/// exhaustive scan; good + bad = C(n,3).
GoodBad cost(const Labeling& phi);

/// Bad triples grouped by the part of the middle vertex.
std::vector<std::uint64_t> bad_by_middle_part(const Labeling& phi, const IntervalPartition& parts);

/// 3-uniform hypergraph whose edges are exactly the good triples.
OrderedHypergraph labeling_to_hypergraph(const Labeling& phi);

/// Longest-path labeling of a P^(3)_s-free host: phi(uv) = edge count of the
/// longest tight path ending in u,v; labels stored shifted to 1..s-2.
/// Throws PatternFoundError (with the embedding) when the host contains the path.
Labeling hypergraph_to_labeling(const OrderedHypergraph& g, int s);

/// Nearly-equal interval partitions underlying the two constructions.
IntervalPartition odd_construction_partition(int n, int k);
IntervalPartition even_construction_partition(int n, int k);

/// phi(uv) = i + j over (k+1)/2 balanced parts, shifted to labels 1..k.
/// Monotone; bad triples are exactly the within-part triples.
Labeling odd_construction(int n, int k);

/// Common-refinement construction for even k: within-part pairs keep the part
/// index, distance->=2 pairs get label i+1, consecutive-part pairs follow the
/// fractional-index rule (ties lambda_u + lambda_v = 1 stay low).
Labeling even_construction(int n, int k);

/// (a+b) * b * (b+c) * C(n,3) — the asymptotic per-middle-part bad count.
Rat badcount_prediction(const Rat& a, const Rat& b, const Rat& c, int n);

/// Per-vertex max incoming / min outgoing label profiles of a monotone
/// labeling, the induced interval partitions, and the pair sums.
struct LabelProfile {
    std::vector<int> phi_left;   // Phi_L(1..n); Phi_L(1) = 0
    std::vector<int> phi_right;  // Phi_R(1..n); Phi_R(n) = k+1
    IntervalPartition parts;     // X_0..X_{k+1} by Phi_L
    IntervalPartition parts_hat; // X^_0..X^_{k+1} by Phi_R
    std::vector<int> a_sums;     // a_l = |X_{2l}| + |X_{2l+1}|
    std::vector<int> b_sums;     // b_l = |X_{2l+1}| + |X_{2l+2}|
    std::vector<int> a_hat_sums;
    std::vector<int> b_hat_sums;
};

/// Throws NonMonotoneError with a witnessing triple when phi is not monotone.
LabelProfile profile(const Labeling& phi);

bool is_monotone(const Labeling& phi);

/// phi'(uv) = (k+1) - phi(v*u*) with u* = n+1-u. Involution, preserves cost.
Labeling reverse_invert(const Labeling& phi);

/// One (k,1)-swap improvement step: if some triple u<v<w has phi(uv)=k and
/// phi(vw)=1, applies the extremal-choice swap (minimum such u, maximum such w
/// at the smallest eligible v) and returns the strictly cheaper labeling.
std::optional<Labeling> improve_k1_swap(const Labeling& phi);

bool has_k1_triple(const Labeling& phi);

} // namespace ordpath
