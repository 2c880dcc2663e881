#pragma once

#include <cstdint>
#include <vector>

namespace ordpath {

using Edge = std::vector<int>; // strictly increasing vertices in 1..n

/// An r-uniform hypergraph on linearly ordered vertices 1..n. Immutable after
/// construction; the constructor enforces the type invariants (strictly
/// increasing r-tuples in range, no duplicates) and sorts the edge list
/// lexicographically.
class OrderedHypergraph {
public:
    OrderedHypergraph(int n, int r, std::vector<Edge> edges);

    static OrderedHypergraph complete(int n, int r);
    static OrderedHypergraph edgeless(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Membership by edge; e must be a strictly increasing r-tuple in range.
    bool has_edge(const Edge& e) const;
    bool has_edge_rank(std::uint64_t colex) const { return mask_[colex]; }

    /// Membership bitmap over the colex-ranked edge universe of size C(n,r).
    const std::vector<bool>& mask() const { return mask_; }
    std::uint64_t universe_size() const { return static_cast<std::uint64_t>(mask_.size()); }

    bool operator==(const OrderedHypergraph& o) const {
        return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
    }

private:
    int n_;
    int r_;
    std::vector<Edge> edges_;
    std::vector<bool> mask_;
};

/// Image of g under the reversal map u -> n+1-u (edge set reflected).
OrderedHypergraph reflect_hypergraph(const OrderedHypergraph& g);

} // namespace ordpath
