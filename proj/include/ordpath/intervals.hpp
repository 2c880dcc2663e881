#pragma once

#include <optional>
#include <vector>

namespace ordpath {

class OrderedHypergraph;

/// Consecutive intervals X_1 < X_2 < ... covering 1..n, given by their sizes.
/// Parts may be empty.
struct IntervalPartition {
    std::vector<int> lengths;

    int n() const;
    int parts() const { return static_cast<int>(lengths.size()); }
    /// First vertex of part i (0-based part index); parts() if empty part at end.
    int part_begin(int i) const;
    /// One past the last vertex of part i.
    int part_end(int i) const { return part_begin(i) + lengths[i]; }
    /// 0-based index of the part containing vertex u.
    int part_of(int u) const;

    bool operator==(const IntervalPartition& o) const { return lengths == o.lengths; }
};

/// Balanced partition of 1..n into `parts` intervals with boundaries
/// floor(l*n/parts).
IntervalPartition balanced_partition(int n, int parts);

/// Reflection u -> n+1-u. Throws std::out_of_range unless 1 <= u <= n.
int reflect(int u, int n);

/// Translation S + c; every shifted vertex must stay in 1..n.
std::vector<int> translate(const std::vector<int>& set, int c, int n);

/// Minimum number of independent intervals partitioning V(g); 2-uniform only.
/// Left-to-right greedy sweep: a new interval starts exactly when the current
/// vertex has a neighbor in the current interval.
int interval_chromatic_number(const OrderedHypergraph& g);

/// Witness partition into r intervals with one vertex of every edge per part,
/// or nullopt. Scans all boundary placements.
std::optional<IntervalPartition> interval_partite_witness(const OrderedHypergraph& g);

inline bool is_r_interval_partite(const OrderedHypergraph& g) {
    return interval_partite_witness(g).has_value();
}

} // namespace ordpath
