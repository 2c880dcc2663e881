#pragma once

#include <cstdint>
#include <vector>

#include "ordpath/patterns.hpp"

namespace ordpath {

/// All copies of a pattern inside the complete graph K^(r)_n. Every ascending
/// s-subset of [n] hosts exactly one copy, so copies are indexed by those
/// subsets in lexicographic order.
struct CopySet {
    int n = 0;
    PatternSpec spec{PatternKind::NaturalPath, 0, 0};
    std::size_t edges_per_copy = 0;
    std::uint64_t universe = 0; // C(n,r)

    std::vector<std::vector<int>> copy_verts;            // ascending s-tuples
    std::vector<std::vector<std::uint32_t>> copy_edges;  // sorted colex ranks
    std::vector<std::vector<std::uint32_t>> edge_copies; // per edge rank

    std::size_t size() const { return copy_verts.size(); }
};

inline constexpr std::uint64_t kDefaultCopyCap = 1'000'000;

/// Enumerates the copies; throws ResourceLimitError when C(n,s) exceeds the cap.
CopySet enumerate_copies(int n, const PatternSpec& spec,
                         std::uint64_t max_copies = kDefaultCopyCap);

/// Process-wide cache, one entry per (n, pattern); thread-safe. The cap is
/// checked against each call's limit before the cache is consulted, so a
/// stricter caller still gets its resource error.
const CopySet& cached_copies(int n, const PatternSpec& spec,
                             std::uint64_t max_copies = kDefaultCopyCap);

} // namespace ordpath
