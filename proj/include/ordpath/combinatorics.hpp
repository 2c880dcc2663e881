#pragma once

#include <cstdint>
#include <vector>

namespace ordpath {

/// C(n,k) in exact 64-bit arithmetic. Aborts (assert) on overflow; desk-scale
/// callers stay far below the limit.
std::uint64_t binom(int n, int k);

/// Colex rank of a strictly increasing 1-based r-tuple among all r-subsets of
/// any ground set containing it. rank({a_1<...<a_r}) = sum_i C(a_i - 1, i).
std::uint64_t colex_rank(const std::vector<int>& set);

/// Inverse of colex_rank for r-subsets.
std::vector<int> colex_unrank(std::uint64_t rank, int r);

/// Visits every r-subset of {1..n} as a sorted vector, in lexicographic order.
template <typename F>
void for_each_subset(int n, int r, F&& visit) {
    if (r < 0 || r > n) return;
    std::vector<int> cur(r);
    if (r == 0) {
        visit(static_cast<const std::vector<int>&>(cur));
        return;
    }
    for (int i = 0; i < r; ++i) cur[i] = i + 1;
    while (true) {
        visit(static_cast<const std::vector<int>&>(cur));
        int i = r - 1;
        while (i >= 0 && cur[i] == n - (r - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
    }
}

/// Rank of a pair (u,v), u < v, in the order (1,2),(1,3),(2,3),(1,4),...
/// i.e. sorted by larger endpoint, then smaller.
inline std::size_t pair_rank(int u, int v) {
    return static_cast<std::size_t>(v - 1) * (v - 2) / 2 + (u - 1);
}

inline std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Rank of a triple u < v < w in the order induced by (w, v, u) ascending.
inline std::size_t triple_rank(int u, int v, int w) {
    return static_cast<std::size_t>(w - 1) * (w - 2) * (w - 3) / 6 +
           static_cast<std::size_t>(v - 1) * (v - 2) / 2 + (u - 1);
}

} // namespace ordpath
