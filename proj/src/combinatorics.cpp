#include "ordpath/combinatorics.hpp"

#include <cassert>
#include <stdexcept>

namespace ordpath {

namespace {

constexpr int kPascalMax = 68; // C(68,34) still fits in uint64

const std::vector<std::vector<std::uint64_t>>& pascal_table() {
    static const std::vector<std::vector<std::uint64_t>> table = [] {
        std::vector<std::vector<std::uint64_t>> t(kPascalMax + 1);
        for (int n = 0; n <= kPascalMax; ++n) {
            t[n].resize(n + 1);
            t[n][0] = t[n][n] = 1;
            for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
        }
        return t;
    }();
    return table;
}

} // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    if (n <= kPascalMax) return pascal_table()[n][k];
    unsigned __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        assert(acc <= static_cast<unsigned __int128>(UINT64_MAX) && "binom overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t colex_rank(const std::vector<int>& set) {
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < set.size(); ++i)
        rank += binom(set[i] - 1, static_cast<int>(i) + 1);
    return rank;
}

std::vector<int> colex_unrank(std::uint64_t rank, int r) {
    std::vector<int> out(r);
    for (int i = r; i >= 1; --i) {
        int m = i - 1;
        while (binom(m + 1, i) <= rank) ++m;
        out[i - 1] = m + 1;
        rank -= binom(m, i);
    }
    return out;
}

} // namespace ordpath
