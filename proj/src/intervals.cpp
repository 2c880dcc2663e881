#include "ordpath/intervals.hpp"

#include <stdexcept>

#include "ordpath/hypergraph.hpp"

namespace ordpath {

int IntervalPartition::n() const {
    int total = 0;
    for (int len : lengths) total += len;
    return total;
}

int IntervalPartition::part_begin(int i) const {
    int begin = 1;
    for (int j = 0; j < i; ++j) begin += lengths[j];
    return begin;
}

int IntervalPartition::part_of(int u) const {
    int begin = 1;
    for (int i = 0; i < parts(); ++i) {
        if (u >= begin && u < begin + lengths[i]) return i;
        begin += lengths[i];
    }
    throw std::out_of_range("part_of: vertex outside partition");
}

IntervalPartition balanced_partition(int n, int parts) {
    if (parts <= 0) throw std::invalid_argument("balanced_partition: parts must be positive");
    IntervalPartition p;
    p.lengths.resize(parts);
    for (int l = 1; l <= parts; ++l)
        p.lengths[l - 1] = static_cast<int>(static_cast<long long>(l) * n / parts -
                                            static_cast<long long>(l - 1) * n / parts);
    return p;
}

int reflect(int u, int n) {
    if (u < 1 || u > n) throw std::out_of_range("reflect: vertex outside 1..n");
    return n + 1 - u;
}

std::vector<int> translate(const std::vector<int>& set, int c, int n) {
    std::vector<int> out;
    out.reserve(set.size());
    for (int u : set) {
        int v = u + c;
        if (v < 1 || v > n) throw std::out_of_range("translate: shifted vertex outside 1..n");
        out.push_back(v);
    }
    return out;
}

int interval_chromatic_number(const OrderedHypergraph& g) {
    if (g.r() != 2)
        throw std::invalid_argument("interval_chromatic_number: requires a 2-uniform graph");
    const int n = g.n();
    if (n == 0) return 1;
    // adjacency over pairs
    std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
    for (const Edge& e : g.edges()) adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
    int intervals = 1;
    int start = 1;
    for (int v = 2; v <= n; ++v) {
        bool conflict = false;
        for (int u = start; u < v && !conflict; ++u) conflict = adj[u][v];
        if (conflict) {
            ++intervals;
            start = v;
        }
    }
    return intervals;
}

namespace {

bool partition_fits(const OrderedHypergraph& g, const IntervalPartition& p) {
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (p.part_of(e[i]) != static_cast<int>(i)) return false;
    }
    return true;
}

} // namespace

std::optional<IntervalPartition> interval_partite_witness(const OrderedHypergraph& g) {
    const int n = g.n();
    const int r = g.r();
    if (r == 0) return std::nullopt;
    // Edges are increasing, so "one vertex per part" forces the i-th vertex of
    // each edge into part i. Scan boundary placements, empty parts allowed.
    std::vector<int> lens(r, 0);
    std::optional<IntervalPartition> found;
    auto rec = [&](auto&& self, int part, int remaining) -> void {
        if (found) return;
        if (part == r - 1) {
            lens[part] = remaining;
            IntervalPartition p{lens};
            if (partition_fits(g, p)) found = p;
            return;
        }
        for (int len = 0; len <= remaining; ++len) {
            lens[part] = len;
            self(self, part + 1, remaining - len);
            if (found) return;
        }
    };
    rec(rec, 0, n);
    return found;
}

} // namespace ordpath
