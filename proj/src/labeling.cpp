#include "ordpath/labeling.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/patterns.hpp"

namespace ordpath {

Labeling::Labeling(int n, int k, int fill) : n_(n), k_(k), values_(pair_count(n), fill) {
    if (n < 0 || k < 1) throw std::invalid_argument("labeling: requires n >= 0, k >= 1");
    if (fill < 1 || fill > k) throw std::invalid_argument("labeling: fill label out of range");
}

int Labeling::at(int u, int v) const {
    assert(1 <= u && u < v && v <= n_);
    return values_[pair_rank(u, v)];
}

void Labeling::set(int u, int v, int label) {
    if (!(1 <= u && u < v && v <= n_))
        throw std::invalid_argument("labeling: pair out of range");
    if (label < 1 || label > k_) throw std::invalid_argument("labeling: label out of range");
    values_[pair_rank(u, v)] = label;
}

GoodBad cost(const Labeling& phi) {
    GoodBad gb;
    const int n = phi.n();
    for (int v = 2; v < n; ++v)
        for (int u = 1; u < v; ++u) {
            const int low = phi.at(u, v);
            for (int w = v + 1; w <= n; ++w) {
                if (low < phi.at(v, w))
                    ++gb.good;
                else
                    ++gb.bad;
            }
        }
    return gb;
}

std::vector<std::uint64_t> bad_by_middle_part(const Labeling& phi,
                                              const IntervalPartition& parts) {
    std::vector<std::uint64_t> out(parts.parts(), 0);
    const int n = phi.n();
    for (int v = 2; v < n; ++v) {
        const int part = parts.part_of(v);
        for (int u = 1; u < v; ++u) {
            const int low = phi.at(u, v);
            for (int w = v + 1; w <= n; ++w)
                if (low >= phi.at(v, w)) ++out[part];
        }
    }
    return out;
}

OrderedHypergraph labeling_to_hypergraph(const Labeling& phi) {
    std::vector<Edge> edges;
    const int n = phi.n();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            for (int w = v + 1; w <= n; ++w)
                if (phi.at(u, v) < phi.at(v, w)) edges.push_back({u, v, w});
    return OrderedHypergraph(n, 3, std::move(edges));
}

Labeling hypergraph_to_labeling(const OrderedHypergraph& g, int s) {
    if (g.r() != 3) throw std::invalid_argument("hypergraph_to_labeling: requires r = 3");
    if (s < 4) throw std::invalid_argument("hypergraph_to_labeling: requires s >= 4");
    if (auto found = find_embedding(g, build_pattern(natural_path(3, s))))
        throw PatternFoundError("hypergraph_to_labeling: host contains the forbidden path",
                                *found);
    const int n = g.n();
    // longest tight path ending in the pair (u,v), measured in edges
    std::vector<int> len(pair_count(n), 0);
    std::vector<Edge> edges = g.edges();
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.back() < b.back(); });
    for (const Edge& e : edges) {
        const int u = e[0], v = e[1], w = e[2];
        len[pair_rank(v, w)] = std::max(len[pair_rank(v, w)], len[pair_rank(u, v)] + 1);
    }
    Labeling phi(n, s - 2);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const int native = len[pair_rank(u, v)];
            assert(native <= s - 3 && "freeness bound violated");
            phi.set(u, v, native + 1); // stored shifted from 0..s-3 to 1..s-2
        }
    return phi;
}

IntervalPartition odd_construction_partition(int n, int k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("odd_construction: requires odd k >= 1");
    return balanced_partition(n, (k + 1) / 2);
}

Labeling odd_construction(int n, int k) {
    const IntervalPartition parts = odd_construction_partition(n, k);
    Labeling phi(n, k);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const int i = parts.part_of(u) + 1;
            const int j = parts.part_of(v) + 1;
            phi.set(u, v, i + j - 1); // part-index sums 2..2t, shifted to labels 1..k
        }
    return phi;
}

IntervalPartition even_construction_partition(int n, int k) {
    if (k < 2 || k % 2 != 0)
        throw std::invalid_argument("even_construction: requires even k >= 2");
    const int t = k / 2;
    // interleaved boundaries floor(l*n/t) and floor(l*n/(t+1)); duplicates
    // yield empty parts, keeping k parts in total
    std::vector<long long> bounds;
    for (int l = 1; l < t; ++l) bounds.push_back(static_cast<long long>(l) * n / t);
    for (int l = 1; l <= t; ++l) bounds.push_back(static_cast<long long>(l) * n / (t + 1));
    std::sort(bounds.begin(), bounds.end());
    IntervalPartition p;
    long long prev = 0;
    for (long long b : bounds) {
        p.lengths.push_back(static_cast<int>(b - prev));
        prev = b;
    }
    p.lengths.push_back(static_cast<int>(n - prev));
    assert(static_cast<int>(p.lengths.size()) == k);
    return p;
}

Labeling even_construction(int n, int k) {
    const IntervalPartition parts = even_construction_partition(n, k);
    Labeling phi(n, k);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const int i = parts.part_of(u) + 1;
            const int j = parts.part_of(v) + 1;
            int label;
            if (i == j) {
                label = i;
            } else if (j - i >= 2) {
                label = i + 1; // any value strictly between i and j works; fixed for reproducibility
            } else {
                const Rat lu = make_rat(u + 1 - parts.part_begin(i - 1), parts.lengths[i - 1]);
                const Rat lv = make_rat(v + 1 - parts.part_begin(j - 1), parts.lengths[j - 1]);
                label = (lu + lv <= 1) ? i : i + 1;
            }
            phi.set(u, v, label);
        }
    return phi;
}

Rat badcount_prediction(const Rat& a, const Rat& b, const Rat& c, int n) {
    if (sgn(a) < 0 || sgn(b) < 0 || sgn(c) < 0)
        throw std::invalid_argument("badcount_prediction: fractions must be nonnegative");
    return (a + b) * b * (b + c) * Rat(binom(n, 3));
}

namespace {

// Phi_L/Phi_R; throws on a non-monotone witness when `strict`.
void compute_profiles(const Labeling& phi, std::vector<int>& pl, std::vector<int>& pr,
                      bool strict, bool* monotone) {
    const int n = phi.n();
    const int k = phi.k();
    pl.assign(n + 1, 0);
    pr.assign(n + 1, k + 1);
    for (int v = 2; v <= n; ++v) {
        int best = 0;
        for (int u = 1; u < v; ++u) best = std::max(best, phi.at(u, v));
        pl[v] = best;
    }
    for (int v = 1; v < n; ++v) {
        int best = k + 1;
        for (int w = v + 1; w <= n; ++w) best = std::min(best, phi.at(v, w));
        pr[v] = best;
    }
    if (n >= 1) {
        pl[1] = 0;
        pr[n] = k + 1;
        pr[0] = 0; // unused slot, kept zero for tidy dumps
    }
    for (int v = 2; v < n; ++v) {
        if (pl[v] > pr[v]) {
            if (monotone) *monotone = false;
            if (!strict) return;
            int u = 0, w = 0;
            for (int x = 1; x < v; ++x)
                if (phi.at(x, v) == pl[v]) { u = x; break; }
            for (int x = v + 1; x <= n; ++x)
                if (phi.at(v, x) == pr[v]) { w = x; break; }
            throw NonMonotoneError("profile: labeling is not monotone", u, v, w);
        }
    }
    if (monotone) *monotone = true;
}

IntervalPartition level_sets(const std::vector<int>& levels, int n, int k) {
    IntervalPartition p;
    p.lengths.assign(k + 2, 0);
    for (int v = 1; v <= n; ++v) {
        assert(levels[v] >= 0 && levels[v] <= k + 1);
        assert(v == 1 || levels[v] >= levels[v - 1]); // interval partition
        ++p.lengths[levels[v]];
    }
    return p;
}

} // namespace

bool is_monotone(const Labeling& phi) {
    std::vector<int> pl, pr;
    bool mono = true;
    compute_profiles(phi, pl, pr, false, &mono);
    return mono;
}

LabelProfile profile(const Labeling& phi) {
    LabelProfile prof;
    compute_profiles(phi, prof.phi_left, prof.phi_right, true, nullptr);
    const int n = phi.n();
    const int k = phi.k();
    prof.parts = level_sets(prof.phi_left, n, k);
    prof.parts_hat = level_sets(prof.phi_right, n, k);
    for (int l = 0; 2 * l + 1 <= k + 1; ++l) {
        prof.a_sums.push_back(prof.parts.lengths[2 * l] + prof.parts.lengths[2 * l + 1]);
        prof.a_hat_sums.push_back(prof.parts_hat.lengths[2 * l] +
                                  prof.parts_hat.lengths[2 * l + 1]);
    }
    for (int l = 0; 2 * l + 2 <= k + 1; ++l) {
        prof.b_sums.push_back(prof.parts.lengths[2 * l + 1] + prof.parts.lengths[2 * l + 2]);
        prof.b_hat_sums.push_back(prof.parts_hat.lengths[2 * l + 1] +
                                  prof.parts_hat.lengths[2 * l + 2]);
    }
    return prof;
}

Labeling reverse_invert(const Labeling& phi) {
    const int n = phi.n();
    const int k = phi.k();
    Labeling out(n, k);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            out.set(u, v, k + 1 - phi.at(n + 1 - v, n + 1 - u));
    return out;
}

std::optional<Labeling> improve_k1_swap(const Labeling& phi) {
    const int n = phi.n();
    const int k = phi.k();
    if (k < 2) return std::nullopt;
    for (int v = 2; v < n; ++v) {
        int u_min = 0, w_max = 0;
        for (int u = 1; u < v; ++u)
            if (phi.at(u, v) == k) { u_min = u; break; }
        if (u_min == 0) continue;
        for (int w = n; w > v; --w)
            if (phi.at(v, w) == 1) { w_max = w; break; }
        if (w_max == 0) continue;
        Labeling next = phi;
        next.set(u_min, v, 1);
        next.set(v, w_max, k);
        return next;
    }
    return std::nullopt;
}

bool has_k1_triple(const Labeling& phi) {
    const int n = phi.n();
    const int k = phi.k();
    for (int v = 2; v < n; ++v) {
        bool high_in = false, low_out = false;
        for (int u = 1; u < v && !high_in; ++u) high_in = phi.at(u, v) == k;
        for (int w = v + 1; w <= n && !low_out; ++w) low_out = phi.at(v, w) == 1;
        if (high_in && low_out) return true;
    }
    return false;
}

} // namespace ordpath
