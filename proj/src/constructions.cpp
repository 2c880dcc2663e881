#include "ordpath/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

namespace {

void require_even(int n, const char* who) {
    if (n < 0 || n % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": defined for even n only");
}

int count_leq(const std::vector<int>& set, int u) {
    int c = 0;
    for (int v : set)
        if (v <= u) ++c;
    return c;
}

int count_geq(const std::vector<int>& set, int lo) {
    int c = 0;
    for (int v : set)
        if (v >= lo) ++c;
    return c;
}

} // namespace

std::uint64_t h_count(int n, int t, int m, HMode mode) {
    require_even(n, "h_count");
    if (m < 1 || m > t) throw std::invalid_argument("h_count: requires 1 <= m <= t");
    if (mode == HMode::Formula) {
        std::uint64_t total = 0;
        for (int k = m; k <= n / 2; ++k) total += binom(k - 1, m - 1) * binom(n - 2 * k, t - m);
        return total;
    }
    std::uint64_t total = 0;
    for_each_subset(n, t, [&](const std::vector<int>& set) {
        if (is_biased(set, n, m, BiasSide::Left)) ++total;
    });
    return total;
}

bool is_biased(const std::vector<int>& set, int n, int m, BiasSide side) {
    require_even(n, "is_biased");
    for (int u = 0; u <= n / 2; ++u) {
        const int left = count_leq(set, u);
        const int right = count_geq(set, n + 1 - u);
        if (side == BiasSide::Left && left == m && right == 0) return true;
        if (side == BiasSide::Right && right == m && left == 0) return true;
    }
    return false;
}

bool is_biased_either(const std::vector<int>& set, int n, int m) {
    return is_biased(set, n, m, BiasSide::Left) || is_biased(set, n, m, BiasSide::Right);
}

bool is_degenerate_set(const std::vector<int>& set, int n) {
    for (int v : set)
        if (v != n + 1 - v && std::binary_search(set.begin(), set.end(), n + 1 - v)) return true;
    return false;
}

BiasedTransversal biased_transversal(int n, int r, int s) {
    require_even(n, "biased_transversal");
    if (s < r || s > 2 * r - 1)
        throw std::invalid_argument("biased_transversal: requires r <= s <= 2r-1");
    if (s > n) throw std::invalid_argument("biased_transversal: requires s <= n");
    BiasedTransversal bt;
    bt.n = n;
    bt.r = r;
    bt.s = s;
    bt.m = s - r + 1;
    for_each_subset(n, r, [&](const Edge& e) {
        const bool in1 = is_biased_either(e, n, bt.m);
        const bool in2 = e[bt.m - 1] + e[r - 1] == n + 1;
        if (in1) bt.e1.push_back(e);
        if (in2) bt.e2.push_back(e);
        if (in1 && in2) ++bt.overlap;
    });
    std::vector<Edge> all = bt.e1;
    all.insert(all.end(), bt.e2.begin(), bt.e2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    bt.graph = OrderedHypergraph(n, r, std::move(all));
    return bt;
}

Certificate verify_transversal(const OrderedHypergraph& g, const PatternSpec& pattern) {
    validate(pattern);
    if (g.r() != pattern.r)
        throw std::invalid_argument("verify_transversal: uniformity mismatch");
    const int n = g.n();
    Certificate cert;
    cert.claim = "transversal";
    cert.parameters = {{"n", n},
                       {"pattern", pattern_name(pattern)},
                       {"edges", g.edge_count()}};
    cert.value = g.edge_count();

    const OrderedHypergraph pat = build_pattern(pattern);
    std::vector<std::vector<int>> templates;
    for (const Edge& e : pat.edges()) {
        std::vector<int> t(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] - 1;
        templates.push_back(std::move(t));
    }
    bool ok = true;
    Edge img(pattern.r);
    std::vector<int> bad_copy;
    // lexicographic scan, so the first failure is the least uncovered copy
    for_each_subset(n, pattern.s, [&](const std::vector<int>& verts) {
        if (!ok) return;
        bool hit = false;
        for (const auto& tpl : templates) {
            for (std::size_t i = 0; i < tpl.size(); ++i) img[i] = verts[tpl[i]];
            if (g.has_edge_rank(colex_rank(img))) {
                hit = true;
                break;
            }
        }
        if (!hit) {
            ok = false;
            bad_copy = verts;
        }
    });
    cert.verified = ok;
    if (!ok) cert.counterexample = nlohmann::ordered_json{{"copy", bad_copy}};
    return cert;
}

Certificate verify_packing(const PackingFamily& family) {
    Certificate cert;
    cert.claim = "packing-edge-disjoint";
    cert.parameters = {{"n", family.n},
                       {"r", family.r},
                       {"s", family.s},
                       {"members", family.members.size()}};
    cert.value = family.members.size();
    std::vector<int> owner(binom(family.n, family.r), -1);
    for (std::size_t idx = 0; idx < family.members.size(); ++idx) {
        const auto& verts = family.members[idx];
        if (static_cast<int>(verts.size()) != family.s) {
            cert.counterexample = nlohmann::ordered_json{{"member", verts},
                                                         {"reason", "wrong vertex count"}};
            return cert;
        }
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (verts[i] < 1 || verts[i] > family.n || (i > 0 && verts[i] <= verts[i - 1])) {
                cert.counterexample = nlohmann::ordered_json{{"member", verts},
                                                             {"reason", "not an ascending tuple"}};
                return cert;
            }
        }
        for (int w = 0; w + family.r <= family.s; ++w) {
            Edge e(verts.begin() + w, verts.begin() + w + family.r);
            const auto rank = colex_rank(e);
            if (owner[rank] >= 0) {
                cert.counterexample =
                    nlohmann::ordered_json{{"member_a", family.members[owner[rank]]},
                                           {"member_b", verts},
                                           {"shared_edge", e}};
                return cert;
            }
            owner[rank] = static_cast<int>(idx);
        }
    }
    cert.verified = true;
    return cert;
}

IntervalPartition canonical_partition(const Edge& e, int n, int s) {
    require_even(n, "canonical_partition");
    const int r = static_cast<int>(e.size());
    if (s < r || s > 2 * r - 1)
        throw std::invalid_argument("canonical_partition: requires r <= s <= 2r-1");
    const int m = s - r + 1;
    const int core = 2 * r - s; // = r - (m-1)
    int u_bias = -1, u_core = -1;
    for (int u = n / 2; u >= 0; --u) {
        const int xe = count_leq(e, u);
        const int ze = count_geq(e, n + 1 - u);
        if (u_bias < 0 && std::max(xe, ze) == m - 1 && std::min(xe, ze) == 0) u_bias = u;
        if (u_core < 0 && r - xe - ze == core) u_core = u;
        if (u_bias >= 0 && u_core >= 0) break;
    }
    if (u_bias < 0)
        throw std::domain_error("canonical_partition: edge is not (m-1)-biased");
    if (u_bias != u_core)
        throw std::domain_error("canonical_partition: the two characterizations disagree");
    return IntervalPartition{{u_bias, n - 2 * u_bias, u_bias}};
}

namespace {

std::vector<int> packed_copy_vertices(const Edge& e, int n, int s) {
    const int r = static_cast<int>(e.size());
    const int m = s - r + 1;
    const IntervalPartition part = canonical_partition(e, n, s);
    const int u = part.lengths[0];
    std::vector<int> left, right;
    for (int v : e) {
        if (v <= u) left.push_back(v);
        if (v >= n + 1 - u) right.push_back(v);
    }
    std::vector<int> verts = e;
    if (static_cast<int>(left.size()) == m - 1) {
        for (int v : translate(left, n - u, n)) verts.push_back(v);
    } else {
        for (int v : translate(right, -(n - u), n)) verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

} // namespace

PackingFamily generate_packing(int n, int r, int s) {
    const BiasedTransversal bt = biased_transversal(n, r, s);
    PackingFamily family;
    family.n = n;
    family.r = r;
    family.s = s;
    for (const Edge& e : bt.graph.edges()) {
        std::vector<int> verts = packed_copy_vertices(e, n, s);
        if (static_cast<int>(verts.size()) != s)
            throw std::domain_error("generate_packing: copy has wrong vertex count");
        family.generators.push_back(e);
        family.members.push_back(std::move(verts));
    }
    return family;
}

Edge decode_generator(const Edge& f, int n, int r, int s) {
    require_even(n, "decode_generator");
    if (static_cast<int>(f.size()) != r)
        throw std::invalid_argument("decode_generator: edge arity differs from r");
    if (s < r || s > 2 * r - 1)
        throw std::invalid_argument("decode_generator: requires r <= s <= 2r-1");
    const int m = s - r + 1;
    const int core = 2 * r - s;
    int u = -1;
    for (int cand = n / 2; cand >= 0; --cand) {
        const int ye = r - count_leq(f, cand) - count_geq(f, n + 1 - cand);
        if (ye == core) {
            u = cand;
            break;
        }
    }
    if (u < 0) throw DecodeError("decode_generator: no interval split isolates a core");

    std::vector<int> verts = f;
    for (int v : f) {
        if (v <= u) verts.push_back(v + (n - u));
        if (v >= n + 1 - u) verts.push_back(v - (n - u));
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (static_cast<int>(verts.size()) != s)
        throw DecodeError("decode_generator: reconstructed copy has wrong vertex count");

    const int min_y = u + 1;
    const int max_y = n - u;
    const bool has_min = std::binary_search(verts.begin(), verts.end(), min_y);
    const bool has_max = std::binary_search(verts.begin(), verts.end(), max_y);
    Edge e;
    if (has_min) {
        e.assign(verts.begin(), verts.begin() + r); // first edge (E2 or left-biased E1)
    } else if (has_max) {
        e.assign(verts.end() - r, verts.end()); // last edge (right-biased E1)
    } else {
        throw DecodeError("decode_generator: neither core boundary is in the copy");
    }

    // validate: e really generates this copy and f is one of its edges
    const bool in_family =
        is_biased_either(e, n, m) || e[m - 1] + e[r - 1] == n + 1;
    if (!in_family) throw DecodeError("decode_generator: recovered edge is outside the family");
    if (packed_copy_vertices(e, n, s) != verts)
        throw DecodeError("decode_generator: reconstruction mismatch");
    const auto pos = std::find(verts.begin(), verts.end(), f[0]);
    const auto offset = pos - verts.begin();
    if (offset + r > static_cast<long>(verts.size()) ||
        !std::equal(f.begin(), f.end(), verts.begin() + offset))
        throw DecodeError("decode_generator: edge is not a window of the copy");
    return e;
}

PackingFamily flower_packing(int n, int r, int s, bool padded) {
    if (r < 1 || s % r != 0) throw std::invalid_argument("flower_packing: requires r | s");
    const int k = s / r;
    int n_eff = n;
    if (n % k != 0) {
        if (!padded) throw std::invalid_argument("flower_packing: requires (s/r) | n");
        n_eff = n - n % k;
    }
    const int part = n_eff / k;
    if (part < r) throw std::invalid_argument("flower_packing: parts too small for an edge");
    PackingFamily family;
    family.n = n_eff;
    family.r = r;
    family.s = s;
    family.approximate = n_eff != n;
    for_each_subset(part, r, [&](const Edge& e) {
        std::vector<int> verts;
        verts.reserve(s);
        for (int j = 0; j < k; ++j)
            for (int v : e) verts.push_back(v + j * part);
        std::sort(verts.begin(), verts.end());
        family.generators.push_back(e);
        family.members.push_back(std::move(verts));
    });
    return family;
}

Edge flower_recover(const Edge& f, int n, int r, int s) {
    if (r < 1 || s % r != 0) throw std::invalid_argument("flower_recover: requires r | s");
    const int k = s / r;
    if (n % k != 0) throw std::invalid_argument("flower_recover: requires (s/r) | n");
    const int part = n / k;
    Edge e;
    for (int v : f) e.push_back((v - 1) % part + 1);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (static_cast<int>(e.size()) != r)
        throw DecodeError("flower_recover: edge does not reduce to a generator");
    // validate against the rebuilt member
    std::vector<int> verts;
    for (int j = 0; j < k; ++j)
        for (int v : e) verts.push_back(v + j * part);
    std::sort(verts.begin(), verts.end());
    const auto pos = std::find(verts.begin(), verts.end(), f[0]);
    const auto offset = pos - verts.begin();
    if (offset + r > static_cast<long>(verts.size()) ||
        !std::equal(f.begin(), f.end(), verts.begin() + offset))
        throw DecodeError("flower_recover: edge is not a window of the rebuilt copy");
    return e;
}

Rat EdgeWeighting::total() const {
    Rat sum = 0;
    for (const Rat& q : w) sum += q;
    return sum;
}

EdgeWeighting fractional_transversal_weights(int n, int r, int s, bool padded) {
    if (r < 1 || s % r != 0)
        throw std::invalid_argument("fractional_transversal_weights: requires r | s");
    const int k = s / r;
    int n_eff = n;
    if (n % k != 0) {
        if (!padded)
            throw std::invalid_argument("fractional_transversal_weights: requires (s/r) | n");
        n_eff = n - n % k;
    }
    const int part = n_eff / k;
    EdgeWeighting weighting;
    weighting.n = n_eff;
    weighting.r = r;
    weighting.approximate = n_eff != n;
    weighting.w.assign(binom(n_eff, r), Rat(0));
    const Rat inside = make_rat(r, s);
    for_each_subset(n_eff, r, [&](const Edge& e) {
        if ((e.front() - 1) / part == (e.back() - 1) / part)
            weighting.w[colex_rank(e)] = inside;
    });
    return weighting;
}

OrderedHypergraph interval_blowup(int n, int r, int s) {
    if (r < 2 || (s - 1) % (r - 1) != 0)
        throw std::invalid_argument("interval_blowup: requires (r-1) | (s-1)");
    const int parts = (s - 1) / (r - 1);
    const IntervalPartition partition = balanced_partition(n, parts);
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const Edge& e) {
        if (partition.part_of(e.front()) != partition.part_of(e.back())) edges.push_back(e);
    });
    return OrderedHypergraph(n, r, std::move(edges));
}

} // namespace ordpath
