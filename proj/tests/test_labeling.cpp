#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ordpath/combinatorics.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/patterns.hpp"
#include "ordpath/report.hpp"

using namespace ordpath;

namespace {

Labeling right_endpoint_labeling(int n) {
    Labeling phi(n, n - 1);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) phi.set(u, v, v - 1);
    return phi;
}

Labeling random_monotone(int n, int k, std::mt19937& rng) {
    Labeling phi(n, k);
    std::vector<int> phil(n + 1, 1);
    for (int v = 2; v <= n; ++v)
        for (int u = 1; u < v; ++u) {
            std::uniform_int_distribution<int> pick(phil[u], k);
            const int label = pick(rng);
            phi.set(u, v, label);
            phil[v] = std::max(phil[v], label);
        }
    return phi;
}

} // namespace

TEST_CASE("cost counts good and bad triples") {
    Labeling constant(3, 2, 1);
    CHECK(cost(constant).good == 0);
    CHECK(cost(constant).bad == 1);

    for (int n : {4, 6}) {
        const GoodBad gb = cost(right_endpoint_labeling(n));
        CHECK(gb.good == binom(n, 3));
        CHECK(gb.bad == 0);
    }

    const GoodBad odd = cost(odd_construction(6, 3));
    CHECK(odd.bad == 2);
    CHECK(odd.good + odd.bad == binom(6, 3));
}

TEST_CASE("labeling_to_hypergraph") {
    CHECK(labeling_to_hypergraph(Labeling(4, 2, 1)).edge_count() == 0);
    CHECK(labeling_to_hypergraph(right_endpoint_labeling(4)) ==
          OrderedHypergraph::complete(4, 3));
    const OrderedHypergraph g = labeling_to_hypergraph(even_construction(4, 2));
    CHECK(g.edges() == std::vector<Edge>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}});
    CHECK_FALSE(contains(g, build_pattern(natural_path(3, 4))));
}

TEST_CASE("hypergraph_to_labeling longest-path DP") {
    const Labeling zero = hypergraph_to_labeling(OrderedHypergraph::edgeless(4, 3), 4);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) CHECK(zero.at(u, v) == 1); // native 0, stored +1

    const Labeling one = hypergraph_to_labeling(OrderedHypergraph(3, 3, {{1, 2, 3}}), 4);
    CHECK(one.at(1, 2) == 1);
    CHECK(one.at(2, 3) == 2);
    CHECK(one.at(1, 3) == 1);

    // a host containing the forbidden path is rejected with the embedding
    CHECK_THROWS_AS(hypergraph_to_labeling(OrderedHypergraph::complete(5, 3), 4),
                    PatternFoundError);
    try {
        hypergraph_to_labeling(OrderedHypergraph::complete(5, 3), 4);
    } catch (const PatternFoundError& e) {
        CHECK(e.embedding == std::vector<int>{1, 2, 3, 4});
    }

    // round trip: relabeling the good-triple hypergraph of a labeling keeps
    // every edge good
    const Labeling even = even_construction(6, 2);
    const OrderedHypergraph g = labeling_to_hypergraph(even);
    const Labeling relabeled = hypergraph_to_labeling(g, 4);
    CHECK(cost(relabeled).good >= g.edge_count());
}

TEST_CASE("odd construction") {
    const Labeling phi = odd_construction(6, 3);
    CHECK(is_monotone(phi));
    CHECK(cost(phi).bad == 2);

    // bad count equals the within-part closed form for all n, k
    for (int n : {5, 9, 14})
        for (int k : {1, 3, 5}) {
            const Labeling f = odd_construction(n, k);
            CHECK(is_monotone(f));
            std::uint64_t bad = 0;
            for (int len : odd_construction_partition(n, k).lengths) bad += binom(len, 3);
            CHECK(cost(f).bad == bad);
        }

    CHECK(cost(odd_construction(120, 3)).bad == 68440);
    CHECK(cost(odd_construction(7, 1)).bad == binom(7, 3));
    CHECK_THROWS_AS(odd_construction(6, 2), std::invalid_argument);
}

TEST_CASE("even construction") {
    const Labeling phi = even_construction(4, 2);
    CHECK(phi.at(1, 2) == 1);
    CHECK(phi.at(1, 3) == 1);
    CHECK(phi.at(1, 4) == 2);
    CHECK(phi.at(2, 3) == 2);
    CHECK(phi.at(2, 4) == 2);
    CHECK(phi.at(3, 4) == 2);
    CHECK(cost(phi).bad == 1);
    CHECK(cost(phi).good == 3);

    // monotone on every tested instance (asserted per instance)
    for (int n : {7, 12, 30, 61})
        for (int k : {2, 4, 6}) CHECK(is_monotone(even_construction(n, k)));

    // part sizes approach j/(t(t+1)) and (t-j)/(t(t+1))
    const int n = 6000, k = 4, t = 2;
    const IntervalPartition parts = even_construction_partition(n, k);
    REQUIRE(parts.parts() == 4);
    CHECK(make_rat(parts.lengths[0], n) == make_rat(t - 0, t * (t + 1))); // X_1, odd index j=0
    CHECK(make_rat(parts.lengths[1], n) == make_rat(1, t * (t + 1)));     // X_2, even index j=1
    CHECK(make_rat(parts.lengths[2], n) == make_rat(t - 1, t * (t + 1)));
    CHECK(make_rat(parts.lengths[3], n) == make_rat(2, t * (t + 1)));

    CHECK_THROWS_AS(even_construction(6, 3), std::invalid_argument);
}

TEST_CASE("badcount prediction") {
    CHECK(badcount_prediction(0, 1, 0, 10) == Rat(binom(10, 3)));
    CHECK(badcount_prediction(make_rat(1, 3), 0, make_rat(1, 2), 10) == 0);
    // k = 2 halves: the two parts together predict half the triples
    const Rat part = badcount_prediction(0, make_rat(1, 2), make_rat(1, 2), 200);
    CHECK(part * 2 == Rat(binom(200, 3)) / 2);

    // measured per-part bads approach the prediction
    for (const PartBadRow& row : even_construction_part_bads(200, 2)) {
        const Rat measured(static_cast<unsigned long>(row.measured));
        CHECK(abs(measured - row.predicted) * 10 <= row.predicted);
    }
}

TEST_CASE("profile of a monotone labeling") {
    const LabelProfile prof = profile(even_construction(4, 2));
    CHECK(prof.phi_left == std::vector<int>{0, 0, 1, 2, 2});  // 1-indexed
    CHECK(prof.phi_right == std::vector<int>{0, 1, 2, 2, 3});
    CHECK(prof.parts.lengths == std::vector<int>{1, 1, 2, 0});
    CHECK(prof.parts_hat.lengths == std::vector<int>{0, 1, 2, 1});

    // partition similarity holds for all monotone labelings, not just optima
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        const Labeling phi = random_monotone(7, 3, rng);
        REQUIRE(is_monotone(phi));
        const LabelProfile p = profile(phi);
        int startL = 1, startR = 1;
        for (int i = 0; i <= phi.k() + 1; ++i) {
            const int endL = startL + p.parts.lengths[i];
            const int endR = startR + p.parts_hat.lengths[i];
            const int overlap = std::max(0, std::min(endL, endR) - std::max(startL, startR));
            CHECK(p.parts.lengths[i] + p.parts_hat.lengths[i] - 2 * overlap <= 2);
            startL = endL;
            startR = endR;
        }
        // monotone sandwich between the profiles
        for (int u = 1; u < phi.n(); ++u)
            for (int v = u + 1; v <= phi.n(); ++v) {
                CHECK(p.phi_left[u] <= p.phi_right[u]);
                CHECK(p.phi_right[u] <= phi.at(u, v));
                CHECK(phi.at(u, v) <= p.phi_left[v]);
            }
    }

    Labeling bad(3, 2, 1);
    bad.set(1, 2, 2);
    bad.set(2, 3, 1);
    CHECK_THROWS_AS(profile(bad), NonMonotoneError);
    try {
        profile(bad);
    } catch (const NonMonotoneError& e) {
        CHECK(e.u == 1);
        CHECK(e.v == 2);
        CHECK(e.w == 3);
    }
}

TEST_CASE("reverse_invert") {
    Labeling phi(3, 2, 1);
    phi.set(1, 2, 1);
    phi.set(1, 3, 1);
    phi.set(2, 3, 2);
    const Labeling inv = reverse_invert(phi);
    CHECK(inv.at(1, 2) == 1);
    CHECK(inv.at(1, 3) == 2);
    CHECK(inv.at(2, 3) == 2);
    CHECK(cost(inv).bad == cost(phi).bad);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const Labeling f = random_monotone(6, 3, rng);
        CHECK(reverse_invert(reverse_invert(f)) == f);
        CHECK(cost(reverse_invert(f)).bad == cost(f).bad);
        CHECK(is_monotone(reverse_invert(f)));
        // part sizes conjugate: |X'_i| = |X^_{k+1-i}|
        const LabelProfile p = profile(f);
        const LabelProfile pr = profile(reverse_invert(f));
        for (int i = 0; i <= f.k() + 1; ++i)
            CHECK(pr.parts.lengths[i] == p.parts_hat.lengths[f.k() + 1 - i]);
    }

    const Labeling even = even_construction(4, 2);
    CHECK(cost(reverse_invert(even)).bad == 1);
}

TEST_CASE("k1 swap strictly improves") {
    Labeling phi(3, 2, 1);
    phi.set(1, 2, 2);
    phi.set(2, 3, 1);
    REQUIRE(has_k1_triple(phi));
    const auto improved = improve_k1_swap(phi);
    REQUIRE(improved.has_value());
    CHECK(cost(*improved).bad == 0);
    CHECK_FALSE(improve_k1_swap(Labeling(4, 2, 1)).has_value()); // no (k,1) triple

    // iterating the swap terminates by strict descent
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Labeling f(6, 3, 1);
        for (int u = 1; u <= 6; ++u)
            for (int v = u + 1; v <= 6; ++v) f.set(u, v, pick(rng));
        std::uint64_t previous = cost(f).bad;
        while (auto next = improve_k1_swap(f)) {
            const std::uint64_t now = cost(*next).bad;
            CHECK(now < previous);
            previous = now;
            f = *next;
        }
        CHECK_FALSE(has_k1_triple(f));
    }
}

TEST_CASE("density table rows") {
    const auto odd1 = density_table(ConstructionParity::Odd, 1, 5, 9, 2);
    REQUIRE(odd1.size() == 3);
    for (const DensityRow& row : odd1) {
        CHECK(row.fraction == 1);
        CHECK(row.limit == 1);
        CHECK(row.gap == 0);
    }
    const auto even2 = density_table(ConstructionParity::Even, 2, 4, 4);
    REQUIRE(even2.size() == 1);
    CHECK(even2.front().fraction == make_rat(1, 4));
    CHECK(even2.front().limit == make_rat(1, 2));
    CHECK(even2.front().gap == make_rat(-1, 4));

    // odd closed form agrees with the O(n^3) scan
    for (int n : {9, 17}) {
        const auto rows = density_table(ConstructionParity::Odd, 3, n, n);
        CHECK(rows.front().bad == cost(odd_construction(n, 3)).bad);
    }

    CHECK_THROWS_AS(density_table(ConstructionParity::Odd, 2, 4, 8), std::invalid_argument);
}
