#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ordpath/combinatorics.hpp"
#include "ordpath/copies.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/hypergraph.hpp"
#include "ordpath/intervals.hpp"
#include "ordpath/patterns.hpp"

using namespace ordpath;

namespace {

OrderedHypergraph random_hypergraph(int n, int r, double density, std::mt19937& rng) {
    std::bernoulli_distribution keep(density);
    std::vector<Edge> edges;
    for_each_subset(n, r, [&](const Edge& e) {
        if (keep(rng)) edges.push_back(e);
    });
    return OrderedHypergraph(n, r, std::move(edges));
}

// reference embedding test: try all increasing maps
bool brute_contains(const OrderedHypergraph& host, const OrderedHypergraph& pattern) {
    bool found = false;
    for_each_subset(host.n(), pattern.n(), [&](const std::vector<int>& verts) {
        if (found) return;
        bool ok = true;
        for (const Edge& e : pattern.edges()) {
            Edge img(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) img[i] = verts[e[i] - 1];
            if (!host.has_edge(img)) {
                ok = false;
                break;
            }
        }
        if (ok) found = true;
    });
    return found;
}

} // namespace

TEST_CASE("binomials and colex ranking") {
    CHECK(binom(6, 3) == 20);
    CHECK(binom(0, 0) == 1);
    CHECK(binom(5, 7) == 0);
    CHECK(binom(300, 3) == 4455100);
    // colex rank round trip over the full universe
    std::uint64_t expected = 0;
    for_each_subset(7, 3, [&](const Edge& e) {
        // lexicographic enumeration does not match colex rank order, so only
        // check the bijection
        const auto rank = colex_rank(e);
        CHECK(rank < binom(7, 3));
        CHECK(colex_unrank(rank, 3) == e);
        ++expected;
    });
    CHECK(expected == binom(7, 3));
    CHECK(colex_rank({1, 2, 3}) == 0);
    CHECK(colex_rank({2, 3}) == 2);
}

TEST_CASE("hypergraph invariants enforced") {
    CHECK_THROWS_AS(OrderedHypergraph(4, 3, {{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedHypergraph(4, 3, {{1, 2, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedHypergraph(4, 3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(OrderedHypergraph(4, 3, {{1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
    const OrderedHypergraph k43 = OrderedHypergraph::complete(4, 3);
    CHECK(k43.edge_count() == 4);
    CHECK(k43.has_edge({2, 3, 4}));
    CHECK_FALSE(OrderedHypergraph::edgeless(4, 3).has_edge({2, 3, 4}));
}

TEST_CASE("pattern generators match the definitions") {
    const OrderedHypergraph p34 = build_pattern(natural_path(3, 4));
    CHECK(p34.edges() == std::vector<Edge>{{1, 2, 3}, {2, 3, 4}});

    // natural path edge count is s-r+1
    for (int r = 2; r <= 4; ++r)
        for (int s = r; s <= r + 4; ++s)
            CHECK(build_pattern(natural_path(r, s)).edge_count() ==
                  static_cast<std::size_t>(s - r + 1));

    const OrderedHypergraph q24 = build_pattern({PatternKind::CrossingPath, 2, 4});
    CHECK(q24.edges() == std::vector<Edge>{{1, 3}, {2, 3}, {2, 4}});

    const OrderedHypergraph c34 = build_pattern({PatternKind::TightCycle, 3, 4});
    CHECK(c34.edges() == OrderedHypergraph::complete(4, 3).edges());

    const OrderedHypergraph lp35 = build_pattern(loose_path(3, 5));
    CHECK(lp35.edges() == std::vector<Edge>{{1, 2, 3}, {3, 4, 5}});

    CHECK_THROWS_AS(build_pattern(loose_path(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(build_pattern(loose_path(3, 6)), std::invalid_argument);
    CHECK_THROWS_AS(build_pattern(natural_path(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(build_pattern(natural_path(0, 2)), std::invalid_argument);
}

TEST_CASE("crossing paths are r-interval-partite, natural paths are not") {
    const auto q24_witness = interval_partite_witness(build_pattern({PatternKind::CrossingPath, 2, 4}));
    REQUIRE(q24_witness.has_value());
    CHECK(q24_witness->lengths == std::vector<int>{2, 2});
    CHECK_FALSE(is_r_interval_partite(build_pattern(natural_path(3, 4))));
    CHECK(is_r_interval_partite(OrderedHypergraph(3, 3, {{1, 2, 3}})));
    for (int r = 2; r <= 3; ++r)
        for (int s = r + 1; s <= 2 * r + 2; ++s) {
            CHECK(is_r_interval_partite(build_pattern({PatternKind::CrossingPath, r, s})));
            CHECK_FALSE(is_r_interval_partite(build_pattern(natural_path(r, s))));
        }
}

TEST_CASE("find_embedding examples") {
    const OrderedHypergraph p34 = build_pattern(natural_path(3, 4));
    CHECK(find_embedding(OrderedHypergraph::complete(4, 3), p34) ==
          std::vector<int>{1, 2, 3, 4});
    const OrderedHypergraph host(4, 3, {{1, 2, 3}, {1, 2, 4}});
    CHECK_FALSE(find_embedding(host, p34).has_value());
    CHECK(count_embeddings(OrderedHypergraph::complete(6, 3), p34) == 15);
    CHECK(count_embeddings(OrderedHypergraph::complete(6, 3), p34) == binom(6, 4));
    CHECK_THROWS_AS(find_embedding(OrderedHypergraph::complete(4, 2), p34),
                    std::invalid_argument);
}

TEST_CASE("embedding soundness and completeness on random instances") {
    std::mt19937 rng(20240811);
    const OrderedHypergraph p34 = build_pattern(natural_path(3, 4));
    const OrderedHypergraph q23 = build_pattern({PatternKind::CrossingPath, 2, 3});
    for (int trial = 0; trial < 40; ++trial) {
        const OrderedHypergraph host3 = random_hypergraph(7, 3, 0.5, rng);
        const auto embedding = find_embedding(host3, p34);
        CHECK(embedding.has_value() == brute_contains(host3, p34));
        if (embedding) {
            // returned map is verified: every pattern edge lands in the host
            for (const Edge& e : p34.edges()) {
                Edge img(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) img[i] = (*embedding)[e[i] - 1];
                CHECK(host3.has_edge(img));
            }
        }
        const OrderedHypergraph host2 = random_hypergraph(8, 2, 0.4, rng);
        CHECK(find_embedding(host2, q23).has_value() == brute_contains(host2, q23));
    }
}

TEST_CASE("embedding count invariant under reversal of the host") {
    std::mt19937 rng(7);
    const OrderedHypergraph p34 = build_pattern(natural_path(3, 4));
    for (int trial = 0; trial < 20; ++trial) {
        const OrderedHypergraph host = random_hypergraph(7, 3, 0.6, rng);
        CHECK(count_embeddings(host, p34) == count_embeddings(reflect_hypergraph(host), p34));
    }
}

TEST_CASE("interval chromatic number greedy equals exhaustive") {
    CHECK(interval_chromatic_number(OrderedHypergraph::edgeless(5, 2)) == 1);
    CHECK(interval_chromatic_number(OrderedHypergraph(2, 2, {{1, 2}})) == 2);
    CHECK(interval_chromatic_number(OrderedHypergraph::complete(5, 2)) == 5);
    CHECK_THROWS_AS(interval_chromatic_number(OrderedHypergraph::complete(4, 3)),
                    std::invalid_argument);

    // exhaustive reference: minimum over all interval partitions with
    // independent parts, enumerated via boundary subsets
    const auto exhaustive = [](const OrderedHypergraph& g) {
        const int n = g.n();
        int best = n;
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<int> boundary{0};
            for (int i = 1; i < n; ++i)
                if (mask & (1u << (i - 1))) boundary.push_back(i);
            boundary.push_back(n);
            bool ok = true;
            for (const Edge& e : g.edges()) {
                for (std::size_t b = 0; ok && b + 1 < boundary.size(); ++b)
                    if (e[0] > boundary[b] && e[1] <= boundary[b + 1]) ok = false;
            }
            if (ok) best = std::min(best, static_cast<int>(boundary.size()) - 1);
        }
        return best;
    };
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const OrderedHypergraph g = random_hypergraph(7, 2, 0.35, rng);
        CHECK(interval_chromatic_number(g) == exhaustive(g));
    }
}

TEST_CASE("reflect and translate") {
    CHECK(reflect(1, 6) == 6);
    CHECK(reflect(4, 6) == 3);
    for (int u = 1; u <= 9; ++u) CHECK(reflect(reflect(u, 9), 9) == u);
    CHECK_THROWS_AS(reflect(0, 6), std::out_of_range);
    CHECK_THROWS_AS(reflect(7, 6), std::out_of_range);
    CHECK(translate({1, 2}, 4, 6) == std::vector<int>{5, 6});
    CHECK(translate(translate({2, 4}, 2, 8), -2, 8) == std::vector<int>{2, 4});
    CHECK_THROWS_AS(translate({5, 6}, 1, 6), std::out_of_range);
    CHECK_THROWS_AS(translate({1}, -1, 6), std::out_of_range);
}

TEST_CASE("closed-form copy enumeration agrees with the embedding backtracker") {
    // inside the complete host every pattern has one copy per s-subset; the
    // generic enumerator must agree with that closed form
    for (int n : {5, 6, 7})
        for (const PatternSpec spec :
             {natural_path(3, 4), natural_path(2, 4), loose_path(3, 5),
              PatternSpec{PatternKind::CrossingPath, 2, 4},
              PatternSpec{PatternKind::TightCycle, 3, 5},
              PatternSpec{PatternKind::Complete, 3, 4}}) {
            if (spec.s > n) continue;
            const OrderedHypergraph host = OrderedHypergraph::complete(n, spec.r);
            CHECK(count_embeddings(host, build_pattern(spec)) == binom(n, spec.s));
        }
}

TEST_CASE("interval partition helpers") {
    const IntervalPartition p = balanced_partition(10, 3);
    CHECK(p.lengths == std::vector<int>{3, 3, 4});
    CHECK(p.n() == 10);
    CHECK(p.part_of(1) == 0);
    CHECK(p.part_of(4) == 1);
    CHECK(p.part_of(10) == 2);
    CHECK(p.part_begin(2) == 7);
}
