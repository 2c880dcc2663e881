#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ordpath/combinatorics.hpp"
#include "ordpath/constructions.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"

using namespace ordpath;

namespace {

std::uint64_t h_or_zero(int n, int t, int m) {
    return (t < 0 || m > t) ? 0 : h_count(n, t, m);
}

} // namespace

TEST_CASE("h_count examples and modes") {
    CHECK(h_count(2, 1, 1) == 1);
    CHECK(h_count(6, 3, 2) == 2);
    CHECK(h_count(6, 2, 2) == 3);
    CHECK(h_count(6, 3, 3) == 1);
    CHECK(h_count(6, 2, 2, HMode::Enumerate) == 3);
    CHECK_THROWS_AS(h_count(5, 3, 2), std::invalid_argument); // odd n undefined
    CHECK_THROWS_AS(h_count(6, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(h_count(6, 3, 4), std::invalid_argument); // m > t

    for (int n = 2; n <= 12; n += 2)
        for (int t = 1; t <= 4; ++t)
            for (int m = 1; m <= t; ++m)
                CHECK(h_count(n, t, m, HMode::Formula) == h_count(n, t, m, HMode::Enumerate));
}

TEST_CASE("is_biased examples and reflection symmetry") {
    CHECK(is_biased({1, 2, 3}, 6, 2, BiasSide::Left));
    CHECK_FALSE(is_biased({1, 2, 5}, 6, 2, BiasSide::Left));
    // reflection maps left bias to right bias
    for_each_subset(6, 3, [&](const std::vector<int>& set) {
        std::vector<int> mirrored;
        for (auto it = set.rbegin(); it != set.rend(); ++it) mirrored.push_back(7 - *it);
        for (int m = 1; m <= 3; ++m)
            CHECK(is_biased(set, 6, m, BiasSide::Left) ==
                  is_biased(mirrored, 6, m, BiasSide::Right));
    });
    // the 1-sets counted by h(6,1,1) are exactly the left half
    CHECK(h_count(6, 1, 1) == 3);
}

TEST_CASE("biased transversal matches the counted sizes") {
    const BiasedTransversal small = biased_transversal(6, 3, 5);
    CHECK(small.graph.edges() == std::vector<Edge>{{1, 2, 3}, {4, 5, 6}});
    CHECK(small.e2.empty()); // m = r forces E2 empty
    CHECK(small.overlap == 0);

    const BiasedTransversal mid = biased_transversal(6, 3, 4);
    CHECK(mid.graph.edge_count() == 7);
    CHECK(mid.e1.size() == 2 * h_count(6, 3, 2));
    CHECK(mid.e2.size() == h_count(6, 2, 2));

    for (int n : {4, 6, 8})
        for (int r : {2, 3, 4})
            for (int s = r; s <= std::min(2 * r - 1, n); ++s) {
                const int m = s - r + 1;
                const BiasedTransversal bt = biased_transversal(n, r, s);
                CHECK(bt.e1.size() == 2 * h_count(n, r, m));
                CHECK(bt.e2.size() == h_or_zero(n, r - 1, m));
                CHECK(bt.overlap == 0);
                CHECK(bt.graph.edge_count() == bt.e1.size() + bt.e2.size());
            }

    CHECK_THROWS_AS(biased_transversal(5, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(biased_transversal(6, 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(biased_transversal(4, 3, 5), std::invalid_argument);
}

TEST_CASE("verify_transversal catches uncovered copies") {
    const BiasedTransversal bt = biased_transversal(6, 3, 5);
    CHECK(verify_transversal(bt.graph, natural_path(3, 5)).verified);
    CHECK(verify_transversal(bt.graph, loose_path(3, 5)).verified);

    const Certificate empty_cert =
        verify_transversal(OrderedHypergraph::edgeless(4, 3), natural_path(3, 4));
    CHECK_FALSE(empty_cert.verified);
    REQUIRE(empty_cert.counterexample.has_value());
    CHECK((*empty_cert.counterexample)["copy"] == nlohmann::ordered_json({1, 2, 3, 4}));

    CHECK(verify_transversal(OrderedHypergraph::complete(6, 3), natural_path(3, 4)).verified);
    CHECK(verify_transversal(OrderedHypergraph::complete(6, 3), natural_path(3, 7)).verified);

    // dropping any edge of a minimum transversal must break it
    const BiasedTransversal tight = biased_transversal(6, 3, 4);
    std::vector<Edge> edges = tight.graph.edges();
    edges.pop_back();
    CHECK_FALSE(verify_transversal(OrderedHypergraph(6, 3, edges), natural_path(3, 4)).verified);
}

TEST_CASE("canonical partition") {
    CHECK(canonical_partition({1, 2, 3}, 6, 5).lengths == std::vector<int>{2, 2, 2});
    CHECK(canonical_partition({4, 5, 6}, 6, 5).lengths == std::vector<int>{2, 2, 2});
    // s = r: both intersections empty, |X| maximal
    CHECK(canonical_partition({3, 4}, 8, 2).lengths == std::vector<int>{2, 4, 2});
    // non-biased edge rejected
    CHECK_THROWS_AS(canonical_partition({1, 6}, 6, 3), std::domain_error);

    // both characterizations agree on every construction edge
    for (int n : {6, 8})
        for (int r : {2, 3, 4})
            for (int s = r; s <= std::min(2 * r - 1, n); ++s) {
                const BiasedTransversal bt = biased_transversal(n, r, s);
                for (const Edge& e : bt.graph.edges())
                    CHECK_NOTHROW(canonical_partition(e, n, s));
            }
}

TEST_CASE("generate_packing spec examples") {
    const PackingFamily fam = generate_packing(6, 3, 5);
    REQUIRE(fam.members.size() == 2);
    CHECK(fam.members[0] == std::vector<int>{1, 2, 3, 5, 6});
    CHECK(fam.members[1] == std::vector<int>{1, 2, 4, 5, 6});
    CHECK(verify_packing(fam).verified);

    const PackingFamily seven = generate_packing(6, 3, 4);
    CHECK(seven.members.size() == 7);
    CHECK(verify_packing(seven).verified);

    // s = r: one single-edge copy per edge
    const PackingFamily trivial = generate_packing(6, 3, 3);
    CHECK(trivial.members.size() == binom(6, 3));
    for (std::size_t i = 0; i < trivial.members.size(); ++i)
        CHECK(trivial.members[i] == trivial.generators[i]);
}

TEST_CASE("decoder recovers the generator from every edge") {
    CHECK(decode_generator({2, 3, 5}, 6, 3, 5) == Edge{1, 2, 3});
    CHECK(decode_generator({4, 5, 6}, 6, 3, 5) == Edge{4, 5, 6});

    for (int n : {6, 8})
        for (int r : {2, 3, 4})
            for (int s = r; s <= std::min(2 * r - 1, n); ++s) {
                const PackingFamily fam = generate_packing(n, r, s);
                for (std::size_t i = 0; i < fam.members.size(); ++i) {
                    const auto& verts = fam.members[i];
                    for (int w = 0; w + r <= s; ++w) {
                        const Edge f(verts.begin() + w, verts.begin() + w + r);
                        CHECK(decode_generator(f, n, r, s) == fam.generators[i]);
                    }
                }
            }

    // an edge outside every packed copy decodes to an error
    CHECK_THROWS_AS(decode_generator({1, 4, 6}, 6, 3, 5), DecodeError);
}

TEST_CASE("flower packing") {
    const PackingFamily fam = flower_packing(8, 2, 4);
    CHECK(fam.members.size() == 6);
    CHECK(fam.members.front() == std::vector<int>{1, 2, 5, 6});
    CHECK(verify_packing(fam).verified);

    CHECK(flower_packing(12, 3, 6).members.size() == binom(6, 3));
    CHECK(verify_packing(flower_packing(12, 3, 6)).verified);

    CHECK(flower_recover({1, 2}, 8, 2, 4) == Edge{1, 2});
    CHECK(flower_recover({5, 6}, 8, 2, 4) == Edge{1, 2});
    CHECK(flower_recover({2, 5}, 8, 2, 4) == Edge{1, 2}); // crossing edge of P_{1,2}
    CHECK_THROWS_AS(flower_recover({1, 5}, 8, 2, 4), DecodeError);

    CHECK_THROWS_AS(flower_packing(8, 2, 5), std::invalid_argument); // r does not divide s
    CHECK_THROWS_AS(flower_packing(9, 2, 4), std::invalid_argument); // k does not divide n
    const PackingFamily padded = flower_packing(9, 2, 4, true);
    CHECK(padded.approximate);
    CHECK(padded.n == 8);
    CHECK(padded.members.size() == 6);
}

TEST_CASE("fractional transversal weights") {
    const EdgeWeighting w = fractional_transversal_weights(8, 2, 4);
    std::size_t positive = 0;
    for (const Rat& q : w.w)
        if (sgn(q) > 0) {
            CHECK(q == make_rat(1, 2));
            ++positive;
        }
    CHECK(positive == 12);
    CHECK(w.total() == 6);

    // copy weight evaluation under the two-part partition {1..4},{5..8}
    const auto copy_weight = [&](const std::vector<int>& verts) {
        Rat total = 0;
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            total += w.w[colex_rank({verts[i], verts[i + 1]})];
        return total;
    };
    CHECK(copy_weight({1, 2, 3, 4}) == make_rat(3, 2));
    CHECK(copy_weight({1, 5, 6, 8}) == 1);

    CHECK_THROWS_AS(fractional_transversal_weights(9, 2, 4), std::invalid_argument);
    CHECK(fractional_transversal_weights(9, 2, 4, true).approximate);
}

TEST_CASE("interval blowup") {
    const OrderedHypergraph g = interval_blowup(8, 3, 5);
    CHECK(g.edge_count() == 48);
    CHECK_FALSE(contains(g, build_pattern(natural_path(3, 5))));
    CHECK(interval_blowup(6, 2, 3).edge_count() == 9);
    CHECK_THROWS_AS(interval_blowup(8, 3, 6), std::invalid_argument);
}

TEST_CASE("typical/degenerate decomposition") {
    for (int n = 2; n <= 10; n += 2)
        for (int r = 1; r <= 3; ++r) {
            std::uint64_t degenerate = 0;
            std::uint64_t typical_biased = 0;
            const int m = std::min(2, r);
            for_each_subset(n, r, [&](const std::vector<int>& set) {
                if (is_degenerate_set(set, n))
                    ++degenerate;
                else if (is_biased(set, n, m, BiasSide::Left))
                    ++typical_biased;
            });
            CHECK(degenerate + (std::uint64_t{1} << r) * binom(n / 2, r) == binom(n, r));
            CHECK(typical_biased == (std::uint64_t{1} << (r - m)) * binom(n / 2, r));
        }
}
