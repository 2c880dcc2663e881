#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ordpath/chain.hpp"
#include "ordpath/combinatorics.hpp"
#include "ordpath/constructions.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/lp.hpp"
#include "ordpath/oracle.hpp"

using namespace ordpath;

namespace {

bool hits_every_copy(const std::vector<Edge>& edges, int n, const PatternSpec& pattern) {
    return verify_transversal(OrderedHypergraph(n, pattern.r, edges), pattern).verified;
}

} // namespace

TEST_CASE("exact tau spot values with verified witnesses") {
    const ExactResult one = exact_tau(4, natural_path(3, 4));
    CHECK(one.value == 1);
    CHECK(one.optimal);
    CHECK(one.witness_edges == std::vector<Edge>{{1, 2, 3}}); // lex-min by colex rank

    const ExactResult seven = exact_tau(6, natural_path(3, 4));
    CHECK(seven.value == 7);
    CHECK(hits_every_copy(seven.witness_edges, 6, natural_path(3, 4)));

    const ExactResult two = exact_tau(6, natural_path(3, 5));
    CHECK(two.value == 2);
    CHECK(hits_every_copy(two.witness_edges, 6, natural_path(3, 5)));
    // no single edge hits all six copies
    bool single_suffices = false;
    for_each_subset(6, 3, [&](const Edge& e) {
        if (hits_every_copy({e}, 6, natural_path(3, 5))) single_suffices = true;
    });
    CHECK_FALSE(single_suffices);

    // pattern too large to fit: nothing to hit
    CHECK(exact_tau(4, natural_path(3, 6)).value == 0);
}

TEST_CASE("exact nu spot values with disjoint witnesses") {
    const ExactResult nu = exact_nu(6, natural_path(3, 4));
    CHECK(nu.value == 7);
    PackingFamily family;
    family.n = 6;
    family.r = 3;
    family.s = 4;
    family.members = nu.witness_copies;
    family.generators.assign(nu.witness_copies.size(), {});
    CHECK(verify_packing(family).verified);

    CHECK(exact_nu(6, natural_path(3, 5)).value == 2);
    CHECK(exact_nu(4, natural_path(3, 4)).value == 1);

    // matching-shaped instance that needs the LP-guided branch order
    const ExactResult big = exact_nu(10, natural_path(2, 3));
    CHECK(big.optimal);
    CHECK(big.value == 20);
}

TEST_CASE("exact ex via complementarity and direct search") {
    const ExactResult ex = exact_ex(6, natural_path(3, 4));
    CHECK(ex.value == 13);
    CHECK(ex.witness_edges.size() == 13);
    CHECK_FALSE(contains(OrderedHypergraph(6, 3, ex.witness_edges),
                         build_pattern(natural_path(3, 4))));

    CHECK(exact_ex(6, natural_path(3, 5)).value == 18);
    CHECK(exact_ex(4, natural_path(3, 6)).value == binom(4, 3));
    CHECK(exact_ex_direct(6, natural_path(3, 4)) == 13);
    CHECK_THROWS_AS(exact_ex_direct(10, natural_path(3, 4)), ResourceLimitError);
}

TEST_CASE("complementarity and duality chain on a small sweep") {
    for (int n = 4; n <= 7; ++n)
        for (int s : {4, 5}) {
            if (s > n) continue;
            const PatternSpec pattern = natural_path(3, s);
            const ExactResult tau = exact_tau(n, pattern);
            const ExactResult nu = exact_nu(n, pattern);
            const ExactResult ex = exact_ex(n, pattern);
            CHECK(ex.value + tau.value == binom(n, 3));
            CHECK(nu.value <= tau.value);
            const LPOutcome lp = solve_fractional(n, pattern);
            CHECK(Rat(static_cast<unsigned long>(nu.value)) <= lp.value);
            CHECK(lp.value <= Rat(static_cast<unsigned long>(tau.value)));
        }
}

TEST_CASE("oracle results are deterministic across repeated runs") {
    const ExactResult a = exact_tau(6, natural_path(3, 4));
    const ExactResult b = exact_tau(6, natural_path(3, 4));
    CHECK(a.value == b.value);
    CHECK(a.witness_edges == b.witness_edges);
    const ExactResult fa = exact_f(5, 3);
    const ExactResult fb = exact_f(5, 3);
    REQUIRE(fa.witness_labeling.has_value());
    CHECK(*fa.witness_labeling == *fb.witness_labeling);
}

TEST_CASE("budget exhaustion reports bounds instead of lying") {
    SearchBudget tiny;
    tiny.node_limit = 3;
    const ExactResult res = exact_tau(8, natural_path(3, 4), tiny);
    CHECK_FALSE(res.optimal);
    CHECK(res.lower_bound <= 22);
    CHECK(res.upper_bound >= 22);
}

TEST_CASE("exact f values and witnesses") {
    CHECK(exact_f(3, 1).value == 0);
    CHECK(exact_f(4, 2).value == 3);
    for (int n : {4, 5}) CHECK(exact_f(n, n - 1).value == binom(n, 3));

    const ExactResult f = exact_f(4, 2);
    REQUIRE(f.witness_labeling.has_value());
    CHECK(cost(*f.witness_labeling).good == 3);

    // symmetry reduction must not change the value
    SearchBudget plain;
    plain.symmetry_reduction = false;
    for (int n : {4, 5, 6})
        for (int k : {2, 3}) CHECK(exact_f(n, k).value == exact_f(n, k, plain).value);

    // monotone restriction can only lower the optimum
    for (int n : {4, 5, 6})
        for (int k : {2, 3}) CHECK(exact_f(n, k, {}, true).value <= exact_f(n, k).value);
}

TEST_CASE("equivalence between ex and f on small instances") {
    for (int n = 4; n <= 6; ++n)
        for (int s : {4, 5}) {
            if (s > n) continue;
            CHECK(exact_ex(n, natural_path(3, s)).value == exact_f(n, s - 2).value);
        }
    // the good-triple hypergraph of any optimal labeling is pattern-free with
    // exactly f(n, s-2) edges
    const ExactResult f = exact_f(6, 2);
    const OrderedHypergraph g = labeling_to_hypergraph(*f.witness_labeling);
    CHECK(g.edge_count() == f.value);
    CHECK_FALSE(contains(g, build_pattern(natural_path(3, 4))));
}

TEST_CASE("optimal labeling enumeration matches brute force") {
    // brute-force count of optimal 2-labelings of K_4: 64 labelings scanned
    const std::size_t pairs = pair_count(4);
    std::uint64_t brute = 0;
    for (std::uint32_t code = 0; code < (1u << pairs); ++code) {
        Labeling phi(4, 2);
        std::size_t p = 0;
        for (int v = 2; v <= 4; ++v)
            for (int u = 1; u < v; ++u) phi.set(u, v, (code >> p++ & 1) + 1);
        if (cost(phi).good == 3) ++brute;
    }
    std::uint64_t streamed = 0;
    for_each_optimal_labeling(4, 2, false, 3, [&](const Labeling& phi) {
        CHECK(cost(phi).good == 3);
        ++streamed;
        return true;
    });
    CHECK(streamed == brute);

    // early stop is honored
    std::uint64_t seen = 0;
    for_each_optimal_labeling(4, 2, false, 3, [&](const Labeling&) {
        ++seen;
        return false;
    });
    CHECK(seen == 1);
}

TEST_CASE("structure certificates for optima") {
    const ExactResult f = exact_f(4, 2);
    CHECK(check_optimum_structure(f).verified); // no (2,1) triple in the witness

    const ExactResult mono = exact_f(6, 3, {}, true);
    const Certificate cert = check_optimum_structure(mono);
    CHECK(cert.verified);
    CHECK(cert.parameters.contains("odd_construction_bad"));

    const ExactResult k1 = exact_f(4, 1);
    CHECK(check_optimum_structure(k1).verified); // k = 1 passes trivially

    // a labeling with a (k,1) triple is reported as a finding, not an error
    ExactResult doctored = f;
    Labeling bad(4, 2, 1);
    bad.set(1, 2, 2);
    bad.set(2, 3, 1);
    doctored.witness_labeling = bad;
    const Certificate finding = check_optimum_structure(doctored);
    CHECK_FALSE(finding.verified);
    REQUIRE(finding.counterexample.has_value());
}
