#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ordpath/constructions.hpp"
#include "ordpath/io.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/lp.hpp"
#include "ordpath/oracle.hpp"
#include "ordpath/report.hpp"

using namespace ordpath;

TEST_CASE("rational rendering round trips") {
    CHECK(rat_to_string(Rat(7)) == "7");
    CHECK(rat_to_string(make_rat(1, 2)) == "1/2");
    CHECK(rat_to_string(Rat(-3, 9)) == "-1/3");
    for (const char* text : {"0", "7", "-12", "1/2", "-5/8", "22/7"})
        CHECK(rat_to_string(rat_from_string(text)) == text);
    CHECK_THROWS_AS(rat_from_string("seven"), std::invalid_argument);
    CHECK(rat_ceil(make_rat(7, 3)) == 3);
    CHECK(rat_ceil(make_rat(-7, 3)) == -2);
    CHECK(rat_ceil(Rat(4)) == 4);
}

TEST_CASE("hypergraph json round trip is bit-exact") {
    const BiasedTransversal bt = biased_transversal(6, 3, 4);
    const Json j = to_json(bt.graph);
    const OrderedHypergraph parsed = hypergraph_from_json(j);
    CHECK(parsed == bt.graph);
    CHECK(dump(to_json(parsed)) == dump(j));

    const Json literal = Json::parse(R"({"n": 4, "r": 3, "edges": [[1,2,3],[2,3,4]]})");
    CHECK(hypergraph_from_json(literal).edge_count() == 2);
    CHECK_THROWS_AS(hypergraph_from_json(Json::parse(R"({"n":4,"r":3,"edges":[[3,2,1]]})")),
                    std::invalid_argument);
}

TEST_CASE("pattern and certificate json") {
    const PatternSpec spec = natural_path(3, 5);
    CHECK(pattern_from_json(to_json(spec)) == spec);
    const Certificate cert = verify_transversal(OrderedHypergraph::edgeless(4, 3),
                                                natural_path(3, 4));
    const Certificate parsed = certificate_from_json(to_json(cert));
    CHECK(parsed.claim == cert.claim);
    CHECK(parsed.verified == cert.verified);
    REQUIRE(parsed.counterexample.has_value());
    CHECK(*parsed.counterexample == *cert.counterexample);
}

TEST_CASE("edge weighting json keeps exact rationals") {
    const EdgeWeighting w = fractional_transversal_weights(8, 2, 4);
    const EdgeWeighting parsed = edge_weighting_from_json(to_json(w));
    CHECK(parsed.n == w.n);
    CHECK(parsed.w == w.w);
    CHECK(parsed.total() == 6);
}

TEST_CASE("lp outcome json carries p/q strings") {
    const LPOutcome out = solve_fractional(6, natural_path(3, 4));
    const Json j = to_json(out, 6, natural_path(3, 4));
    CHECK(j["value"] == "7");
    CHECK(j["status"] == "optimal");
    CHECK(j["primal"]["total"] == "7");
}

TEST_CASE("exact result json") {
    const Json tau = to_json(exact_tau(4, natural_path(3, 4)));
    CHECK(tau["quantity"] == "tau");
    CHECK(tau["value"] == 1);
    CHECK(tau["status"] == "optimal");
    CHECK(tau["witness_edges"].size() == 1);

    SearchBudget tiny;
    tiny.node_limit = 2;
    const Json bounded = to_json(exact_tau(8, natural_path(3, 4), tiny));
    CHECK(bounded["status"] == "bounded");
    CHECK(bounded.contains("lower_bound"));
    CHECK(bounded.contains("upper_bound"));
}

TEST_CASE("labeling csv round trip") {
    const Labeling phi = even_construction(5, 2);
    std::ostringstream os;
    write_labeling_csv(os, phi);
    std::istringstream is(os.str());
    CHECK(labeling_from_csv(is, 5, 2) == phi);

    std::istringstream missing("u,v,label\n1,2,1\n");
    CHECK_THROWS_AS(labeling_from_csv(missing, 5, 2), std::invalid_argument);
    std::istringstream garbled("u,v\n");
    CHECK_THROWS_AS(labeling_from_csv(garbled, 5, 2), std::invalid_argument);

    const Json meta = labeling_metadata(phi, "even");
    CHECK(meta["intermediate_label_rule"] == "i+1");
    CHECK(meta["partition"].size() == 2);
    CHECK(meta["monotone"] == true);
}

TEST_CASE("density csv emits rational and float columns") {
    std::ostringstream os;
    write_density_csv(os, density_table(ConstructionParity::Even, 2, 4, 4));
    const std::string text = os.str();
    CHECK(text.find("n,bad,fraction,fraction_float,limit,limit_float,gap,gap_float") == 0);
    CHECK(text.find("4,1,1/4,") != std::string::npos);
    CHECK(text.find(",1/2,") != std::string::npos);
}
