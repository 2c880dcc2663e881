#include "ordpath/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"

namespace ordpath {

Json to_json(const OrderedHypergraph& g) {
    return Json{{"n", g.n()}, {"r", g.r()}, {"edges", g.edges()}};
}

OrderedHypergraph hypergraph_from_json(const Json& j) {
    return OrderedHypergraph(j.at("n").get<int>(), j.at("r").get<int>(),
                             j.at("edges").get<std::vector<Edge>>());
}

Json to_json(const PatternSpec& spec) {
    return Json{{"kind", to_string(spec.kind)}, {"r", spec.r}, {"s", spec.s}};
}

PatternSpec pattern_from_json(const Json& j) {
    return PatternSpec{pattern_kind_from_string(j.at("kind").get<std::string>()),
                       j.at("r").get<int>(), j.at("s").get<int>()};
}

Json to_json(const EdgeWeighting& w) {
    Json entries = Json::array();
    for (std::size_t rank = 0; rank < w.w.size(); ++rank)
        if (sgn(w.w[rank]) != 0)
            entries.push_back(Json{{"edge", colex_unrank(rank, w.r)},
                                   {"w", rat_to_string(w.w[rank])}});
    return Json{{"n", w.n},
                {"r", w.r},
                {"approximate", w.approximate},
                {"total", rat_to_string(w.total())},
                {"weights", entries}};
}

EdgeWeighting edge_weighting_from_json(const Json& j) {
    EdgeWeighting w;
    w.n = j.at("n").get<int>();
    w.r = j.at("r").get<int>();
    w.approximate = j.value("approximate", false);
    w.w.assign(binom(w.n, w.r), Rat(0));
    for (const Json& entry : j.at("weights")) {
        const Edge e = entry.at("edge").get<Edge>();
        w.w[colex_rank(e)] = rat_from_string(entry.at("w").get<std::string>());
    }
    return w;
}

Json to_json(const CopyWeighting& w) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < w.copies.size(); ++i)
        if (sgn(w.w[i]) != 0)
            entries.push_back(Json{{"copy", w.copies[i]}, {"w", rat_to_string(w.w[i])}});
    return Json{{"n", w.n},
                {"pattern", to_json(w.spec)},
                {"total", rat_to_string(w.total())},
                {"weights", entries}};
}

Json to_json(const LPOutcome& out, int n, const PatternSpec& pattern) {
    return Json{{"n", n},
                {"pattern", to_json(pattern)},
                {"status", out.status == LPStatus::Optimal ? "optimal" : "optimal-no-copies"},
                {"value", rat_to_string(out.value)},
                {"copies", out.copy_count},
                {"pivots", out.pivots},
                {"primal", to_json(out.primal)},
                {"dual", to_json(out.dual)}};
}

Json to_json(const BiasedTransversal& bt) {
    return Json{{"n", bt.n},
                {"r", bt.r},
                {"s", bt.s},
                {"m", bt.m},
                {"e1_size", bt.e1.size()},
                {"e2_size", bt.e2.size()},
                {"overlap", bt.overlap},
                {"graph", to_json(bt.graph)}};
}

Json to_json(const PackingFamily& family) {
    return Json{{"n", family.n},
                {"r", family.r},
                {"s", family.s},
                {"approximate", family.approximate},
                {"size", family.members.size()},
                {"generators", family.generators},
                {"members", family.members}};
}

PackingFamily packing_from_json(const Json& j) {
    PackingFamily family;
    family.n = j.at("n").get<int>();
    family.r = j.at("r").get<int>();
    family.s = j.at("s").get<int>();
    family.approximate = j.value("approximate", false);
    family.generators = j.at("generators").get<std::vector<Edge>>();
    family.members = j.at("members").get<std::vector<std::vector<int>>>();
    if (family.generators.size() != family.members.size())
        throw std::invalid_argument("packing json: generators and members differ in length");
    return family;
}

namespace {

const char* quantity_name(Quantity q) {
    switch (q) {
        case Quantity::Tau: return "tau";
        case Quantity::Nu: return "nu";
        case Quantity::Ex: return "ex";
        case Quantity::F: return "f";
        case Quantity::MonotoneF: return "monotone-f";
    }
    return "?";
}

} // namespace

Json to_json(const ExactResult& result) {
    Json j{{"quantity", quantity_name(result.quantity)}, {"n", result.n}};
    if (result.pattern) j["pattern"] = to_json(*result.pattern);
    if (result.quantity == Quantity::F || result.quantity == Quantity::MonotoneF)
        j["k"] = result.k;
    j["value"] = result.value;
    j["status"] = result.optimal ? "optimal" : "bounded";
    if (!result.optimal) {
        j["lower_bound"] = result.lower_bound;
        j["upper_bound"] = result.upper_bound;
    }
    j["nodes"] = result.nodes;
    if (!result.witness_edges.empty()) j["witness_edges"] = result.witness_edges;
    if (!result.witness_copies.empty()) j["witness_copies"] = result.witness_copies;
    if (result.witness_labeling) {
        std::ostringstream csv;
        write_labeling_csv(csv, *result.witness_labeling);
        j["witness_labeling"] = Json{{"n", result.witness_labeling->n()},
                                     {"k", result.witness_labeling->k()},
                                     {"csv", csv.str()}};
    }
    return j;
}

Json to_json(const DualityChain& chain) {
    return Json{{"n", chain.n},
                {"pattern", to_json(chain.pattern)},
                {"nu", to_json(chain.nu)},
                {"lp_value", rat_to_string(chain.lp_value)},
                {"tau", to_json(chain.tau)},
                {"chain_holds", chain.chain_holds},
                {"integrality_gap", rat_to_string(chain.integrality_gap)}};
}

void write_labeling_csv(std::ostream& os, const Labeling& phi) {
    os << "u,v,label\n";
    for (int u = 1; u <= phi.n(); ++u)
        for (int v = u + 1; v <= phi.n(); ++v)
            os << u << ',' << v << ',' << phi.at(u, v) << '\n';
}

Labeling labeling_from_csv(std::istream& is, int n, int k) {
    std::string line;
    if (!std::getline(is, line) || line != "u,v,label")
        throw std::invalid_argument("labeling csv: missing header");
    Labeling phi(n, k);
    std::size_t rows = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v, label;
        char c1, c2;
        if (!(ls >> u >> c1 >> v >> c2 >> label) || c1 != ',' || c2 != ',')
            throw std::invalid_argument("labeling csv: malformed row: " + line);
        phi.set(u, v, label);
        ++rows;
    }
    if (rows != pair_count(n))
        throw std::invalid_argument("labeling csv: expected one row per pair");
    return phi;
}

Json labeling_metadata(const Labeling& phi, const std::string& construction) {
    Json j{{"n", phi.n()},
           {"k", phi.k()},
           {"construction", construction},
           {"label_convention", "1..k"},
           {"monotone", is_monotone(phi)}}; // measured on this instance, never assumed
    if (construction == "odd") {
        j["part_sum_offset"] = 1; // stored label + 1 recovers the part-index sum i + j
        j["partition"] = odd_construction_partition(phi.n(), phi.k()).lengths;
    } else if (construction == "even") {
        j["intermediate_label_rule"] = "i+1";
        j["fractional_tie_rule"] = "sum <= 1 takes the lower label";
        j["partition"] = even_construction_partition(phi.n(), phi.k()).lengths;
    } else if (construction == "from-graph") {
        j["native_label_offset"] = -1; // stored label - 1 recovers the longest-path value
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace ordpath
