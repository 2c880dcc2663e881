#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "ordpath/chain.hpp"
#include "ordpath/constructions.hpp"
#include "ordpath/hypergraph.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/lp.hpp"
#include "ordpath/oracle.hpp"
#include "ordpath/patterns.hpp"

namespace ordpath {

using Json = nlohmann::ordered_json;

// Hypergraph: {"n": int, "r": int, "edges": [[int,...],...]}, edges sorted.
Json to_json(const OrderedHypergraph& g);
OrderedHypergraph hypergraph_from_json(const Json& j);

Json to_json(const PatternSpec& spec);
PatternSpec pattern_from_json(const Json& j);

Json to_json(const EdgeWeighting& w);       // sparse, rationals as "p/q"
EdgeWeighting edge_weighting_from_json(const Json& j);

Json to_json(const CopyWeighting& w);
Json to_json(const LPOutcome& out, int n, const PatternSpec& pattern);

Json to_json(const BiasedTransversal& bt);
Json to_json(const PackingFamily& family);
PackingFamily packing_from_json(const Json& j);
Json to_json(const ExactResult& result);
Json to_json(const DualityChain& chain);

// Labeling CSV ("u,v,label" rows sorted by (u,v)) plus a metadata sidecar.
void write_labeling_csv(std::ostream& os, const Labeling& phi);
Labeling labeling_from_csv(std::istream& is, int n, int k);
Json labeling_metadata(const Labeling& phi, const std::string& construction);

std::string dump(const Json& j); // canonical two-space indented form

} // namespace ordpath
