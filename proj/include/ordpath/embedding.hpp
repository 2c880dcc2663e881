#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ordpath/hypergraph.hpp"

namespace ordpath {

/// Order-preserving embedding of pattern into host: a strictly increasing map
/// from pattern vertices 1..s to host vertices under which every pattern edge
/// lands on a host edge. Returns the lexicographically least embedding, or
/// nullopt. Throws std::invalid_argument on uniformity mismatch.
std::optional<std::vector<int>> find_embedding(const OrderedHypergraph& host,
                                               const OrderedHypergraph& pattern);

/// Calls visit for every embedding (as the image vertex tuple) in
/// lexicographic order; visit returning false stops the enumeration.
void for_each_embedding(const OrderedHypergraph& host, const OrderedHypergraph& pattern,
                        const std::function<bool(const std::vector<int>&)>& visit);

std::uint64_t count_embeddings(const OrderedHypergraph& host, const OrderedHypergraph& pattern);

bool contains(const OrderedHypergraph& host, const OrderedHypergraph& pattern);

} // namespace ordpath
