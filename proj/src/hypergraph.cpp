#include "ordpath/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"
#include "ordpath/intervals.hpp"

namespace ordpath {

OrderedHypergraph::OrderedHypergraph(int n, int r, std::vector<Edge> edges)
    : n_(n), r_(r), edges_(std::move(edges)) {
    if (n < 0 || r < 0) throw std::invalid_argument("hypergraph: n and r must be nonnegative");
    for (const Edge& e : edges_) {
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("hypergraph: edge arity differs from r");
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 1 || e[i] > n)
                throw std::invalid_argument("hypergraph: vertex out of range 1..n");
            if (i > 0 && e[i] <= e[i - 1])
                throw std::invalid_argument("hypergraph: edge not strictly increasing");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("hypergraph: duplicate edge");
    mask_.assign(binom(n, r), false);
    for (const Edge& e : edges_) mask_[colex_rank(e)] = true;
}

OrderedHypergraph OrderedHypergraph::complete(int n, int r) {
    std::vector<Edge> edges;
    edges.reserve(binom(n, r));
    for_each_subset(n, r, [&](const Edge& e) { edges.push_back(e); });
    return OrderedHypergraph(n, r, std::move(edges));
}

OrderedHypergraph OrderedHypergraph::edgeless(int n, int r) {
    return OrderedHypergraph(n, r, {});
}

bool OrderedHypergraph::has_edge(const Edge& e) const {
    if (static_cast<int>(e.size()) != r_) return false;
    return mask_[colex_rank(e)];
}

OrderedHypergraph reflect_hypergraph(const OrderedHypergraph& g) {
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        Edge img(e.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            img[e.size() - 1 - i] = reflect(e[i], g.n());
        edges.push_back(std::move(img));
    }
    return OrderedHypergraph(g.n(), g.r(), std::move(edges));
}

} // namespace ordpath
