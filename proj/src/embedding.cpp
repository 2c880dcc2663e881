#include "ordpath/embedding.hpp"

#include <stdexcept>

namespace ordpath {

namespace {

struct Embedder {
    const OrderedHypergraph& host;
    const OrderedHypergraph& pattern;
    // pattern edges indexed by their maximum vertex, checked as soon as the
    // last vertex of the edge is mapped
    std::vector<std::vector<const Edge*>> by_max;
    std::vector<int> map; // pattern vertex i -> map[i-1]
    bool stopped = false;

    Embedder(const OrderedHypergraph& h, const OrderedHypergraph& p)
        : host(h), pattern(p), by_max(p.n() + 1), map(p.n()) {
        if (h.r() != p.r())
            throw std::invalid_argument("find_embedding: uniformity mismatch");
        for (const Edge& e : p.edges()) by_max[e.back()].push_back(&e);
    }

    bool edge_ok(int v) const {
        Edge img(pattern.r());
        for (const Edge* e : by_max[v]) {
            for (int i = 0; i < pattern.r(); ++i) img[i] = map[(*e)[i] - 1];
            if (!host.has_edge(img)) return false;
        }
        return true;
    }

    void run(int v, int lowest, const std::function<bool(const std::vector<int>&)>& visit) {
        if (stopped) return;
        const int s = pattern.n();
        if (v > s) {
            if (!visit(map)) stopped = true;
            return;
        }
        // leave room for the s-v vertices still to be placed
        for (int hv = lowest; hv <= host.n() - (s - v); ++hv) {
            map[v - 1] = hv;
            if (edge_ok(v)) run(v + 1, hv + 1, visit);
            if (stopped) return;
        }
    }
};

} // namespace

void for_each_embedding(const OrderedHypergraph& host, const OrderedHypergraph& pattern,
                        const std::function<bool(const std::vector<int>&)>& visit) {
    Embedder emb(host, pattern);
    emb.run(1, 1, visit);
}

std::optional<std::vector<int>> find_embedding(const OrderedHypergraph& host,
                                               const OrderedHypergraph& pattern) {
    std::optional<std::vector<int>> out;
    for_each_embedding(host, pattern, [&](const std::vector<int>& image) {
        out = image;
        return false;
    });
    return out;
}

std::uint64_t count_embeddings(const OrderedHypergraph& host, const OrderedHypergraph& pattern) {
    std::uint64_t count = 0;
    for_each_embedding(host, pattern, [&](const std::vector<int>&) {
        ++count;
        return true;
    });
    return count;
}

bool contains(const OrderedHypergraph& host, const OrderedHypergraph& pattern) {
    return find_embedding(host, pattern).has_value();
}

} // namespace ordpath
