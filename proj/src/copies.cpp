#include "ordpath/copies.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "ordpath/combinatorics.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

CopySet enumerate_copies(int n, const PatternSpec& spec, std::uint64_t max_copies) {
    validate(spec);
    CopySet cs;
    cs.n = n;
    cs.spec = spec;
    cs.universe = binom(n, spec.r);
    const std::uint64_t total = binom(n, spec.s);
    if (total > max_copies)
        throw ResourceLimitError("copy enumeration: " + std::to_string(total) + " copies of " +
                                     pattern_name(spec) + " in K(" + std::to_string(n) +
                                     ") exceed the cap " + std::to_string(max_copies),
                                 total, max_copies);
    if (spec.s > n) return cs; // no copies; reported, not an error

    const OrderedHypergraph pat = build_pattern(spec);
    // templates: pattern edges as 0-based position tuples
    std::vector<std::vector<int>> templates;
    templates.reserve(pat.edge_count());
    for (const Edge& e : pat.edges()) {
        std::vector<int> t(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] - 1;
        templates.push_back(std::move(t));
    }
    cs.edges_per_copy = templates.size();
    cs.copy_verts.reserve(total);
    cs.copy_edges.reserve(total);
    cs.edge_copies.assign(cs.universe, {});

    Edge img(spec.r);
    for_each_subset(n, spec.s, [&](const std::vector<int>& verts) {
        std::vector<std::uint32_t> ranks;
        ranks.reserve(templates.size());
        for (const auto& tpl : templates) {
            for (std::size_t i = 0; i < tpl.size(); ++i) img[i] = verts[tpl[i]];
            ranks.push_back(static_cast<std::uint32_t>(colex_rank(img)));
        }
        std::sort(ranks.begin(), ranks.end());
        const auto idx = static_cast<std::uint32_t>(cs.copy_verts.size());
        for (std::uint32_t rk : ranks) cs.edge_copies[rk].push_back(idx);
        cs.copy_verts.push_back(verts);
        cs.copy_edges.push_back(std::move(ranks));
    });
    return cs;
}

const CopySet& cached_copies(int n, const PatternSpec& spec, std::uint64_t max_copies) {
    validate(spec);
    const std::uint64_t total = binom(n, spec.s);
    if (total > max_copies)
        throw ResourceLimitError("copy enumeration: " + std::to_string(total) + " copies of " +
                                     pattern_name(spec) + " in K(" + std::to_string(n) +
                                     ") exceed the cap " + std::to_string(max_copies),
                                 total, max_copies);
    static std::mutex mutex;
    static std::map<std::tuple<int, int, int, int>, CopySet> cache;
    std::scoped_lock lock(mutex);
    const auto key = std::make_tuple(n, static_cast<int>(spec.kind), spec.r, spec.s);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, enumerate_copies(n, spec, max_copies)).first;
    return it->second;
}

} // namespace ordpath
