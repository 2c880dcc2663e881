#include "ordpath/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordpath {

void validate(const PatternSpec& spec) {
    if (spec.r < 1) throw std::invalid_argument("pattern: r must be >= 1");
    if (spec.s < spec.r) throw std::invalid_argument("pattern: s must be >= r");
    if (spec.kind == PatternKind::LoosePath) {
        if (spec.s <= spec.r || spec.s > 2 * spec.r - 1)
            throw std::invalid_argument(
                "loose path: requires r < s <= 2r-1 so both edges exist and differ");
    }
}

namespace {

OrderedHypergraph natural_path_graph(int r, int s) {
    std::vector<Edge> edges;
    for (int i = 1; i + r - 1 <= s; ++i) {
        Edge e(r);
        for (int j = 0; j < r; ++j) e[j] = i + j;
        edges.push_back(std::move(e));
    }
    return OrderedHypergraph(s, r, std::move(edges));
}

OrderedHypergraph loose_path_graph(int r, int s) {
    Edge first(r), last(r);
    for (int j = 0; j < r; ++j) {
        first[j] = 1 + j;
        last[j] = s - r + 1 + j;
    }
    return OrderedHypergraph(s, r, {first, last});
}

// Grid with r rows and ceil(s/r) columns, empty cells a suffix of the last
// column. Vertex ids are assigned row-major; edges are the r-windows of the
// column-major traversal.
OrderedHypergraph crossing_path_graph(int r, int s) {
    const int t = (s + r - 1) / r;      // columns
    const int last_col_rows = s - r * (t - 1);
    auto occupied = [&](int row, int col) { // 1-based
        return col < t || row <= last_col_rows;
    };
    // id[row][col] in row-major order
    std::vector<std::vector<int>> id(r + 1, std::vector<int>(t + 1, 0));
    int next = 1;
    for (int row = 1; row <= r; ++row)
        for (int col = 1; col <= t; ++col)
            if (occupied(row, col)) id[row][col] = next++;
    // column-major vertex sequence
    std::vector<int> seq;
    seq.reserve(s);
    for (int col = 1; col <= t; ++col)
        for (int row = 1; row <= r; ++row)
            if (occupied(row, col)) seq.push_back(id[row][col]);
    std::vector<Edge> edges;
    for (int i = 0; i + r <= s; ++i) {
        Edge e(seq.begin() + i, seq.begin() + i + r);
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    return OrderedHypergraph(s, r, std::move(edges));
}

OrderedHypergraph tight_cycle_graph(int r, int s) {
    std::vector<Edge> edges;
    for (int j = 0; j < s; ++j) {
        Edge e(r);
        for (int i = 0; i < r; ++i) e[i] = (j + i) % s + 1;
        std::sort(e.begin(), e.end());
        edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return OrderedHypergraph(s, r, std::move(edges));
}

} // namespace

OrderedHypergraph build_pattern(const PatternSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case PatternKind::NaturalPath: return natural_path_graph(spec.r, spec.s);
        case PatternKind::LoosePath: return loose_path_graph(spec.r, spec.s);
        case PatternKind::CrossingPath: return crossing_path_graph(spec.r, spec.s);
        case PatternKind::TightCycle: return tight_cycle_graph(spec.r, spec.s);
        case PatternKind::Complete: return OrderedHypergraph::complete(spec.s, spec.r);
    }
    throw std::logic_error("unreachable pattern kind");
}

PatternSpec natural_path(int r, int s) { return {PatternKind::NaturalPath, r, s}; }
PatternSpec loose_path(int r, int s) { return {PatternKind::LoosePath, r, s}; }

std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::NaturalPath: return "natural-path";
        case PatternKind::LoosePath: return "loose-path";
        case PatternKind::CrossingPath: return "crossing-path";
        case PatternKind::TightCycle: return "tight-cycle";
        case PatternKind::Complete: return "complete";
    }
    return "?";
}

PatternKind pattern_kind_from_string(std::string_view name) {
    if (name == "natural-path" || name == "natural") return PatternKind::NaturalPath;
    if (name == "loose-path" || name == "loose") return PatternKind::LoosePath;
    if (name == "crossing-path" || name == "crossing") return PatternKind::CrossingPath;
    if (name == "tight-cycle" || name == "cycle") return PatternKind::TightCycle;
    if (name == "complete") return PatternKind::Complete;
    throw std::invalid_argument("unknown pattern kind: " + std::string(name));
}

std::string pattern_name(const PatternSpec& spec) {
    return to_string(spec.kind) + "(r=" + std::to_string(spec.r) +
           ",s=" + std::to_string(spec.s) + ")";
}

} // namespace ordpath
