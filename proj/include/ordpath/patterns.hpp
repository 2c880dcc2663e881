#pragma once

#include <string>
#include <string_view>

#include "ordpath/hypergraph.hpp"

namespace ordpath {

enum class PatternKind { NaturalPath, LoosePath, CrossingPath, TightCycle, Complete };

/// A named parametric pattern on s vertices with uniformity r.
struct PatternSpec {
    PatternKind kind;
    int r;
    int s;

    bool operator==(const PatternSpec& o) const {
        return kind == o.kind && r == o.r && s == o.s;
    }
};

/// Throws std::invalid_argument when (kind, r, s) violates the invariants
/// (s >= r >= 1; loose paths additionally need r < s <= 2r-1).
void validate(const PatternSpec& spec);

/// The pattern on vertex set 1..s in its defining vertex order.
OrderedHypergraph build_pattern(const PatternSpec& spec);

PatternSpec natural_path(int r, int s);
PatternSpec loose_path(int r, int s);

std::string to_string(PatternKind kind);
PatternKind pattern_kind_from_string(std::string_view name);
std::string pattern_name(const PatternSpec& spec); // e.g. "natural-path(r=3,s=4)"

} // namespace ordpath
