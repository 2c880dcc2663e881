#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordpath {

/// An instance exceeded a configured size or search budget.
struct ResourceLimitError : std::runtime_error {
    std::uint64_t requested = 0;
    std::uint64_t limit = 0;
    ResourceLimitError(const std::string& what, std::uint64_t requested_, std::uint64_t limit_)
        : std::runtime_error(what), requested(requested_), limit(limit_) {}
};

/// decode_generator reconstruction check failed: the edge is not part of any
/// packed copy.
struct DecodeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A precondition of the labeling module failed; carries the witness.
struct NonMonotoneError : std::domain_error {
    int u = 0, v = 0, w = 0; // phi(uv) > phi(vw)
    NonMonotoneError(const std::string& what, int u_, int v_, int w_)
        : std::domain_error(what), u(u_), v(v_), w(w_) {}
};

/// hypergraph_to_labeling called on a host that contains the forbidden path.
struct PatternFoundError : std::domain_error {
    std::vector<int> embedding; // host vertices of the found copy
    PatternFoundError(const std::string& what, std::vector<int> embedding_)
        : std::domain_error(what), embedding(std::move(embedding_)) {}
};

} // namespace ordpath
