#pragma once

#include <gmpxx.h>

#include <string>

namespace ordpath {

using Rat = mpq_class;

/// Renders p/q, or just p when q == 1.
std::string rat_to_string(const Rat& q);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rat rat_from_string(const std::string& s);

inline double rat_to_double(const Rat& q) { return q.get_d(); }

/// Smallest integer >= q.
Rat rat_ceil(const Rat& q);

/// num/den in canonical form. The two-argument mpq_class constructor does not
/// reduce, and GMP comparisons require canonical operands, so every ratio
/// formed from integers must go through here.
inline Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

} // namespace ordpath
