#pragma once

#include <iosfwd>
#include <vector>

#include "ordpath/labeling.hpp"
#include "ordpath/rational.hpp"

namespace ordpath {

enum class ConstructionParity { Odd, Even };

/// One row of the label-density table: measured bad-triple fraction of the
/// odd/even construction against the asymptotic limit 4/(k+1)^2 or 4/(k(k+2)).
struct DensityRow {
    int n = 0;
    std::uint64_t bad = 0;
    Rat fraction;
    Rat limit;
    Rat gap; // fraction - limit
};

/// Rejects parity mismatches between construction and k. Odd rows use the
/// closed form sum_i C(|X_i|,3); even rows use the O(n^3) triple scan.
std::vector<DensityRow> density_table(ConstructionParity parity, int k, int n_min, int n_max,
                                      int n_step = 1);

/// CSV with exact p/q columns next to float columns; the rational is authoritative.
void write_density_csv(std::ostream& os, const std::vector<DensityRow>& rows);

/// Measured vs predicted bad-triple counts per middle-vertex part for the even
/// construction (prediction (a+b)b(b+c)C(n,3) with the finite-n part fractions).
struct PartBadRow {
    int part = 0; // 1-based
    std::uint64_t measured = 0;
    Rat predicted;
};

std::vector<PartBadRow> even_construction_part_bads(int n, int k);

} // namespace ordpath
