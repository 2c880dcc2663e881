#include "ordpath/report.hpp"

#include <ostream>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"

namespace ordpath {

std::vector<DensityRow> density_table(ConstructionParity parity, int k, int n_min, int n_max,
                                      int n_step) {
    if ((parity == ConstructionParity::Odd) != (k % 2 == 1))
        throw std::invalid_argument("density_table: construction parity does not match k");
    if (n_step < 1) throw std::invalid_argument("density_table: step must be positive");
    const Rat limit = parity == ConstructionParity::Odd ? Rat(4) / ((k + 1) * (k + 1))
                                                        : Rat(4) / (k * (k + 2));
    std::vector<DensityRow> rows;
    for (int n = n_min; n <= n_max; n += n_step) {
        if (n < 3) continue;
        DensityRow row;
        row.n = n;
        if (parity == ConstructionParity::Odd) {
            // bad triples of the odd construction are exactly the within-part ones
            for (int len : odd_construction_partition(n, k).lengths) row.bad += binom(len, 3);
        } else {
            row.bad = cost(even_construction(n, k)).bad;
        }
        row.fraction = Rat(static_cast<unsigned long>(row.bad)) / Rat(binom(n, 3));
        row.limit = limit;
        row.gap = row.fraction - limit;
        rows.push_back(row);
    }
    return rows;
}

void write_density_csv(std::ostream& os, const std::vector<DensityRow>& rows) {
    os << "n,bad,fraction,fraction_float,limit,limit_float,gap,gap_float\n";
    for (const DensityRow& row : rows) {
        os << row.n << ',' << row.bad << ',' << rat_to_string(row.fraction) << ','
           << rat_to_double(row.fraction) << ',' << rat_to_string(row.limit) << ','
           << rat_to_double(row.limit) << ',' << rat_to_string(row.gap) << ','
           << rat_to_double(row.gap) << '\n';
    }
}

std::vector<PartBadRow> even_construction_part_bads(int n, int k) {
    const IntervalPartition parts = even_construction_partition(n, k);
    const Labeling phi = even_construction(n, k);
    const std::vector<std::uint64_t> measured = bad_by_middle_part(phi, parts);
    std::vector<PartBadRow> rows;
    for (int i = 0; i < parts.parts(); ++i) {
        PartBadRow row;
        row.part = i + 1;
        row.measured = measured[i];
        const Rat a = i > 0 ? make_rat(parts.lengths[i - 1], n) : Rat(0);
        const Rat b = make_rat(parts.lengths[i], n);
        const Rat c = i + 1 < parts.parts() ? make_rat(parts.lengths[i + 1], n) : Rat(0);
        row.predicted = badcount_prediction(a, b, c, n);
        rows.push_back(row);
    }
    return rows;
}

} // namespace ordpath
