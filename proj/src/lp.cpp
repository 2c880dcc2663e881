#include "ordpath/lp.hpp"

#include <ostream>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"
#include "ordpath/errors.hpp"

namespace ordpath {

Rat CopyWeighting::total() const {
    Rat sum = 0;
    for (const Rat& q : w) sum += q;
    return sum;
}

namespace {

// Primal simplex on the packing side: max 1'x s.t. Ax <= 1, x >= 0, where A is
// the edge-by-copy incidence matrix. The slack basis is feasible, so no
// phase 1 is needed. Dantzig pricing with a Bland fallback after a degenerate
// streak guarantees termination.
class PackingSimplex {
public:
    PackingSimplex(std::uint64_t universe, const std::vector<std::vector<std::uint32_t>>& copy_edges)
        : rows_(static_cast<std::size_t>(universe)),
          cols_(copy_edges.size() + rows_),
          tableau_(rows_ + 1, std::vector<Rat>(cols_ + 1, Rat(0))),
          basis_(rows_) {
        const std::size_t m = copy_edges.size();
        for (std::size_t e = 0; e < rows_; ++e) {
            tableau_[e][m + e] = 1;
            tableau_[e][cols_] = 1;
            basis_[e] = m + e;
        }
        for (std::size_t q = 0; q < m; ++q) {
            for (std::uint32_t e : copy_edges[q]) tableau_[e][q] = 1;
            tableau_[rows_][q] = -1;
        }
    }

    void solve() {
        int degenerate_streak = 0;
        Rat last_objective = objective();
        while (true) {
            const bool bland = degenerate_streak > 32;
            const int entering = pick_entering(bland);
            if (entering < 0) return;
            const int leaving = pick_leaving(entering);
            if (leaving < 0) throw std::logic_error("simplex: unbounded packing LP");
            pivot(static_cast<std::size_t>(leaving), static_cast<std::size_t>(entering));
            ++pivots_;
            const Rat obj = objective();
            degenerate_streak = (obj == last_objective) ? degenerate_streak + 1 : 0;
            last_objective = obj;
        }
    }

    Rat objective() const { return tableau_[rows_][cols_]; }
    std::uint64_t pivots() const { return pivots_; }

    std::vector<Rat> copy_solution(std::size_t m) const {
        std::vector<Rat> x(m, Rat(0));
        for (std::size_t i = 0; i < rows_; ++i)
            if (basis_[i] < m) x[basis_[i]] = tableau_[i][cols_];
        return x;
    }

    std::vector<Rat> edge_duals(std::size_t m) const {
        std::vector<Rat> y(rows_);
        for (std::size_t e = 0; e < rows_; ++e) y[e] = tableau_[rows_][m + e];
        return y;
    }

private:
    int pick_entering(bool bland) const {
        int best = -1;
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rat& c = tableau_[rows_][j];
            if (sgn(c) >= 0) continue;
            if (bland) return static_cast<int>(j);
            if (best < 0 || c < tableau_[rows_][best]) best = static_cast<int>(j);
        }
        return best;
    }

    int pick_leaving(int entering) const {
        int best = -1;
        Rat best_ratio;
        for (std::size_t i = 0; i < rows_; ++i) {
            const Rat& a = tableau_[i][entering];
            if (sgn(a) <= 0) continue;
            Rat ratio = tableau_[i][cols_] / a;
            if (best < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis_[i] < basis_[best])) {
                best = static_cast<int>(i);
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t col) {
        std::vector<Rat>& prow = tableau_[row];
        const Rat inv = 1 / prow[col];
        for (std::size_t j = 0; j <= cols_; ++j)
            if (sgn(prow[j]) != 0) prow[j] *= inv;
        for (std::size_t i = 0; i <= rows_; ++i) {
            if (i == row) continue;
            std::vector<Rat>& irow = tableau_[i];
            if (sgn(irow[col]) == 0) continue;
            const Rat factor = irow[col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (sgn(prow[j]) != 0) irow[j] -= factor * prow[j];
            irow[col] = 0;
        }
        basis_[row] = col;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::vector<Rat>> tableau_;
    std::vector<std::size_t> basis_;
    std::uint64_t pivots_ = 0;
};

} // namespace

PackingLP packing_lp(std::uint64_t universe,
                     const std::vector<std::vector<std::uint32_t>>& copy_edges) {
    PackingSimplex simplex(universe, copy_edges);
    simplex.solve();
    PackingLP out;
    out.value = simplex.objective();
    out.copy_weight = simplex.copy_solution(copy_edges.size());
    out.edge_dual = simplex.edge_duals(copy_edges.size());
    out.pivots = simplex.pivots();
    return out;
}

LPOutcome solve_fractional(int n, const PatternSpec& pattern, const LPLimits& limits) {
    const CopySet& cs = cached_copies(n, pattern, limits.max_copies);
    LPOutcome out;
    out.copy_count = cs.size();
    out.primal.n = n;
    out.primal.r = pattern.r;
    out.primal.w.assign(cs.universe, Rat(0));
    out.dual.n = n;
    out.dual.spec = pattern;
    if (cs.size() == 0) {
        // the pattern does not fit: the empty weighting is optimal at value 0
        out.status = LPStatus::OptimalNoCopies;
        out.value = 0;
        return out;
    }

    PackingLP solved = packing_lp(cs.universe, cs.copy_edges);
    out.status = LPStatus::Optimal;
    out.value = solved.value;
    out.pivots = solved.pivots;
    out.primal.w = std::move(solved.edge_dual);
    out.dual.copies = cs.copy_verts;
    out.dual.w = std::move(solved.copy_weight);

    // audit: the solver is not trusted; both certificates must stand on their own
    const Certificate primal_ok = verify_feasible(out.primal, n, pattern);
    const Certificate dual_ok = verify_feasible(out.dual);
    if (!primal_ok.verified || !dual_ok.verified)
        throw std::logic_error("solve_fractional: simplex output failed re-verification");
    if (out.primal.total() != out.value || out.dual.total() != out.value)
        throw std::logic_error("solve_fractional: primal and dual objectives differ");
    return out;
}

Certificate verify_feasible(const EdgeWeighting& w, int n, const PatternSpec& pattern) {
    validate(pattern);
    if (w.n != n || w.r != pattern.r)
        throw std::invalid_argument("verify_feasible: weighting domain mismatch");
    if (w.w.size() != binom(n, pattern.r))
        throw std::invalid_argument("verify_feasible: weighting has wrong universe size");
    Certificate cert;
    cert.claim = "fractional-transversal-feasible";
    cert.parameters = {{"n", n}, {"pattern", pattern_name(pattern)}};
    cert.value = rat_to_string(w.total());
    for (const Rat& q : w.w) {
        if (sgn(q) < 0) {
            cert.counterexample = nlohmann::ordered_json{{"reason", "negative weight"}};
            return cert;
        }
    }
    const OrderedHypergraph pat = build_pattern(pattern);
    std::vector<std::vector<int>> templates;
    for (const Edge& e : pat.edges()) {
        std::vector<int> t(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) t[i] = e[i] - 1;
        templates.push_back(std::move(t));
    }
    bool ok = true;
    std::vector<int> bad;
    Rat bad_total;
    Edge img(pattern.r);
    for_each_subset(n, pattern.s, [&](const std::vector<int>& verts) {
        if (!ok) return;
        Rat total = 0;
        for (const auto& tpl : templates) {
            for (std::size_t i = 0; i < tpl.size(); ++i) img[i] = verts[tpl[i]];
            total += w.w[colex_rank(img)];
        }
        if (total < 1) {
            ok = false;
            bad = verts;
            bad_total = total;
        }
    });
    cert.verified = ok;
    if (!ok)
        cert.counterexample =
            nlohmann::ordered_json{{"copy", bad}, {"weight", rat_to_string(bad_total)}};
    return cert;
}

Certificate verify_feasible(const CopyWeighting& w) {
    validate(w.spec);
    Certificate cert;
    cert.claim = "fractional-packing-feasible";
    cert.parameters = {{"n", w.n}, {"pattern", pattern_name(w.spec)}};
    cert.value = rat_to_string(w.total());
    if (w.copies.size() != w.w.size())
        throw std::invalid_argument("verify_feasible: copy/weight size mismatch");
    std::vector<Rat> load(binom(w.n, w.spec.r), Rat(0));
    const OrderedHypergraph pat = build_pattern(w.spec);
    Edge img(w.spec.r);
    for (std::size_t idx = 0; idx < w.copies.size(); ++idx) {
        if (sgn(w.w[idx]) < 0) {
            cert.counterexample = nlohmann::ordered_json{{"copy", w.copies[idx]},
                                                         {"reason", "negative weight"}};
            return cert;
        }
        if (sgn(w.w[idx]) == 0) continue;
        for (const Edge& e : pat.edges()) {
            for (std::size_t i = 0; i < e.size(); ++i) img[i] = w.copies[idx][e[i] - 1];
            load[colex_rank(img)] += w.w[idx];
        }
    }
    for (std::size_t rank = 0; rank < load.size(); ++rank) {
        if (load[rank] > 1) {
            cert.counterexample =
                nlohmann::ordered_json{{"edge", colex_unrank(rank, w.spec.r)},
                                       {"load", rat_to_string(load[rank])}};
            return cert;
        }
    }
    cert.verified = true;
    return cert;
}

namespace {

std::string edge_var(const Edge& e) {
    std::string name = "e";
    for (int v : e) name += "_" + std::to_string(v);
    return name;
}

} // namespace

void export_lp(std::ostream& os, int n, const PatternSpec& pattern, const LPLimits& limits) {
    const CopySet& cs = cached_copies(n, pattern, limits.max_copies);
    os << "\\ fractional transversal LP: " << pattern_name(pattern) << " in K(" << n << ")\n";
    os << "Minimize\n obj:";
    bool first = true;
    for_each_subset(n, pattern.r, [&](const Edge& e) {
        os << (first ? " " : " + ") << edge_var(e);
        first = false;
    });
    os << "\nSubject To\n";
    for (std::size_t q = 0; q < cs.size(); ++q) {
        os << " c" << (q + 1) << ":";
        bool f2 = true;
        for (std::uint32_t rank : cs.copy_edges[q]) {
            os << (f2 ? " " : " + ") << edge_var(colex_unrank(rank, pattern.r));
            f2 = false;
        }
        os << " >= 1\n";
    }
    os << "End\n";
}

} // namespace ordpath
