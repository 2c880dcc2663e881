#include "ordpath/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "ordpath/combinatorics.hpp"
#include "ordpath/copies.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/lp.hpp"

namespace ordpath {

namespace {

struct BudgetTracker {
    std::uint64_t node_limit;
    std::chrono::steady_clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    explicit BudgetTracker(const SearchBudget& b)
        : node_limit(b.node_limit),
          deadline(std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(b.time_limit_seconds))) {}

    bool tick() {
        if (exhausted) return false;
        ++nodes;
        if (nodes > node_limit ||
            ((nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)) {
            exhausted = true;
            return false;
        }
        return true;
    }
};

std::uint64_t ceil_to_u64(const Rat& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

std::uint64_t floor_to_u64(const Rat& q) {
    if (sgn(q) < 0) return 0;
    mpz_class c;
    mpz_fdiv_q(c.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return c.fits_ulong_p() ? c.get_ui() : UINT64_MAX;
}

// Root LP bounds for the branch-and-bound searches; skipped for instances
// whose tableau would be large, and on any resource error.
struct RootLP {
    bool available = false;
    std::vector<Rat> edge_weight; // fractional transversal (primal)
    std::vector<Rat> copy_weight; // fractional packing (dual)
};

RootLP root_lp(int n, const PatternSpec& pattern, const CopySet& cs) {
    RootLP lp;
    const std::uint64_t entries = cs.universe * cs.size();
    if (cs.size() == 0 || entries > 150'000) return lp;
    try {
        LPOutcome out = solve_fractional(n, pattern);
        lp.available = true;
        lp.edge_weight = out.primal.w;
        lp.copy_weight = out.dual.w;
    } catch (const ResourceLimitError&) {
    }
    return lp;
}

// ---------------------------------------------------------------------------
// Minimum hitting set over the copy hypergraph
// ---------------------------------------------------------------------------

class HittingSetSearch {
public:
    HittingSetSearch(const CopySet& cs, BudgetTracker& budget, const RootLP& lp)
        : cs_(cs),
          budget_(budget),
          edge_state_(cs.universe, 0),
          hit_(cs.size(), 0),
          free_count_(cs.size(), 0),
          has_dual_(lp.available),
          dual_(lp.copy_weight) {
        for (std::size_t q = 0; q < cs_.size(); ++q) {
            free_count_[q] = static_cast<int>(cs_.copy_edges[q].size());
            if (has_dual_) unhit_dual_ += dual_[q];
        }
        unhit_count_ = cs_.size();
    }

    void preset_choose(std::uint32_t e) { choose(e); }
    void preset_exclude(std::uint32_t e) { exclude(e); }

    // exact minimization; incumbent seeded by a greedy cover
    std::uint64_t minimize(std::vector<std::uint32_t>& witness_out) {
        seed_greedy();
        feasibility_ = false;
        dfs();
        witness_out = best_set_;
        return best_;
    }

    // is there a hitting set of size <= target extending the presets?
    bool feasible(std::uint64_t target) {
        best_ = target + 1;
        feasibility_ = true;
        found_ = false;
        dfs();
        return found_;
    }

    std::uint64_t root_lower_bound() {
        std::uint64_t lb = has_dual_ ? ceil_to_u64(unhit_dual_) : 0;
        return std::max(lb, static_cast<std::uint64_t>(greedy_disjoint()));
    }

    std::uint64_t incumbent() const { return best_; }
    const std::vector<std::uint32_t>& witness() const { return best_set_; }
    bool aborted() const { return budget_.exhausted; }

private:
    void choose(std::uint32_t e) {
        edge_state_[e] = 1;
        ++chosen_count_;
        chosen_.push_back(e);
        for (std::uint32_t q : cs_.edge_copies[e])
            if (hit_[q]++ == 0) {
                --unhit_count_;
                if (has_dual_) unhit_dual_ -= dual_[q];
            }
    }

    void unchoose(std::uint32_t e) {
        edge_state_[e] = 0;
        --chosen_count_;
        chosen_.pop_back();
        for (std::uint32_t q : cs_.edge_copies[e])
            if (--hit_[q] == 0) {
                ++unhit_count_;
                if (has_dual_) unhit_dual_ += dual_[q];
            }
    }

    void exclude(std::uint32_t e) {
        edge_state_[e] = 2;
        for (std::uint32_t q : cs_.edge_copies[e]) --free_count_[q];
    }

    void unexclude(std::uint32_t e) {
        edge_state_[e] = 0;
        for (std::uint32_t q : cs_.edge_copies[e]) ++free_count_[q];
    }

    int greedy_disjoint() {
        // pairwise free-edge-disjoint unhit copies each need their own edge
        scratch_.assign(cs_.universe, 0);
        int count = 0;
        for (std::size_t q = 0; q < cs_.size(); ++q) {
            if (hit_[q] > 0) continue;
            bool clash = false;
            for (std::uint32_t e : cs_.copy_edges[q])
                if (edge_state_[e] == 0 && scratch_[e]) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            ++count;
            for (std::uint32_t e : cs_.copy_edges[q])
                if (edge_state_[e] == 0) scratch_[e] = 1;
        }
        return count;
    }

    void seed_greedy() {
        std::vector<std::uint32_t> picks;
        while (unhit_count_ > 0) {
            int best_cover = -1;
            std::uint32_t best_edge = 0;
            for (std::uint32_t e = 0; e < cs_.universe; ++e) {
                if (edge_state_[e] != 0) continue;
                int cover = 0;
                for (std::uint32_t q : cs_.edge_copies[e])
                    if (hit_[q] == 0) ++cover;
                if (cover > best_cover) {
                    best_cover = cover;
                    best_edge = e;
                }
            }
            if (best_cover <= 0) break; // uncoverable copy; caller's problem is infeasible
            choose(best_edge);
            picks.push_back(best_edge);
        }
        if (unhit_count_ == 0) {
            best_ = chosen_count_;
            best_set_ = chosen_;
        } else {
            best_ = cs_.universe + 1;
        }
        for (auto it = picks.rbegin(); it != picks.rend(); ++it) unchoose(*it);
    }

    void dfs() {
        if (!budget_.tick()) return;
        if (feasibility_ && found_) return;
        if (unhit_count_ == 0) {
            if (feasibility_) {
                found_ = true;
                best_set_ = chosen_;
            } else if (static_cast<std::uint64_t>(chosen_count_) < best_) {
                best_ = chosen_count_;
                best_set_ = chosen_;
            }
            return;
        }
        if (static_cast<std::uint64_t>(chosen_count_) + 1 >= best_) return;
        std::uint64_t lb = chosen_count_ + (has_dual_ ? ceil_to_u64(unhit_dual_) : 1);
        if (lb < best_) lb = std::max(lb, static_cast<std::uint64_t>(chosen_count_ + greedy_disjoint()));
        if (lb >= best_) return;

        // branch on the unhit copy with fewest free edges
        std::size_t branch_q = cs_.size();
        int fewest = INT32_MAX;
        for (std::size_t q = 0; q < cs_.size(); ++q)
            if (hit_[q] == 0 && free_count_[q] < fewest) {
                fewest = free_count_[q];
                branch_q = q;
            }
        if (fewest == 0) return; // dead copy
        std::vector<std::uint32_t> options;
        for (std::uint32_t e : cs_.copy_edges[branch_q])
            if (edge_state_[e] == 0) options.push_back(e);
        std::size_t excluded_here = 0;
        for (std::uint32_t e : options) {
            choose(e);
            dfs();
            unchoose(e);
            if (budget_.exhausted || (feasibility_ && found_)) break;
            exclude(e);
            ++excluded_here;
        }
        for (std::size_t i = excluded_here; i > 0; --i) unexclude(options[i - 1]);
    }

    const CopySet& cs_;
    BudgetTracker& budget_;
    std::vector<char> edge_state_; // 0 free, 1 chosen, 2 excluded
    std::vector<int> hit_;
    std::vector<int> free_count_;
    std::vector<std::uint32_t> chosen_;
    std::vector<char> scratch_;
    bool has_dual_;
    std::vector<Rat> dual_;
    Rat unhit_dual_ = 0;
    std::size_t unhit_count_ = 0;
    int chosen_count_ = 0;
    std::uint64_t best_ = 0;
    std::vector<std::uint32_t> best_set_;
    bool feasibility_ = false;
    bool found_ = false;
};

// Lexicographically least optimal hitting set, by feasibility probes with a
// residual-LP bound; a running optimal witness certifies most positions
// without any search.
std::vector<std::uint32_t> lexmin_hitting_set(const CopySet& cs, std::uint64_t value,
                                              std::vector<std::uint32_t> witness,
                                              BudgetTracker& budget) {
    std::sort(witness.begin(), witness.end());
    std::vector<std::uint32_t> chosen, excluded;
    std::vector<char> excluded_mask(cs.universe, 0);
    std::vector<int> hit(cs.size(), 0);
    for (std::uint32_t e = 0; e < cs.universe && chosen.size() < value; ++e) {
        if (budget.exhausted) break;
        if (std::binary_search(witness.begin(), witness.end(), e)) {
            chosen.push_back(e); // the running witness already certifies e
            for (std::uint32_t q : cs.edge_copies[e]) ++hit[q];
            continue;
        }
        // residual covering LP over unhit copies and free edges > the budget
        // left means e cannot start an optimal solution
        bool dead_copy = false;
        std::vector<std::vector<std::uint32_t>> residual;
        std::vector<std::uint32_t> residual_index;
        for (std::uint32_t q = 0; q < cs.size(); ++q) {
            if (hit[q] > 0) continue;
            bool hit_by_e = false;
            std::vector<std::uint32_t> free_edges;
            for (std::uint32_t f : cs.copy_edges[q]) {
                if (f == e) hit_by_e = true;
                if (!excluded_mask[f] && f != e) free_edges.push_back(f);
            }
            if (hit_by_e) continue;
            if (free_edges.empty()) {
                dead_copy = true;
                break;
            }
            residual.push_back(std::move(free_edges));
            residual_index.push_back(q);
        }
        bool ok = !dead_copy;
        if (ok && !residual.empty()) {
            const PackingLP res = packing_lp(cs.universe, residual);
            if (chosen.size() + 1 + ceil_to_u64(res.value) > value) {
                ok = false;
            } else {
                RootLP local;
                local.available = true;
                local.copy_weight.assign(cs.size(), Rat(0));
                for (std::size_t j = 0; j < residual_index.size(); ++j)
                    local.copy_weight[residual_index[j]] = res.copy_weight[j];
                HittingSetSearch probe(cs, budget, local);
                for (std::uint32_t c : chosen) probe.preset_choose(c);
                for (std::uint32_t x : excluded) probe.preset_exclude(x);
                probe.preset_choose(e);
                ok = probe.feasible(value);
                if (ok) {
                    witness = probe.witness();
                    std::sort(witness.begin(), witness.end());
                }
            }
        } else if (ok) {
            // nothing left to hit: chosen + {e} extends with arbitrary edges
            witness = chosen;
            witness.push_back(e);
            for (std::uint32_t f = 0; f < cs.universe && witness.size() < value; ++f)
                if (!excluded_mask[f] && std::find(witness.begin(), witness.end(), f) == witness.end())
                    witness.push_back(f);
            std::sort(witness.begin(), witness.end());
            ok = witness.size() == value;
        }
        if (ok) {
            chosen.push_back(e);
            for (std::uint32_t q : cs.edge_copies[e]) ++hit[q];
        } else {
            excluded.push_back(e);
            excluded_mask[e] = 1;
        }
    }
    return chosen;
}

// ---------------------------------------------------------------------------
// Maximum edge-disjoint copy packing
// ---------------------------------------------------------------------------

class PackingSearch {
public:
    PackingSearch(const CopySet& cs, BudgetTracker& budget, const RootLP& lp)
        : cs_(cs),
          budget_(budget),
          edge_used_(cs.universe, 0),
          conflict_(cs.size(), 0),
          excluded_(cs.size(), 0),
          has_primal_(lp.available),
          primal_(lp.edge_weight),
          order_(cs.size()) {
        // explore heavy fractional-packing copies first: when the LP optimum
        // is integral the first descent already reaches a maximum packing
        for (std::uint32_t q = 0; q < cs_.size(); ++q) order_[q] = q;
        if (lp.available && lp.copy_weight.size() == cs_.size())
            std::stable_sort(order_.begin(), order_.end(),
                             [&](std::uint32_t a, std::uint32_t b) {
                                 return lp.copy_weight[a] > lp.copy_weight[b];
                             });
    }

    void preset_include(std::uint32_t q) { include(q); }
    void preset_exclude(std::uint32_t q) { excluded_[q] = 1; }

    std::uint64_t maximize(std::vector<std::uint32_t>& witness_out) {
        seed_greedy();
        feasibility_ = false;
        dfs(0);
        witness_out = best_set_;
        return best_;
    }

    bool feasible(std::uint64_t target) {
        feasibility_ = true;
        target_ = target;
        found_ = chosen_.size() >= target;
        if (found_)
            best_set_ = chosen_;
        else
            dfs(0);
        return found_;
    }

    std::uint64_t root_upper_bound() const { return upper_rest(0); }
    const std::vector<std::uint32_t>& witness() const { return best_set_; }
    bool aborted() const { return budget_.exhausted; }

private:
    void include(std::uint32_t q) {
        chosen_.push_back(q);
        for (std::uint32_t e : cs_.copy_edges[q]) {
            edge_used_[e] = 1;
            for (std::uint32_t q2 : cs_.edge_copies[e]) ++conflict_[q2];
        }
    }

    void uninclude(std::uint32_t q) {
        chosen_.pop_back();
        for (std::uint32_t e : cs_.copy_edges[q]) {
            edge_used_[e] = 0;
            for (std::uint32_t q2 : cs_.edge_copies[e]) --conflict_[q2];
        }
    }

    // counts copies still available from the cursor position on and bounds the
    // packing extension by the fractional-transversal mass on their edges:
    // disjoint future copies each carry weight >= 1, so reachable mass caps them
    std::uint64_t upper_rest(std::uint32_t cursor) const {
        std::uint64_t avail = 0;
        scratch_.assign(cs_.universe, 0);
        for (std::uint32_t p = cursor; p < cs_.size(); ++p) {
            const std::uint32_t q = order_[p];
            if (excluded_[q] || conflict_[q] > 0) continue;
            ++avail;
            for (std::uint32_t e : cs_.copy_edges[q]) scratch_[e] = 1;
        }
        if (has_primal_) {
            Rat reachable = 0;
            for (std::uint32_t e = 0; e < cs_.universe; ++e)
                if (scratch_[e]) reachable += primal_[e];
            return std::min(avail, floor_to_u64(reachable));
        }
        std::uint64_t reachable_edges = 0;
        for (std::uint32_t e = 0; e < cs_.universe; ++e)
            if (scratch_[e]) ++reachable_edges;
        return std::min(avail, reachable_edges / std::max<std::size_t>(cs_.edges_per_copy, 1));
    }

    void seed_greedy() {
        std::vector<std::uint32_t> picks;
        for (std::uint32_t q : order_)
            if (!excluded_[q] && conflict_[q] == 0) {
                include(q);
                picks.push_back(q);
            }
        best_ = chosen_.size();
        best_set_ = chosen_;
        for (auto it = picks.rbegin(); it != picks.rend(); ++it) uninclude(*it);
    }

    void dfs(std::uint32_t cursor) {
        if (!budget_.tick()) return;
        if (feasibility_ && found_) return;
        if (feasibility_ && chosen_.size() >= target_) {
            found_ = true;
            best_set_ = chosen_;
            return;
        }
        if (!feasibility_ && chosen_.size() > best_) {
            best_ = chosen_.size();
            best_set_ = chosen_;
        }
        while (cursor < cs_.size() &&
               (excluded_[order_[cursor]] || conflict_[order_[cursor]] > 0))
            ++cursor;
        if (cursor == cs_.size()) return;
        const std::uint64_t ub = chosen_.size() + upper_rest(cursor);
        if (feasibility_ ? ub < target_ : ub <= best_) return;
        include(order_[cursor]);
        dfs(cursor + 1);
        uninclude(order_[cursor]);
        if (budget_.exhausted || (feasibility_ && found_)) return;
        dfs(cursor + 1);
    }

    const CopySet& cs_;
    BudgetTracker& budget_;
    std::vector<char> edge_used_;
    std::vector<int> conflict_;
    std::vector<char> excluded_;
    std::vector<std::uint32_t> chosen_;
    mutable std::vector<char> scratch_;
    bool has_primal_;
    std::vector<Rat> primal_;
    std::vector<std::uint32_t> order_;
    std::uint64_t best_ = 0;
    std::vector<std::uint32_t> best_set_;
    bool feasibility_ = false;
    bool found_ = false;
    std::uint64_t target_ = 0;
};

std::vector<std::uint32_t> lexmin_packing(const CopySet& cs, std::uint64_t value,
                                          std::vector<std::uint32_t> witness,
                                          BudgetTracker& budget) {
    std::sort(witness.begin(), witness.end());
    std::vector<std::uint32_t> chosen, excluded;
    std::vector<char> used(cs.universe, 0);
    for (std::uint32_t q = 0; q < cs.size() && chosen.size() < value; ++q) {
        if (budget.exhausted) break;
        if (std::binary_search(witness.begin(), witness.end(), q)) {
            chosen.push_back(q); // certified by the running witness
            for (std::uint32_t e : cs.copy_edges[q]) used[e] = 1;
            continue;
        }
        bool clash = false;
        for (std::uint32_t e : cs.copy_edges[q])
            if (used[e]) {
                clash = true;
                break;
            }
        if (clash) { // cannot extend the prefix, no probe needed
            excluded.push_back(q);
            continue;
        }
        // residual packing LP over copies compatible with the prefix plus q
        std::vector<char> used_q = used;
        for (std::uint32_t e : cs.copy_edges[q]) used_q[e] = 1;
        std::vector<std::vector<std::uint32_t>> residual;
        std::vector<std::uint32_t> residual_index;
        std::vector<char> excluded_mask(cs.size(), 0);
        for (std::uint32_t x : excluded) excluded_mask[x] = 1;
        for (std::uint32_t q2 = 0; q2 < cs.size(); ++q2) {
            if (excluded_mask[q2] || q2 == q) continue;
            bool compatible = true;
            for (std::uint32_t e : cs.copy_edges[q2])
                if (used_q[e]) {
                    compatible = false;
                    break;
                }
            if (compatible) {
                residual.push_back(cs.copy_edges[q2]);
                residual_index.push_back(q2);
            }
        }
        bool ok;
        if (chosen.size() + 1 + residual.size() < value) {
            ok = false;
        } else {
            const PackingLP res = packing_lp(cs.universe, residual);
            if (chosen.size() + 1 + floor_to_u64(res.value) < value) {
                ok = false;
            } else {
                RootLP local;
                local.available = true;
                local.edge_weight = res.edge_dual;
                local.copy_weight.assign(cs.size(), Rat(0));
                for (std::size_t j = 0; j < residual_index.size(); ++j)
                    local.copy_weight[residual_index[j]] = res.copy_weight[j];
                PackingSearch probe(cs, budget, local);
                for (std::uint32_t c : chosen) probe.preset_include(c);
                for (std::uint32_t x : excluded) probe.preset_exclude(x);
                probe.preset_include(q);
                ok = probe.feasible(value);
                if (ok) witness = probe.witness();
            }
        }
        if (ok) {
            chosen.push_back(q);
            for (std::uint32_t e : cs.copy_edges[q]) used[e] = 1;
        } else {
            excluded.push_back(q);
        }
    }
    return chosen;
}

} // namespace

ExactResult exact_tau(int n, const PatternSpec& pattern, const SearchBudget& budget) {
    validate(pattern);
    const CopySet& cs = cached_copies(n, pattern);
    ExactResult res;
    res.quantity = Quantity::Tau;
    res.n = n;
    res.pattern = pattern;
    if (cs.size() == 0) {
        res.optimal = true;
        res.value = res.lower_bound = res.upper_bound = 0;
        return res;
    }
    const RootLP lp = root_lp(n, pattern, cs);
    BudgetTracker tracker(budget);
    HittingSetSearch search(cs, tracker, lp);
    const std::uint64_t root_lb = search.root_lower_bound();
    std::vector<std::uint32_t> witness;
    const std::uint64_t value = search.minimize(witness);
    res.nodes = tracker.nodes;
    if (tracker.exhausted) {
        res.optimal = false;
        res.lower_bound = root_lb;
        res.upper_bound = value;
        res.value = value;
    } else {
        res.optimal = true;
        res.value = res.lower_bound = res.upper_bound = value;
        // witness pass gets a fresh budget; the value is already proved
        BudgetTracker witness_tracker(budget);
        witness = lexmin_hitting_set(cs, value, witness, witness_tracker);
        res.nodes += witness_tracker.nodes;
        if (witness_tracker.exhausted || witness.size() != value)
            throw std::logic_error("exact_tau: witness reconstruction failed");
        // the returned witness must hit every copy
        std::vector<char> in_set(cs.universe, 0);
        for (std::uint32_t e : witness) in_set[e] = 1;
        for (const auto& ranks : cs.copy_edges) {
            bool hit = false;
            for (std::uint32_t e : ranks) hit = hit || in_set[e];
            if (!hit) throw std::logic_error("exact_tau: witness misses a copy");
        }
    }
    for (std::uint32_t e : witness) res.witness_edges.push_back(colex_unrank(e, pattern.r));
    std::sort(res.witness_edges.begin(), res.witness_edges.end());
    return res;
}

ExactResult exact_nu(int n, const PatternSpec& pattern, const SearchBudget& budget) {
    validate(pattern);
    const CopySet& cs = cached_copies(n, pattern);
    ExactResult res;
    res.quantity = Quantity::Nu;
    res.n = n;
    res.pattern = pattern;
    if (cs.size() == 0) {
        res.optimal = true;
        res.value = res.lower_bound = res.upper_bound = 0;
        return res;
    }
    const RootLP lp = root_lp(n, pattern, cs);
    BudgetTracker tracker(budget);
    PackingSearch search(cs, tracker, lp);
    const std::uint64_t root_ub = search.root_upper_bound();
    std::vector<std::uint32_t> witness;
    const std::uint64_t value = search.maximize(witness);
    res.nodes = tracker.nodes;
    if (tracker.exhausted) {
        res.optimal = false;
        res.lower_bound = value;
        res.upper_bound = root_ub;
        res.value = value;
    } else {
        res.optimal = true;
        res.value = res.lower_bound = res.upper_bound = value;
        BudgetTracker witness_tracker(budget);
        witness = lexmin_packing(cs, value, witness, witness_tracker);
        res.nodes += witness_tracker.nodes;
        if (witness_tracker.exhausted || witness.size() != value)
            throw std::logic_error("exact_nu: witness reconstruction failed");
        // the returned family must be pairwise edge-disjoint
        std::vector<char> used(cs.universe, 0);
        for (std::uint32_t q : witness)
            for (std::uint32_t e : cs.copy_edges[q]) {
                if (used[e]) throw std::logic_error("exact_nu: witness copies share an edge");
                used[e] = 1;
            }
    }
    for (std::uint32_t q : witness) res.witness_copies.push_back(cs.copy_verts[q]);
    std::sort(res.witness_copies.begin(), res.witness_copies.end());
    return res;
}

std::uint64_t exact_ex_direct(int n, const PatternSpec& pattern) {
    validate(pattern);
    const CopySet& cs = cached_copies(n, pattern);
    if (cs.universe > 24)
        throw ResourceLimitError("exact_ex_direct: universe too large", cs.universe, 24);
    std::vector<std::uint32_t> copy_masks;
    for (const auto& ranks : cs.copy_edges) {
        std::uint32_t m = 0;
        for (std::uint32_t e : ranks) m |= 1u << e;
        copy_masks.push_back(m);
    }
    const std::uint32_t all = cs.universe == 32 ? 0xFFFFFFFFu : (1u << cs.universe) - 1;
    std::uint64_t best = 0;
    for (std::uint32_t g = 0;; ++g) {
        bool free_graph = true;
        for (std::uint32_t cm : copy_masks)
            if ((g & cm) == cm) {
                free_graph = false;
                break;
            }
        if (free_graph)
            best = std::max<std::uint64_t>(best, static_cast<unsigned>(__builtin_popcount(g)));
        if (g == all) break;
    }
    return best;
}

ExactResult exact_ex(int n, const PatternSpec& pattern, const SearchBudget& budget) {
    ExactResult tau = exact_tau(n, pattern, budget);
    const std::uint64_t universe = binom(n, pattern.r);
    ExactResult res;
    res.quantity = Quantity::Ex;
    res.n = n;
    res.pattern = pattern;
    res.nodes = tau.nodes;
    res.optimal = tau.optimal;
    res.value = universe - tau.value;
    res.lower_bound = universe - tau.upper_bound;
    res.upper_bound = universe - tau.lower_bound;
    if (!tau.optimal) return res;

    // witness: complement of the minimum transversal, checked pattern-free
    std::vector<char> in_tau(universe, 0);
    for (const Edge& e : tau.witness_edges) in_tau[colex_rank(e)] = 1;
    std::vector<Edge> edges;
    for_each_subset(n, pattern.r, [&](const Edge& e) {
        if (!in_tau[colex_rank(e)]) edges.push_back(e);
    });
    OrderedHypergraph host(n, pattern.r, std::move(edges));
    if (contains(host, build_pattern(pattern)))
        throw std::logic_error("exact_ex: complement of the transversal contains the pattern");
    res.witness_edges = host.edges();

    if (universe <= 20 && exact_ex_direct(n, pattern) != res.value)
        throw std::logic_error("exact_ex: direct search disagrees with complementarity");
    return res;
}

// ---------------------------------------------------------------------------
// Edge-labeling search
// ---------------------------------------------------------------------------

namespace {

// DFS over pair labels with an admissible potential bound: an undecided triple
// counts as good unless its first-assigned pair already dooms it
// (phi(uv) = k on the low pair or phi(vw) = 1 on the high pair).
class FEngine {
public:
    FEngine(int n, int k, bool monotone, bool symmetry, BudgetTracker& budget)
        : n_(n),
          k_(k),
          monotone_(monotone),
          symmetry_(symmetry),
          budget_(budget),
          pairs_(pair_count(n)),
          total_(binom(n, 3)),
          label_(pairs_, 0),
          marked_(n >= 3 ? binom(n, 3) : 0, 0),
          phil_(n + 1, 0) {
        u_of_.resize(pairs_);
        v_of_.resize(pairs_);
        for (int v = 2; v <= n; ++v)
            for (int u = 1; u < v; ++u) {
                u_of_[pair_rank(u, v)] = u;
                v_of_[pair_rank(u, v)] = v;
            }
        build_order();
    }

    std::uint64_t maximize(std::uint64_t seed) {
        best_ = seed;
        enumerating_ = false;
        dfs(0, 0);
        return best_;
    }

    // visits every full assignment with exactly `value` good triples
    void enumerate(std::uint64_t value, const std::function<bool(const Labeling&)>& visit) {
        best_ = value;
        enumerating_ = true;
        visit_ = &visit;
        stop_ = false;
        dfs(0, 0);
    }

private:
    void build_order() {
        order_.clear();
        if (!symmetry_) {
            for (std::size_t p = 0; p < pairs_; ++p) order_.push_back(p);
            kind_.assign(pairs_, 0); // no canonical comparisons
            return;
        }
        // mirror orbits consecutive: position kinds 1 = self-mirror,
        // 2 = first of a 2-orbit, 3 = second of a 2-orbit
        std::vector<char> seen(pairs_, 0);
        kind_.clear();
        for (std::size_t p = 0; p < pairs_; ++p) {
            if (seen[p]) continue;
            const int u = u_of_[p], v = v_of_[p];
            const std::size_t m = pair_rank(n_ + 1 - v, n_ + 1 - u);
            seen[p] = 1;
            if (m == p) {
                order_.push_back(p);
                kind_.push_back(1);
            } else {
                seen[m] = 1;
                order_.push_back(p);
                kind_.push_back(2);
                order_.push_back(m);
                kind_.push_back(3);
            }
        }
    }

    void assign(std::size_t p, int label, std::size_t& marks_begin) {
        marks_begin = mark_log_.size();
        label_[p] = label;
        const int a = u_of_[p], b = v_of_[p];
        for (int x = 1; x < a; ++x) {
            const std::size_t q = pair_rank(x, a);
            const std::size_t t = triple_rank(x, a, b);
            if (label_[q] != 0) {
                ++decided_;
                if (label_[q] < label) ++good_;
                if (marked_[t]) --hopeless_;
            } else if (label == 1 && !marked_[t]) {
                marked_[t] = 1;
                ++hopeless_;
                mark_log_.push_back(t);
            }
        }
        for (int y = b + 1; y <= n_; ++y) {
            const std::size_t q = pair_rank(b, y);
            const std::size_t t = triple_rank(a, b, y);
            if (label_[q] != 0) {
                ++decided_;
                if (label < label_[q]) ++good_;
                if (marked_[t]) --hopeless_;
            } else if (label == k_ && !marked_[t]) {
                marked_[t] = 1;
                ++hopeless_;
                mark_log_.push_back(t);
            }
        }
    }

    void unassign(std::size_t p, int label, std::size_t marks_begin) {
        const int a = u_of_[p], b = v_of_[p];
        label_[p] = 0;
        for (int x = 1; x < a; ++x) {
            const std::size_t q = pair_rank(x, a);
            if (label_[q] != 0) {
                --decided_;
                if (label_[q] < label) --good_;
                if (marked_[triple_rank(x, a, b)]) ++hopeless_;
            }
        }
        for (int y = b + 1; y <= n_; ++y) {
            const std::size_t q = pair_rank(b, y);
            if (label_[q] != 0) {
                --decided_;
                if (label < label_[q]) --good_;
                if (marked_[triple_rank(a, b, y)]) ++hopeless_;
            }
        }
        while (mark_log_.size() > marks_begin) {
            marked_[mark_log_.back()] = 0;
            --hopeless_;
            mark_log_.pop_back();
        }
    }

    // canonical-form comparison against the reversal-inversion image;
    // returns -1 prune, 0 still equal, 1 strictly smaller (fixed canonical)
    int canonical_step(std::size_t pos, int label, int cmp) const {
        if (!symmetry_ || cmp == 1) return cmp;
        const char kind = kind_[pos];
        if (kind == 2) return cmp; // mate not assigned yet, defer
        if (kind == 1) {
            const int img = k_ + 1 - label;
            if (label < img) return 1;
            if (label > img) return -1;
            return 0;
        }
        // kind == 3: resolve the deferred comparison at pos-1, then this one
        const int mate = label_[order_[pos - 1]];
        const int img_prev = k_ + 1 - label;
        if (mate < img_prev) return 1;
        if (mate > img_prev) return -1;
        const int img_here = k_ + 1 - mate;
        if (label < img_here) return 1;
        if (label > img_here) return -1;
        return 0;
    }

    void dfs(std::size_t pos, int cmp) {
        if (stop_ || !budget_.tick()) return;
        const std::uint64_t potential = good_ + (total_ - decided_ - hopeless_);
        if (enumerating_) {
            if (potential < best_) return;
        } else if (potential <= best_) {
            return;
        }
        if (pos == order_.size()) {
            if (enumerating_) {
                if (good_ == best_ && !(*visit_)(current_labeling())) stop_ = true;
            } else if (good_ > best_) {
                best_ = good_;
            }
            return;
        }
        const std::size_t p = order_[pos];
        const int lo = monotone_ ? std::max(1, phil_[u_of_[p]]) : 1;
        const int v = v_of_[p];
        const int old_phil = phil_[v];
        for (int label = lo; label <= k_; ++label) {
            std::size_t marks_begin = 0;
            assign(p, label, marks_begin);
            const int next_cmp = canonical_step(pos, label, cmp);
            if (next_cmp >= 0) {
                if (monotone_) phil_[v] = std::max(old_phil, label);
                dfs(pos + 1, next_cmp);
                if (monotone_) phil_[v] = old_phil;
            }
            unassign(p, label, marks_begin);
            if (stop_ || budget_.exhausted) return;
        }
    }

    Labeling current_labeling() const {
        Labeling phi(n_, k_);
        for (std::size_t p = 0; p < pairs_; ++p)
            phi.set(u_of_[p], v_of_[p], label_[p]);
        return phi;
    }

    int n_, k_;
    bool monotone_, symmetry_;
    BudgetTracker& budget_;
    std::size_t pairs_;
    std::uint64_t total_;
    std::vector<int> label_;
    std::vector<char> marked_;
    std::vector<int> phil_;
    std::vector<int> u_of_, v_of_;
    std::vector<std::size_t> order_;
    std::vector<char> kind_;
    std::vector<std::uint32_t> mark_log_;
    std::uint64_t good_ = 0, decided_ = 0, hopeless_ = 0;
    std::uint64_t best_ = 0;
    bool enumerating_ = false;
    bool stop_ = false;
    const std::function<bool(const Labeling&)>* visit_ = nullptr;
};

std::uint64_t construction_seed(int n, int k, bool monotone_only) {
    (void)monotone_only; // both constructions are monotone
    std::uint64_t seed = 0;
    if (k >= n - 1 && n >= 1) {
        // right-endpoint labeling makes every triple good
        Labeling right(n, std::max(k, 1));
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) right.set(u, v, v - 1);
        seed = std::max(seed, cost(right).good);
    }
    if (k % 2 == 1)
        seed = std::max(seed, cost(odd_construction(n, k)).good);
    else if (k >= 2)
        seed = std::max(seed, cost(even_construction(n, k)).good);
    return seed;
}

} // namespace

ExactResult exact_f(int n, int k, const SearchBudget& budget, bool monotone_only) {
    if (n < 0 || k < 1) throw std::invalid_argument("exact_f: requires n >= 0, k >= 1");
    ExactResult res;
    res.quantity = monotone_only ? Quantity::MonotoneF : Quantity::F;
    res.n = n;
    res.k = k;
    BudgetTracker tracker(budget);
    const std::uint64_t seed = n >= 3 ? construction_seed(n, k, monotone_only) : 0;
    // the seed is a valid labeling's recomputed score, so it is a sound incumbent
    FEngine engine(n, k, monotone_only, budget.symmetry_reduction && !monotone_only, tracker);
    const std::uint64_t value = engine.maximize(seed);
    res.nodes = tracker.nodes;
    if (tracker.exhausted) {
        res.optimal = false;
        res.value = value;
        res.lower_bound = value;
        res.upper_bound = binom(n, 3);
        return res;
    }
    res.optimal = true;
    res.value = res.lower_bound = res.upper_bound = value;
    // witness pass on a fresh budget: first optimal leaf in label-ascending
    // order is the lex-min optimal labeling
    BudgetTracker witness_tracker(budget);
    FEngine wit(n, k, monotone_only, false, witness_tracker);
    std::optional<Labeling> found;
    wit.enumerate(value, [&](const Labeling& phi) {
        found = phi;
        return false;
    });
    res.nodes += witness_tracker.nodes;
    if (witness_tracker.exhausted || !found)
        throw std::logic_error("exact_f: witness reconstruction failed");
    if (cost(*found).good != value)
        throw std::logic_error("exact_f: witness does not attain the optimum");
    res.witness_labeling = std::move(found);
    return res;
}

void for_each_optimal_labeling(int n, int k, bool monotone, std::uint64_t good_value,
                               const std::function<bool(const Labeling&)>& visit,
                               const SearchBudget& budget) {
    BudgetTracker tracker(budget);
    FEngine engine(n, k, monotone, false, tracker);
    engine.enumerate(good_value, visit);
    if (tracker.exhausted)
        throw ResourceLimitError("for_each_optimal_labeling: budget exhausted", tracker.nodes,
                                 budget.node_limit);
}

Certificate check_optimum_structure(const ExactResult& result) {
    if (!result.witness_labeling)
        throw std::invalid_argument("check_optimum_structure: needs a labeling witness");
    if (result.quantity != Quantity::F && result.quantity != Quantity::MonotoneF)
        throw std::invalid_argument("check_optimum_structure: needs an f-type result");
    const Labeling& phi = *result.witness_labeling;
    const int k = phi.k();
    Certificate cert;
    cert.claim = "optimum-structure";
    cert.parameters = {{"n", phi.n()},
                       {"k", k},
                       {"kind", result.quantity == Quantity::F ? "unrestricted" : "monotone"},
                       {"good", result.value}};
    cert.value = result.value;
    nlohmann::ordered_json findings = nlohmann::ordered_json::array();

    if (result.quantity == Quantity::F) {
        if (k >= 2 && has_k1_triple(phi))
            findings.push_back({{"finding", "k1-triple"},
                                {"detail", "optimum contains a (k,1) labeled triple"}});
    } else {
        const LabelProfile prof = profile(phi);
        const auto& len = prof.parts.lengths;
        const auto& hat = prof.parts_hat.lengths;
        // partition similarity: |X_i symdiff X^_i| <= 2
        int startL = 1, startR = 1;
        for (int i = 0; i <= k + 1; ++i) {
            const int endL = startL + len[i], endR = startR + hat[i];
            const int overlap = std::max(0, std::min(endL, endR) - std::max(startL, startR));
            const int delta = len[i] + hat[i] - 2 * overlap;
            if (delta > 2)
                findings.push_back({{"finding", "partition-similarity"}, {"part", i},
                                    {"symmetric_difference", delta}});
            startL = endL;
            startR = endR;
        }
        for (int i = 2; i <= k; ++i)
            if (len[i] + len[i + 1] > len[i - 2] + len[i - 1] + 2)
                findings.push_back({{"finding", "left-part-growth"}, {"i", i}});
        for (int j = 1; j <= k - 1; ++j)
            if (hat[j - 1] + hat[j] > hat[j + 1] + hat[j + 2] + 2)
                findings.push_back({{"finding", "right-part-growth"}, {"j", j}});
        const std::uint64_t witness_bad = binom(phi.n(), 3) - result.value;
        cert.parameters["witness_bad"] = witness_bad;
        if (k % 2 == 1)
            cert.parameters["odd_construction_bad"] = cost(odd_construction(phi.n(), k)).bad;
        else if (k >= 2)
            cert.parameters["even_construction_bad"] = cost(even_construction(phi.n(), k)).bad;
    }
    cert.verified = findings.empty();
    if (!findings.empty()) cert.counterexample = findings;
    return cert;
}

} // namespace ordpath
