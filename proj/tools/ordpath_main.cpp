// Command-line frontend: construct/verify/solve/sweep the ordered tight-path
// Turan toolkit and reproduce the acceptance checks.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "ordpath/acceptance.hpp"
#include "ordpath/chain.hpp"
#include "ordpath/constructions.hpp"
#include "ordpath/embedding.hpp"
#include "ordpath/errors.hpp"
#include "ordpath/io.hpp"
#include "ordpath/labeling.hpp"
#include "ordpath/lp.hpp"
#include "ordpath/oracle.hpp"
#include "ordpath/report.hpp"

namespace fs = std::filesystem;
using namespace ordpath;

namespace {

struct Options {
    std::string out_dir;
    SearchBudget budget;
};

SearchBudget budget_from_env() {
    SearchBudget b;
    if (const char* nodes = std::getenv("ORDPATH_NODE_LIMIT")) b.node_limit = std::strtoull(nodes, nullptr, 10);
    if (const char* secs = std::getenv("ORDPATH_TIME_LIMIT")) b.time_limit_seconds = std::strtod(secs, nullptr);
    return b;
}

void emit(const Options& opt, const std::string& filename, const std::string& text) {
    std::cout << text;
    if (!opt.out_dir.empty()) {
        fs::create_directories(opt.out_dir);
        std::ofstream out(fs::path(opt.out_dir) / filename);
        out << text;
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

// "n=4..10:2,r=3,s=4..5" -> ordered list of (var, values)
std::vector<std::pair<std::string, std::vector<int>>> parse_grid(const std::string& grid) {
    std::vector<std::pair<std::string, std::vector<int>>> axes;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("grid item needs var=range: " + item);
        const std::string var = item.substr(0, eq);
        std::string range = item.substr(eq + 1);
        int step = 1;
        if (const auto colon = range.find(':'); colon != std::string::npos) {
            step = std::stoi(range.substr(colon + 1));
            range = range.substr(0, colon);
        }
        std::vector<int> values;
        if (const auto dots = range.find(".."); dots != std::string::npos) {
            const int lo = std::stoi(range.substr(0, dots));
            const int hi = std::stoi(range.substr(dots + 2));
            for (int v = lo; v <= hi; v += step) values.push_back(v);
        } else {
            values.push_back(std::stoi(range));
        }
        axes.emplace_back(var, values);
    }
    return axes;
}

int run_sweep(const Options& opt, const std::string& grid, const std::string& quantities,
              const std::string& out_file) {
    const auto axes = parse_grid(grid);
    std::vector<std::string> wanted;
    {
        std::stringstream ss(quantities);
        std::string q;
        while (std::getline(ss, q, ',')) wanted.push_back(q);
    }
    // every quantity must have its grid variables; missing ones are usage errors
    for (const std::string& q : wanted) {
        const std::vector<std::string> needs =
            (q == "f" || q == "label-density") ? std::vector<std::string>{"n", "k"}
                                               : std::vector<std::string>{"n", "r", "s"};
        for (const std::string& var : needs)
            if (std::find_if(axes.begin(), axes.end(),
                             [&](const auto& a) { return a.first == var; }) == axes.end())
                throw std::invalid_argument("quantity '" + q + "' needs grid variable " + var);
    }
    std::ostringstream csv;
    for (const auto& [var, values] : axes) {
        (void)values;
        csv << var << ',';
    }
    for (std::size_t i = 0; i < wanted.size(); ++i) csv << wanted[i] << (i + 1 < wanted.size() ? "," : "");
    csv << ",skip_reason\n";

    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
        std::map<std::string, int> point;
        for (std::size_t a = 0; a < axes.size(); ++a) point[axes[a].first] = axes[a].second[idx[a]];
        for (std::size_t a = 0; a < axes.size(); ++a) csv << axes[a].second[idx[a]] << ',';
        std::string skip;
        std::vector<std::string> cells;
        for (const std::string& q : wanted) {
            try {
                if (q == "tau" || q == "nu" || q == "ex") {
                    const PatternSpec p = natural_path(point.at("r"), point.at("s"));
                    const ExactResult res = q == "tau" ? exact_tau(point.at("n"), p, opt.budget)
                                          : q == "nu"  ? exact_nu(point.at("n"), p, opt.budget)
                                                       : exact_ex(point.at("n"), p, opt.budget);
                    cells.push_back(res.optimal ? std::to_string(res.value)
                                                : "[" + std::to_string(res.lower_bound) + "," +
                                                      std::to_string(res.upper_bound) + "]");
                } else if (q == "lp") {
                    const LPOutcome lp =
                        solve_fractional(point.at("n"), natural_path(point.at("r"), point.at("s")));
                    cells.push_back(rat_to_string(lp.value));
                } else if (q == "f") {
                    const ExactResult res = exact_f(point.at("n"), point.at("k"), opt.budget);
                    cells.push_back(std::to_string(res.value));
                } else if (q == "construct") {
                    const BiasedTransversal bt =
                        biased_transversal(point.at("n"), point.at("r"), point.at("s"));
                    cells.push_back(std::to_string(bt.graph.edge_count()));
                } else if (q == "verify") {
                    const BiasedTransversal bt =
                        biased_transversal(point.at("n"), point.at("r"), point.at("s"));
                    const auto cert = verify_transversal(
                        bt.graph, natural_path(point.at("r"), point.at("s")));
                    cells.push_back(cert.verified ? "ok" : "FAIL");
                } else if (q == "label-density") {
                    const int k = point.at("k");
                    const auto rows = density_table(k % 2 == 1 ? ConstructionParity::Odd
                                                               : ConstructionParity::Even,
                                                    k, point.at("n"), point.at("n"));
                    if (rows.empty()) throw std::invalid_argument("no triples below n = 3");
                    cells.push_back(rat_to_string(rows.front().fraction));
                } else {
                    throw std::invalid_argument("unknown quantity: " + q);
                }
            } catch (const std::invalid_argument& e) {
                cells.push_back("skip");
                skip = e.what(); // precondition violation: skipped, reason logged
            }
        }
        for (std::size_t i = 0; i < cells.size(); ++i) csv << cells[i] << (i + 1 < cells.size() ? "," : "");
        csv << ',' << skip << '\n';
        // advance the grid odometer; stop after the last point
        std::size_t a = axes.size();
        while (a > 0 && ++idx[a - 1] == axes[a - 1].second.size()) {
            idx[a - 1] = 0;
            --a;
        }
        if (a == 0) break;
    }
    if (out_file.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_file);
        out << csv.str();
        std::cout << "wrote " << out_file << "\n";
    }
    return 0;
}

int run_reproduce(const std::string& which) {
    std::vector<CriterionResult> results;
    if (which == "all") {
        results = run_all_criteria();
    } else {
        results.push_back(run_criterion(std::stoi(which)));
    }
    bool all_ok = true;
    for (const CriterionResult& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                  << " (" << r.detail << ", " << r.seconds << "s)\n";
        all_ok = all_ok && r.passed;
    }
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordered tight-path Turan toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    Options opt;
    opt.budget = budget_from_env();
    app.add_option("--out", opt.out_dir, "directory for emitted artifacts");
    app.add_option("--node-limit", opt.budget.node_limit, "search node budget");
    app.add_option("--time-limit", opt.budget.time_limit_seconds, "search time budget (s)");
    app.add_flag("--no-symmetry", [&opt](std::int64_t) { opt.budget.symmetry_reduction = false; },
                 "disable reversal-inversion reduction in the labeling search");

    int n = 0, r = 0, s = 0, k = 0;
    std::string kind = "natural-path", file, export_file, construction, csv_file;
    bool padded = false, monotone = false;
    int n_min = 0, n_max = 0, n_step = 1;

    // construct
    auto* construct = app.add_subcommand("construct", "build the explicit constructions");
    auto* c_trans = construct->add_subcommand("transversal", "biased transversal with certificate");
    c_trans->add_option("--n", n)->required();
    c_trans->add_option("--r", r)->required();
    c_trans->add_option("--s", s)->required();
    auto* c_pack = construct->add_subcommand("packing", "decodable path packing");
    c_pack->add_option("--n", n)->required();
    c_pack->add_option("--r", r)->required();
    c_pack->add_option("--s", s)->required();
    auto* c_flower = construct->add_subcommand("flower", "flower packing (r | s)");
    c_flower->add_option("--n", n)->required();
    c_flower->add_option("--r", r)->required();
    c_flower->add_option("--s", s)->required();
    c_flower->add_flag("--padded", padded, "drop n mod (s/r) trailing vertices");
    auto* c_frac = construct->add_subcommand("fractional", "fractional transversal weights");
    c_frac->add_option("--n", n)->required();
    c_frac->add_option("--r", r)->required();
    c_frac->add_option("--s", s)->required();
    c_frac->add_flag("--padded", padded);
    auto* c_blow = construct->add_subcommand("blowup", "interval blowup lower bound");
    c_blow->add_option("--n", n)->required();
    c_blow->add_option("--r", r)->required();
    c_blow->add_option("--s", s)->required();
    auto* c_pat = construct->add_subcommand("pattern", "pattern hypergraph");
    c_pat->add_option("--kind", kind);
    c_pat->add_option("--r", r)->required();
    c_pat->add_option("--s", s)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "re-verify stored artifacts");
    auto* v_trans = verify->add_subcommand("transversal", "check a hypergraph hits all copies");
    v_trans->add_option("--graph", file)->required();
    v_trans->add_option("--kind", kind);
    v_trans->add_option("--s", s)->required();
    auto* v_pack = verify->add_subcommand("packing", "check a stored family is edge-disjoint");
    v_pack->add_option("--file", file)->required();
    auto* v_weight = verify->add_subcommand("weighting", "check fractional transversal feasibility");
    v_weight->add_option("--file", file)->required();
    v_weight->add_option("--kind", kind);
    v_weight->add_option("--s", s)->required();

    // exact
    auto* exact = app.add_subcommand("exact", "independent exact solvers");
    auto* e_tau = exact->add_subcommand("tau", "minimum transversal");
    auto* e_nu = exact->add_subcommand("nu", "maximum edge-disjoint packing");
    auto* e_ex = exact->add_subcommand("ex", "maximum pattern-free subgraph");
    for (auto* sub : {e_tau, e_nu, e_ex}) {
        sub->add_option("--n", n)->required();
        sub->add_option("--kind", kind);
        sub->add_option("--r", r)->required();
        sub->add_option("--s", s)->required();
    }
    auto* e_f = exact->add_subcommand("f", "optimal labeling value");
    e_f->add_option("--n", n)->required();
    e_f->add_option("--k", k)->required();
    e_f->add_flag("--monotone", monotone);

    // lp
    auto* lp = app.add_subcommand("lp", "exact rational linear programming");
    auto* lp_solve = lp->add_subcommand("solve", "fractional transversal/packing optimum");
    lp_solve->add_option("--n", n)->required();
    lp_solve->add_option("--kind", kind);
    lp_solve->add_option("--r", r)->required();
    lp_solve->add_option("--s", s)->required();
    lp_solve->add_option("--export", export_file, "write the LP in textual format");
    auto* lp_chain = lp->add_subcommand("chain", "nu <= nu* = tau* <= tau report");
    lp_chain->add_option("--n", n)->required();
    lp_chain->add_option("--kind", kind);
    lp_chain->add_option("--r", r)->required();
    lp_chain->add_option("--s", s)->required();

    // label
    auto* label = app.add_subcommand("label", "edge-labeling constructions and reports");
    auto* l_odd = label->add_subcommand("odd", "odd-k construction");
    l_odd->add_option("--n", n)->required();
    l_odd->add_option("--k", k)->required();
    auto* l_even = label->add_subcommand("even", "even-k construction");
    l_even->add_option("--n", n)->required();
    l_even->add_option("--k", k)->required();
    auto* l_from = label->add_subcommand("from-graph", "longest-path labeling of a free host");
    l_from->add_option("--graph", file)->required();
    l_from->add_option("--s", s)->required();
    auto* l_cost = label->add_subcommand("cost", "good/bad counts of a labeling csv");
    l_cost->add_option("--csv", csv_file)->required();
    l_cost->add_option("--n", n)->required();
    l_cost->add_option("--k", k)->required();
    auto* l_density = label->add_subcommand("density", "bad-fraction table vs the limit");
    l_density->add_option("--construction", construction)->required();
    l_density->add_option("--k", k)->required();
    l_density->add_option("--n-min", n_min)->required();
    l_density->add_option("--n-max", n_max)->required();
    l_density->add_option("--n-step", n_step);

    // sweep / reproduce
    std::string grid, quantities, out_file, criterion = "all";
    auto* sweep = app.add_subcommand("sweep", "grid of quantities to CSV");
    sweep->add_option("--grid", grid)->required();
    sweep->add_option("--quantity", quantities)->required();
    sweep->add_option("--out-file", out_file);
    auto* reproduce = app.add_subcommand("reproduce", "run the built-in verification checks");
    reproduce->add_option("id", criterion, "criterion id or 'all'");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_trans->parsed()) {
            const BiasedTransversal bt = biased_transversal(n, r, s);
            Json j = to_json(bt);
            j["certificate_tight"] = to_json(verify_transversal(bt.graph, natural_path(r, s)));
            if (s > r)
                j["certificate_loose"] = to_json(verify_transversal(bt.graph, loose_path(r, s)));
            emit(opt, "transversal.json", dump(j));
        } else if (c_pack->parsed()) {
            const PackingFamily family = generate_packing(n, r, s);
            Json j = to_json(family);
            j["certificate"] = to_json(verify_packing(family));
            emit(opt, "packing.json", dump(j));
        } else if (c_flower->parsed()) {
            const PackingFamily family = flower_packing(n, r, s, padded);
            Json j = to_json(family);
            j["certificate"] = to_json(verify_packing(family));
            emit(opt, "flower.json", dump(j));
        } else if (c_frac->parsed()) {
            const EdgeWeighting w = fractional_transversal_weights(n, r, s, padded);
            Json j = to_json(w);
            j["certificate"] = to_json(verify_feasible(w, w.n, natural_path(r, s)));
            emit(opt, "fractional.json", dump(j));
        } else if (c_blow->parsed()) {
            const OrderedHypergraph g = interval_blowup(n, r, s);
            Json j = to_json(g);
            j["pattern_free"] = !contains(g, build_pattern(natural_path(r, s)));
            emit(opt, "blowup.json", dump(j));
        } else if (c_pat->parsed()) {
            const PatternSpec spec{pattern_kind_from_string(kind), r, s};
            emit(opt, "pattern.json", dump(to_json(build_pattern(spec))));
        } else if (v_trans->parsed()) {
            const OrderedHypergraph g = hypergraph_from_json(read_json_file(file));
            const PatternSpec spec{pattern_kind_from_string(kind), g.r(), s};
            const Certificate cert = verify_transversal(g, spec);
            emit(opt, "certificate.json", dump(to_json(cert)));
            return cert.verified ? 0 : 1;
        } else if (v_pack->parsed()) {
            const PackingFamily family = packing_from_json(read_json_file(file));
            const Certificate cert = verify_packing(family);
            emit(opt, "certificate.json", dump(to_json(cert)));
            return cert.verified ? 0 : 1;
        } else if (v_weight->parsed()) {
            const EdgeWeighting w = edge_weighting_from_json(read_json_file(file));
            const PatternSpec spec{pattern_kind_from_string(kind), w.r, s};
            const Certificate cert = verify_feasible(w, w.n, spec);
            emit(opt, "certificate.json", dump(to_json(cert)));
            return cert.verified ? 0 : 1;
        } else if (e_tau->parsed() || e_nu->parsed() || e_ex->parsed()) {
            const PatternSpec spec{pattern_kind_from_string(kind), r, s};
            const ExactResult res = e_tau->parsed() ? exact_tau(n, spec, opt.budget)
                                  : e_nu->parsed()  ? exact_nu(n, spec, opt.budget)
                                                    : exact_ex(n, spec, opt.budget);
            emit(opt, "exact.json", dump(to_json(res)));
        } else if (e_f->parsed()) {
            const ExactResult res = exact_f(n, k, opt.budget, monotone);
            emit(opt, "exact.json", dump(to_json(res)));
        } else if (lp_solve->parsed()) {
            const PatternSpec spec{pattern_kind_from_string(kind), r, s};
            const LPOutcome out = solve_fractional(n, spec);
            if (!export_file.empty()) {
                std::ofstream lpf(export_file);
                export_lp(lpf, n, spec);
            }
            emit(opt, "lp.json", dump(to_json(out, n, spec)));
        } else if (lp_chain->parsed()) {
            const PatternSpec spec{pattern_kind_from_string(kind), r, s};
            emit(opt, "chain.json", dump(to_json(duality_chain(n, spec, opt.budget))));
        } else if (l_odd->parsed() || l_even->parsed()) {
            const bool odd = l_odd->parsed();
            const Labeling phi = odd ? odd_construction(n, k) : even_construction(n, k);
            std::ostringstream csv;
            write_labeling_csv(csv, phi);
            emit(opt, "labeling.csv", csv.str());
            Json meta = labeling_metadata(phi, odd ? "odd" : "even");
            const GoodBad gb = cost(phi);
            meta["good"] = gb.good;
            meta["bad"] = gb.bad;
            emit(opt, "labeling.meta.json", dump(meta));
        } else if (l_from->parsed()) {
            const OrderedHypergraph g = hypergraph_from_json(read_json_file(file));
            const Labeling phi = hypergraph_to_labeling(g, s);
            std::ostringstream csv;
            write_labeling_csv(csv, phi);
            emit(opt, "labeling.csv", csv.str());
            emit(opt, "labeling.meta.json", dump(labeling_metadata(phi, "from-graph")));
        } else if (l_cost->parsed()) {
            std::ifstream in(csv_file);
            if (!in) throw std::invalid_argument("cannot open " + csv_file);
            const Labeling phi = labeling_from_csv(in, n, k);
            const GoodBad gb = cost(phi);
            emit(opt, "cost.json", dump(Json{{"good", gb.good}, {"bad", gb.bad}}));
        } else if (l_density->parsed()) {
            const auto parity = construction == "odd" ? ConstructionParity::Odd
                              : construction == "even"
                                  ? ConstructionParity::Even
                                  : throw std::invalid_argument("construction must be odd|even");
            const auto rows = density_table(parity, k, n_min, n_max, n_step);
            std::ostringstream csv;
            write_density_csv(csv, rows);
            emit(opt, "density.csv", csv.str());
        } else if (sweep->parsed()) {
            return run_sweep(opt, grid, quantities, out_file);
        } else if (reproduce->parsed()) {
            return run_reproduce(criterion);
        }
    } catch (const ResourceLimitError& e) {
        std::cerr << dump(Json{{"error", e.what()},
                               {"kind", "resource"},
                               {"requested", e.requested},
                               {"limit", e.limit}});
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << dump(Json{{"error", e.what()}, {"kind", "parameter"}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << dump(Json{{"error", e.what()}, {"kind", "runtime"}});
        return 1;
    }
    return 0;
}
