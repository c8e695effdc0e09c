#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "locavg/algorithms.hpp"
#include "locavg/cluster_tree.hpp"
#include "locavg/engine.hpp"
#include "locavg/generators.hpp"
#include "locavg/independence.hpp"
#include "locavg/io.hpp"
#include "locavg/iso.hpp"
#include "locavg/metrics.hpp"
#include "locavg/view.hpp"

namespace locavg {
namespace {

constexpr int kDefaultMaxRounds = 1 << 30;

std::unique_ptr<Algorithm> make_algorithm(const std::string& name) {
    if (name == "luby_mis") return luby_mis();
    if (name == "ruling_set_22") return ruling_set_22();
    if (name == "linial_mis") return linial_greedy_mis();
    if (name == "det_ruling_logdelta") return det_ruling_set(RulingMode::log_delta);
    if (name == "det_ruling_loglogn") return det_ruling_set(RulingMode::log_log_n);
    if (name == "rand_mm") return rand_maximal_matching();
    if (name == "det_mm") return det_maximal_matching();
    if (name.rfind("sinkless_r", 0) == 0) {
        int r = 0;
        try {
            r = std::stoi(name.substr(10));
        } catch (const std::exception&) {
            throw input_error("bad sinkless algorithm name: " + name);
        }
        return sinkless_orientation(r);
    }
    throw input_error("unknown algorithm: " + name);
}

const char* invariant_of(const std::string& algo) {
    if (algo == "luby_mis" || algo == "linial_mis") return "independent set independence/maximality";
    if (algo == "ruling_set_22") return "(2,2)-ruling set distances";
    if (algo.rfind("det_ruling", 0) == 0) return "ruling set distance/pointer chain";
    if (algo == "rand_mm" || algo == "det_mm") return "matching maximality";
    if (algo.rfind("sinkless", 0) == 0) return "out-degree >= 1 at every node";
    return "problem constraints";
}

int thread_count() {
    const char* env = std::getenv("LOCAVG_THREADS");
    if (!env) return 1;
    int t = 0;
    try {
        t = std::stoi(env);
    } catch (const std::exception&) {
        return 1;
    }
    return std::clamp(t, 1, 256);
}

// ---- CSV plumbing --------------------------------------------------------

std::string join_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

void rat_cells(std::vector<std::string>& row, const Rat& r) {
    row.push_back(format_rat_decimal(r));
    row.push_back(std::to_string(r.numerator()));
    row.push_back(std::to_string(r.denominator()));
}

void empty_rat_cells(std::vector<std::string>& row) {
    row.push_back("");
    row.push_back("");
    row.push_back("");
}

const char* kRunHeader =
    "kind,graph,algorithm,seed,trials,n,m,"
    "avg_v,avg_v_num,avg_v_den,avg_e,avg_e_num,avg_e_den,"
    "worst,exp_v_max,exp_v_max_num,exp_v_max_den,"
    "mis_s0_fraction,mis_s0_num,mis_s0_den,timed_out";

const char* kIterHeader =
    "graph,algorithm,seed,iteration,nodes_before,nodes_removed,node_removal_fraction,"
    "edges_before,edges_removed,edge_removal_fraction,matched_weight";

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

// ---- experiment driver ---------------------------------------------------

struct TrialOut {
    uint64_t seed = 0;
    ExecutionTrace trace;
    std::vector<IterationStats> iters;
};

struct ExperimentResult {
    ComplexityReport report;
    int completed = 0;
    int invalid = 0;
    int timeouts = 0;
    std::string trial_csv;              // per-trial rows, no header
    std::string aggregate_row;
    std::string iteration_csv;          // rows, no header
    std::optional<Rat> mis_s0_mean;
};

// Runs trials seeded base..base+trials-1, validates each trace, and renders
// the CSV rows. Trials may run in parallel; rows are emitted in seed order.
ExperimentResult run_experiment(const LoadedGraph& lg, const std::string& graph_id,
                                const std::string& algo, int trials, uint64_t seed_base,
                                int max_rounds, bool want_iters) {
    const Graph& g = lg.plain();
    {
        auto probe = make_algorithm(algo);  // surfaces bad names early
        (void)probe;
    }
    std::vector<NodeId> s0;
    bool track_mis = lg.cluster && (algo == "luby_mis" || algo == "linial_mis");
    if (track_mis) s0 = lg.cluster->cluster_members().at(0);

    auto run_one = [&](uint64_t seed) {
        auto alg = make_algorithm(algo);
        TrialOut out;
        out.seed = seed;
        out.trace = locavg::run(*alg, g, seed, max_rounds);
        if (const auto* st = alg->last_iteration_stats()) out.iters = *st;
        return out;
    };

    ExperimentResult res;
    ReportBuilder builder(g);
    Rat mis_sum(0);
    int mis_count = 0;
    const int nthreads = thread_count();

    auto consume = [&](TrialOut&& t) {
        bool complete = t.trace.complete() && !t.trace.timed_out;
        bool valid = complete && validate_trace(algo, g, t.trace);
        if (t.trace.timed_out) {
            ++res.timeouts;
            std::cerr << "trial seed " << t.seed << " timed out after "
                      << t.trace.rounds_elapsed << " rounds; partial row flagged\n";
        } else if (!valid) {
            ++res.invalid;
            std::cerr << "validation failed for " << algo << " seed " << t.seed << ": violates "
                      << invariant_of(algo) << "\n";
        }

        std::vector<std::string> row;
        row.push_back("trial");
        row.push_back(graph_id);
        row.push_back(algo);
        row.push_back(std::to_string(t.seed));
        row.push_back("1");
        row.push_back(std::to_string(g.n));
        row.push_back(std::to_string(g.m()));
        std::optional<Rat> mis;
        if (complete) {
            ++res.completed;
            CompletionTimes ct = completion_times(t.trace, g);
            long long sv = 0, se = 0;
            int tmax = 0;
            for (int x : ct.t_node) {
                sv += x;
                tmax = std::max(tmax, x);
            }
            for (int x : ct.t_edge) se += x;
            rat_cells(row, g.n ? Rat(sv, g.n) : Rat(0));
            rat_cells(row, g.m() ? Rat(se, g.m()) : Rat(0));
            row.push_back(std::to_string(t.trace.rounds_elapsed));
            rat_cells(row, Rat(tmax));
            if (track_mis) {
                long long in = 0;
                for (NodeId v : s0) in += t.trace.node_output[v] == 1;
                mis = Rat(in, static_cast<long long>(s0.size()));
                mis_sum += *mis;
                ++mis_count;
            }
            builder.add(t.trace);
        } else {
            empty_rat_cells(row);
            empty_rat_cells(row);
            row.push_back(std::to_string(t.trace.rounds_elapsed));
            empty_rat_cells(row);
        }
        if (mis)
            rat_cells(row, *mis);
        else
            empty_rat_cells(row);
        row.push_back(t.trace.timed_out ? "1" : "0");
        res.trial_csv += join_row(row);

        if (want_iters) {
            for (const auto& it : t.iters) {
                std::vector<std::string> ir;
                ir.push_back(graph_id);
                ir.push_back(algo);
                ir.push_back(std::to_string(t.seed));
                ir.push_back(std::to_string(it.iteration));
                ir.push_back(std::to_string(it.nodes_before));
                ir.push_back(std::to_string(it.nodes_removed));
                ir.push_back(it.nodes_before > 0
                                 ? format_rat_decimal(Rat(it.nodes_removed, it.nodes_before))
                                 : "");
                ir.push_back(std::to_string(it.edges_before));
                ir.push_back(std::to_string(it.edges_removed));
                ir.push_back(it.edges_before > 0
                                 ? format_rat_decimal(Rat(it.edges_removed, it.edges_before))
                                 : "");
                ir.push_back(std::to_string(it.matched_weight));
                res.iteration_csv += join_row(ir);
            }
        }
    };

    for (int done = 0; done < trials;) {
        int wave = std::min(nthreads, trials - done);
        if (wave <= 1) {
            consume(run_one(seed_base + done));
            ++done;
            continue;
        }
        std::vector<std::future<TrialOut>> futs;
        futs.reserve(wave);
        for (int j = 0; j < wave; ++j)
            futs.push_back(std::async(std::launch::async, run_one, seed_base + done + j));
        for (auto& f : futs) consume(f.get());
        done += wave;
    }

    std::vector<std::string> agg;
    agg.push_back("aggregate");
    agg.push_back(graph_id);
    agg.push_back(algo);
    agg.push_back(std::to_string(seed_base));
    agg.push_back(std::to_string(res.completed));
    agg.push_back(std::to_string(g.n));
    agg.push_back(std::to_string(g.m()));
    if (res.completed > 0) {
        res.report = builder.finish();
        rat_cells(agg, res.report.avg_v);
        rat_cells(agg, res.report.avg_e);
        agg.push_back(std::to_string(res.report.worst));
        rat_cells(agg, res.report.exp_v_max);
    } else {
        empty_rat_cells(agg);
        empty_rat_cells(agg);
        agg.push_back("");
        empty_rat_cells(agg);
    }
    if (mis_count > 0) {
        res.mis_s0_mean = mis_sum / mis_count;
        rat_cells(agg, *res.mis_s0_mean);
    } else {
        empty_rat_cells(agg);
    }
    agg.push_back(res.timeouts ? "1" : "0");
    res.aggregate_row = join_row(agg);
    return res;
}

// ---- gen -----------------------------------------------------------------

struct GenOpts {
    int k = 0;
    int64_t beta = 0;
    int64_t lift = 0;
    int64_t n = 0;
    int d = 3;
    double p = 0.0;
    uint64_t seed = 1;
    std::string out;
};

int cmd_gen_ct(const GenOpts& o) {
    auto skel = build_skeleton(o.k, o.beta);
    ClusterGraph base = build_base_graph(skel);
    if (o.lift >= 1) {
        ClusterGraph lifted = random_lift(base, o.lift, o.seed);
        save_graph_file(o.out, lifted);
        std::cout << "wrote " << o.out << ": n=" << lifted.graph.n << " m=" << lifted.graph.m()
                  << " (lift q=" << o.lift << ")\n";
    } else {
        save_graph_file(o.out, base);
        std::cout << "wrote " << o.out << ": n=" << base.graph.n << " m=" << base.graph.m()
                  << "\n";
    }
    return 0;
}

int cmd_gen_gnp(const GenOpts& o) {
    Graph g = gnp_graph(static_cast<NodeId>(o.n), o.p, o.seed);
    save_graph_file(o.out, g);
    std::cout << "wrote " << o.out << ": n=" << g.n << " m=" << g.m() << "\n";
    return 0;
}

int cmd_gen_regular(const GenOpts& o) {
    Graph g = random_regular_graph(static_cast<NodeId>(o.n), o.d, o.seed);
    save_graph_file(o.out, g);
    std::cout << "wrote " << o.out << ": n=" << g.n << " m=" << g.m() << "\n";
    return 0;
}

// ---- run -----------------------------------------------------------------

struct RunOpts {
    std::string graph;
    std::string algo;
    int trials = 1;
    uint64_t seed = 1;
    int max_rounds = kDefaultMaxRounds;
    std::string out;
    std::string iter_out;
};

int cmd_run(const RunOpts& o) {
    if (o.trials < 1) throw input_error("trials must be >= 1");
    LoadedGraph lg = load_graph_file(o.graph);
    ExperimentResult res = run_experiment(lg, o.graph, o.algo, o.trials, o.seed, o.max_rounds,
                                          !o.iter_out.empty());
    std::string csv = std::string(kRunHeader) + "\n" + res.trial_csv + res.aggregate_row;
    if (o.out.empty()) {
        std::cout << csv;
    } else {
        write_text(o.out, csv);
        std::cout << o.algo << " on " << o.graph << ": trials=" << o.trials
                  << " completed=" << res.completed;
        if (res.completed > 0)
            std::cout << " avg_v=" << format_rat_decimal(res.report.avg_v)
                      << " avg_e=" << format_rat_decimal(res.report.avg_e)
                      << " worst=" << res.report.worst;
        if (res.mis_s0_mean)
            std::cout << " mis_s0_fraction=" << format_rat_decimal(*res.mis_s0_mean);
        std::cout << (res.invalid || res.timeouts ? " FAILED" : " ok") << "\n";
    }
    if (!o.iter_out.empty())
        write_text(o.iter_out, std::string(kIterHeader) + "\n" + res.iteration_csv);
    return (res.invalid || res.timeouts) ? 1 : 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify_family(const std::string& path) {
    LoadedGraph lg = load_graph_file(path);
    if (!lg.cluster) throw input_error("family check needs a graph file with cluster data");
    FamilyReport rep = validate_family(*lg.cluster);
    if (rep.ok()) {
        std::cout << "family check passed: n=" << lg.cluster->graph.n
                  << " clusters=" << lg.cluster->skeleton->nodes.size()
                  << " lift=" << lg.cluster->lift_order << "\n";
        return 0;
    }
    std::cout << "family check failed: " << rep.violations.size() << " violation(s)\n";
    size_t show = std::min<size_t>(rep.violations.size(), 10);
    for (size_t i = 0; i < show; ++i) {
        const auto& v = rep.violations[i];
        std::cout << "  " << v.kind << " node=" << v.node << " skel=" << v.skel_from << "->"
                  << v.skel_to << " expected=" << v.expected << " actual=" << v.actual << "\n";
    }
    return 1;
}

int cmd_verify_iso(const std::string& path, int k, uint64_t seed) {
    LoadedGraph lg = load_graph_file(path);
    if (!lg.cluster) throw input_error("iso check needs a graph file with cluster data");
    const ClusterGraph& cg = *lg.cluster;
    auto pair = find_treelike_pair(cg, k, seed);
    if (!pair) {
        std::cout << "iso check failed: no tree-like pair at radius " << k << "\n";
        return 1;
    }
    auto [v0, v1] = *pair;
    IsoMapping m = find_isomorphism(cg, k, v0, v1);
    bool ok = verify_isomorphism(cg, k, m);
    uint64_t h0 = canonical_view_hash(radius_view(cg.graph, v0, k));
    uint64_t h1 = canonical_view_hash(radius_view(cg.graph, v1, k));
    std::cout << "pair (" << v0 << ", " << v1 << "): mapping size " << m.phi.size()
              << ", verified=" << (ok ? "yes" : "no")
              << ", hashes " << (h0 == h1 ? "equal" : "differ") << "\n";
    return (ok && h0 == h1) ? 0 : 1;
}

struct CycleOpts {
    std::string graph;
    int ell = 4;
    int lifts = 0;
    int64_t q = 0;
    uint64_t seed = 1;
};

int cmd_verify_cycles(const CycleOpts& o) {
    LoadedGraph lg = load_graph_file(o.graph);
    const Graph& g = lg.plain();
    if (g.n == 0) throw input_error("empty graph");
    double delta_pow = std::pow(static_cast<double>(g.max_degree()), o.ell);
    if (lg.cluster)
        std::cout << "reference 1/beta = "
                  << 1.0 / static_cast<double>(lg.cluster->skeleton->beta) << "\n";

    if (o.lifts > 0) {
        if (o.q < 1) throw input_error("--lifts needs --q >= 1");
        double sum = 0, sumsq = 0, worst = 0;
        for (int i = 0; i < o.lifts; ++i) {
            Graph lifted = lift_graph(g, o.q, o.seed + static_cast<uint64_t>(i));
            double f = cycle_fraction(lifted, o.ell);
            sum += f;
            sumsq += f * f;
            worst = std::max(worst, f);
        }
        double mean = sum / o.lifts;
        double var = std::max(0.0, sumsq / o.lifts - mean * mean);
        double bound = delta_pow / static_cast<double>(o.q);
        std::cout << "lifts=" << o.lifts << " q=" << o.q << " ell=" << o.ell
                  << ": mean short-cycle fraction " << mean << " (max " << worst << ", sd "
                  << std::sqrt(var) << "), reference Delta^ell/q = " << bound << "\n";
        return mean <= bound ? 0 : 1;
    }

    double f = cycle_fraction(g, o.ell);
    std::cout << "short-cycle fraction (ell=" << o.ell << "): " << f << "\n";
    int64_t q = lg.cluster ? lg.cluster->lift_order : 1;
    if (q > 1) {
        double bound = delta_pow / static_cast<double>(q);
        std::cout << "reference Delta^ell/q = " << bound << "\n";
        return f <= bound ? 0 : 1;
    }
    return 0;
}

struct AlphaOpts {
    std::string graph;
    int cluster = -1;
    int samples = 5;
    uint64_t seed = 1;
    int64_t budget = 2000000;
};

int cmd_verify_alpha(const AlphaOpts& o) {
    LoadedGraph lg = load_graph_file(o.graph);
    if (!lg.cluster) throw input_error("alpha check needs a graph file with cluster data");
    const ClusterGraph& cg = *lg.cluster;
    const Graph& g = cg.graph;
    auto members = cg.cluster_members();
    bool all_ok = true;

    for (int c = 0; c < static_cast<int>(members.size()); ++c) {
        if (o.cluster >= 0 && c != o.cluster) continue;
        const auto& mem = members[c];
        if (mem.empty()) continue;

        if (c == 0) {
            // the root cluster is an independent set by construction
            bool indep = true;
            for (NodeId v : mem)
                for (NodeId u : g.neighbors(v))
                    if (cg.cluster_of[u] == 0) indep = false;
            std::cout << "cluster 0: |S|=" << mem.size()
                      << (indep ? " independent" : " NOT independent") << "\n";
            all_ok = all_ok && indep;
            continue;
        }

        // connected components of the intra-cluster subgraph
        std::map<NodeId, int> comp;
        std::vector<std::vector<NodeId>> comps;
        for (NodeId v : mem) {
            if (comp.count(v)) continue;
            std::vector<NodeId> stack{v}, cur;
            comp[v] = static_cast<int>(comps.size());
            while (!stack.empty()) {
                NodeId x = stack.back();
                stack.pop_back();
                cur.push_back(x);
                for (NodeId u : g.neighbors(x)) {
                    if (cg.cluster_of[u] != c || comp.count(u)) continue;
                    comp[u] = static_cast<int>(comps.size());
                    stack.push_back(u);
                }
            }
            comps.push_back(std::move(cur));
        }

        // the cluster splits into |S|/beta^psi cliques of size beta^psi paired
        // two by two, so alpha(S) = clique count exactly
        int psi = cg.skeleton->nodes[c].psi;
        int64_t clique = 1;
        for (int i = 0; i < psi; ++i) clique *= cg.skeleton->beta;
        int64_t groups = static_cast<int64_t>(mem.size()) / clique;
        int64_t want_comps = groups / 2;
        int64_t want_size = 2 * clique;
        bool shape_ok = static_cast<int64_t>(comps.size()) == want_comps;
        for (const auto& cc : comps) shape_ok &= static_cast<int64_t>(cc.size()) == want_size;

        Rng rng(o.seed ^ (0x616c706861ULL + c));
        std::vector<int> order(comps.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        for (size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.below(i)]);
        int take = std::min<int>(o.samples, static_cast<int>(order.size()));
        bool alpha_ok = true;
        for (int i = 0; i < take; ++i) {
            const auto& cc = comps[order[i]];
            IndependenceResult r = independence_number_exact(g, cc, o.budget);
            if (!r.exact || r.alpha != 2) alpha_ok = false;
        }
        std::cout << "cluster " << c << ": |S|=" << mem.size() << " components=" << comps.size()
                  << " (expected " << want_comps << " of size " << want_size << ")"
                  << ", sampled " << take << " with alpha"
                  << (alpha_ok ? "=2 each" : " MISMATCH")
                  << "; structural alpha(S)=" << groups << "\n";
        all_ok = all_ok && shape_ok && alpha_ok;
    }
    std::cout << (all_ok ? "alpha check passed\n" : "alpha check failed\n");
    return all_ok ? 0 : 1;
}

// ---- sweep -----------------------------------------------------------------

struct SweepOpts {
    std::string algo;
    std::string gen = "gnp";
    std::vector<int64_t> sizes;
    double pn = 10.0;
    int d = 3;
    int trials = 10;
    uint64_t seed = 1;
    std::string out;
    std::string svg;
};

std::string render_svg(const std::vector<std::pair<int64_t, double>>& pts,
                       const std::string& title) {
    const double w = 640, h = 400, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = 1e300, xmax = -1e300, ymax = 0;
    for (auto [n, y] : pts) {
        double x = std::log10(static_cast<double>(n));
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymax = std::max(ymax, y);
    }
    if (xmax <= xmin) xmax = xmin + 1;
    if (ymax <= 0) ymax = 1;
    ymax *= 1.15;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (w - ml - mr); };
    auto py = [&](double y) { return h - mb - y / ymax * (h - mt - mb); };
    char buf[256];
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\">\n";
    s += "<rect width=\"640\" height=\"400\" fill=\"white\"/>\n";
    snprintf(buf, sizeof buf,
             "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", ml,
             h - mb, w - mr, h - mb);
    s += buf;
    snprintf(buf, sizeof buf,
             "<line x1=\"%.1f\" y1=\"%.1f\" x2=\"%.1f\" y2=\"%.1f\" stroke=\"black\"/>\n", ml,
             h - mb, ml, mt);
    s += buf;
    std::string poly;
    for (auto [n, y] : pts) {
        snprintf(buf, sizeof buf, "%.2f,%.2f ", px(std::log10(static_cast<double>(n))), py(y));
        poly += buf;
        snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#1f6fb2\"/>\n",
                 px(std::log10(static_cast<double>(n))), py(y));
        s += buf;
        snprintf(buf, sizeof buf,
                 "<text x=\"%.2f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\">%lld</text>\n",
                 px(std::log10(static_cast<double>(n))), h - mb + 16,
                 static_cast<long long>(n));
        s += buf;
    }
    s += "<polyline points=\"" + poly + "\" fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"2\"/>\n";
    snprintf(buf, sizeof buf, "<text x=\"%.1f\" y=\"%.1f\" font-size=\"14\">%s</text>\n", ml,
             mt - 14, title.c_str());
    s += buf;
    snprintf(buf, sizeof buf,
             "<text x=\"%.1f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"end\">%.3f</text>\n",
             ml - 6, mt + 4, ymax);
    s += buf;
    s += "<text x=\"320\" y=\"392\" font-size=\"12\" text-anchor=\"middle\">n (log scale)</text>\n";
    s += "<text x=\"14\" y=\"220\" font-size=\"12\" transform=\"rotate(-90 14 220)\">avg_v</text>\n";
    s += "</svg>\n";
    return s;
}

int cmd_sweep(const SweepOpts& o) {
    if (o.sizes.empty()) throw input_error("sweep needs --sizes");
    if (o.trials < 1) throw input_error("trials must be >= 1");
    std::string csv = "n,algorithm,avg_v,avg_v_num,avg_v_den,avg_e,avg_e_num,avg_e_den,worst\n";
    std::vector<std::pair<int64_t, double>> pts;
    int rc = 0;
    for (int64_t n : o.sizes) {
        LoadedGraph lg;
        std::string gid;
        if (o.gen == "gnp") {
            lg.graph = gnp_graph(static_cast<NodeId>(n), o.pn / static_cast<double>(n), o.seed);
            gid = "gnp:n=" + std::to_string(n);
        } else if (o.gen == "regular") {
            lg.graph = random_regular_graph(static_cast<NodeId>(n), o.d, o.seed);
            gid = "regular:n=" + std::to_string(n) + ":d=" + std::to_string(o.d);
        } else {
            throw input_error("unknown sweep generator: " + o.gen);
        }
        ExperimentResult res = run_experiment(lg, gid, o.algo, o.trials, o.seed,
                                              kDefaultMaxRounds, false);
        if (res.invalid || res.timeouts || res.completed == 0) rc = 1;
        std::vector<std::string> row;
        row.push_back(std::to_string(n));
        row.push_back(o.algo);
        if (res.completed > 0) {
            rat_cells(row, res.report.avg_v);
            rat_cells(row, res.report.avg_e);
            row.push_back(std::to_string(res.report.worst));
            pts.push_back({n, boost::rational_cast<double>(res.report.avg_v)});
        } else {
            empty_rat_cells(row);
            empty_rat_cells(row);
            row.push_back("");
        }
        csv += join_row(row);
        std::cout << "n=" << n << " " << o.algo;
        if (res.completed > 0)
            std::cout << " avg_v=" << format_rat_decimal(res.report.avg_v)
                      << " avg_e=" << format_rat_decimal(res.report.avg_e)
                      << " worst=" << res.report.worst << "\n";
        else
            std::cout << " no completed trials\n";
    }
    if (o.out.empty())
        std::cout << csv;
    else
        write_text(o.out, csv);
    if (!o.svg.empty()) write_text(o.svg, render_svg(pts, o.algo + " node-averaged rounds"));
    return rc;
}

// ---- report ----------------------------------------------------------------

long long cell_ll(const std::vector<std::string>& row, size_t idx, const char* what) {
    if (idx >= row.size() || row[idx].empty())
        throw input_error(std::string("missing CSV cell: ") + what);
    try {
        return std::stoll(row[idx]);
    } catch (const std::exception&) {
        throw input_error(std::string("bad CSV cell: ") + what + " = " + row[idx]);
    }
}

int cmd_report(const std::string& in_path, const std::string& out_path) {
    std::ifstream in(in_path, std::ios::binary);
    if (!in) throw input_error("cannot open CSV: " + in_path);
    auto rows = read_csv(in);
    if (rows.empty()) throw input_error("empty CSV");
    std::map<std::string, size_t> col;
    for (size_t i = 0; i < rows[0].size(); ++i) col[rows[0][i]] = i;
    for (const char* need : {"kind", "graph", "algorithm", "seed", "avg_v_num", "avg_v_den",
                             "avg_e_num", "avg_e_den", "worst", "timed_out"})
        if (!col.count(need)) throw input_error(std::string("CSV lacks column ") + need);

    struct Group {
        int trials = 0;
        uint64_t seed_min = ~0ULL;
        Rat sum_v, sum_e;
        Rat mis_sum;
        int mis_count = 0;
        long long n = 0, m = 0;
        int worst = 0;
        bool timed_out = false;
    };
    std::vector<std::string> order;
    std::map<std::string, Group> groups;
    for (size_t i = 1; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.size() < 2 || r[col["kind"]] != "trial") continue;
        std::string key = r[col["graph"]] + "\x1f" + r[col["algorithm"]];
        if (!groups.count(key)) order.push_back(key);
        Group& gr = groups[key];
        if (r[col["timed_out"]] == "1") {
            gr.timed_out = true;
            continue;
        }
        ++gr.trials;
        gr.seed_min = std::min(gr.seed_min,
                               static_cast<uint64_t>(cell_ll(r, col["seed"], "seed")));
        gr.sum_v += Rat(cell_ll(r, col["avg_v_num"], "avg_v_num"),
                        cell_ll(r, col["avg_v_den"], "avg_v_den"));
        gr.sum_e += Rat(cell_ll(r, col["avg_e_num"], "avg_e_num"),
                        cell_ll(r, col["avg_e_den"], "avg_e_den"));
        gr.n = cell_ll(r, col["n"], "n");
        gr.m = cell_ll(r, col["m"], "m");
        gr.worst = std::max(gr.worst, static_cast<int>(cell_ll(r, col["worst"], "worst")));
        if (col.count("mis_s0_num") && !r[col["mis_s0_num"]].empty()) {
            gr.mis_sum += Rat(cell_ll(r, col["mis_s0_num"], "mis_s0_num"),
                              cell_ll(r, col["mis_s0_den"], "mis_s0_den"));
            ++gr.mis_count;
        }
    }
    if (order.empty()) throw input_error("no trial rows in CSV");

    std::string csv = std::string(kRunHeader) + "\n";
    for (const auto& key : order) {
        Group& gr = groups[key];
        auto cut = key.find('\x1f');
        std::vector<std::string> row;
        row.push_back("aggregate");
        row.push_back(key.substr(0, cut));
        row.push_back(key.substr(cut + 1));
        row.push_back(std::to_string(gr.trials ? gr.seed_min : 0));
        row.push_back(std::to_string(gr.trials));
        row.push_back(std::to_string(gr.n));
        row.push_back(std::to_string(gr.m));
        if (gr.trials > 0) {
            rat_cells(row, gr.sum_v / gr.trials);
            rat_cells(row, gr.sum_e / gr.trials);
            row.push_back(std::to_string(gr.worst));
        } else {
            empty_rat_cells(row);
            empty_rat_cells(row);
            row.push_back("");
        }
        // exp_v_max needs per-node data that trial rows do not carry
        empty_rat_cells(row);
        if (gr.mis_count > 0)
            rat_cells(row, gr.mis_sum / gr.mis_count);
        else
            empty_rat_cells(row);
        row.push_back(gr.timed_out ? "1" : "0");
        csv += join_row(row);
    }
    if (out_path.empty())
        std::cout << csv;
    else
        write_text(out_path, csv);
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"locavg: distributed-round simulator and lower-bound instance kit"};
    app.require_subcommand(1);
    int rc = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph file");
    gen->require_subcommand(1);
    GenOpts go;
    auto* gct = gen->add_subcommand("ct", "recursive cluster construction (optionally lifted)");
    gct->add_option("--k", go.k, "recursion depth")->required();
    gct->add_option("--beta", go.beta, "width parameter (even, >= 4)")->required();
    gct->add_option("--lift", go.lift, "random lift order (omit for the base graph)");
    gct->add_option("--seed", go.seed, "lift seed");
    gct->add_option("-o,--out", go.out, "output path")->required();
    gct->callback([&] { rc = cmd_gen_ct(go); });
    auto* ggnp = gen->add_subcommand("gnp", "Erdos-Renyi G(n,p)");
    ggnp->add_option("--n", go.n, "nodes")->required();
    ggnp->add_option("--p", go.p, "edge probability")->required();
    ggnp->add_option("--seed", go.seed, "seed");
    ggnp->add_option("-o,--out", go.out, "output path")->required();
    ggnp->callback([&] { rc = cmd_gen_gnp(go); });
    auto* greg = gen->add_subcommand("regular", "random d-regular graph");
    greg->add_option("--n", go.n, "nodes")->required();
    greg->add_option("--d", go.d, "degree")->required();
    greg->add_option("--seed", go.seed, "seed");
    greg->add_option("-o,--out", go.out, "output path")->required();
    greg->callback([&] { rc = cmd_gen_regular(go); });

    // run
    RunOpts ro;
    auto* run = app.add_subcommand("run", "run seeded trials of one algorithm on one graph");
    run->add_option("--graph", ro.graph, "graph file")->required();
    run->add_option("--algo", ro.algo,
                    "luby_mis | ruling_set_22 | linial_mis | det_ruling_logdelta | "
                    "det_ruling_loglogn | rand_mm | det_mm | sinkless_r<r>")
        ->required();
    run->add_option("--trials", ro.trials, "trial count (seeds base..base+trials-1)");
    run->add_option("--seed", ro.seed, "base seed");
    run->add_option("--max-rounds", ro.max_rounds, "round cap before timeout");
    run->add_option("-o,--out", ro.out, "per-trial + aggregate CSV (stdout when omitted)");
    run->add_option("--iterations", ro.iter_out, "per-iteration CSV");
    run->callback([&] { rc = cmd_run(ro); });

    // verify
    auto* ver = app.add_subcommand("verify", "structural checks on generated instances");
    ver->require_subcommand(1);
    std::string vpath;
    int vk = 1;
    uint64_t vseed = 1;
    auto* vfam = ver->add_subcommand("family", "exact cluster-family membership");
    vfam->add_option("--graph", vpath, "graph file")->required();
    vfam->callback([&] { rc = cmd_verify_family(vpath); });
    auto* viso = ver->add_subcommand("iso", "tree-like pair + view isomorphism + hash");
    viso->add_option("--graph", vpath, "graph file")->required();
    viso->add_option("--k", vk, "view radius");
    viso->add_option("--seed", vseed, "pair search seed");
    viso->callback([&] { rc = cmd_verify_iso(vpath, vk, vseed); });
    CycleOpts co;
    auto* vcyc = ver->add_subcommand("cycles", "short-cycle fraction vs Delta^ell/q");
    vcyc->add_option("--graph", co.graph, "graph file (base graph when --lifts is used)")
        ->required();
    vcyc->add_option("--ell", co.ell, "cycle length cap")->required();
    vcyc->add_option("--lifts", co.lifts, "sample this many fresh lifts of the input");
    vcyc->add_option("--q", co.q, "lift order for --lifts");
    vcyc->add_option("--seed", co.seed, "lift seed base");
    vcyc->callback([&] { rc = cmd_verify_cycles(co); });
    AlphaOpts ao;
    auto* valp = ver->add_subcommand("alpha", "exact clique-pair independence inside clusters");
    valp->add_option("--graph", ao.graph, "graph file")->required();
    valp->add_option("--cluster", ao.cluster, "restrict to one skeleton cluster");
    valp->add_option("--samples", ao.samples, "components sampled per cluster");
    valp->add_option("--seed", ao.seed, "sampling seed");
    valp->add_option("--budget", ao.budget, "branch-and-bound node budget");
    valp->callback([&] { rc = cmd_verify_alpha(ao); });

    // sweep
    SweepOpts so;
    auto* sw = app.add_subcommand("sweep", "scaling runs over generated sizes");
    sw->add_option("--algo", so.algo, "algorithm name")->required();
    sw->add_option("--gen", so.gen, "gnp | regular");
    sw->add_option("--sizes", so.sizes, "node counts")->required()->delimiter(',');
    sw->add_option("--pn", so.pn, "gnp: p = pn / n");
    sw->add_option("--d", so.d, "regular: degree");
    sw->add_option("--trials", so.trials, "trials per size");
    sw->add_option("--seed", so.seed, "base seed");
    sw->add_option("-o,--out", so.out, "CSV output (stdout when omitted)");
    sw->add_option("--svg", so.svg, "write a line chart of avg_v vs n");
    sw->callback([&] { rc = cmd_sweep(so); });

    // report
    std::string rin, rout;
    auto* rep = app.add_subcommand("report", "re-aggregate a per-trial CSV");
    rep->add_option("--in", rin, "per-trial CSV from `run`")->required();
    rep->add_option("-o,--out", rout, "aggregate CSV (stdout when omitted)");
    rep->callback([&] { rc = cmd_report(rin, rout); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    return rc;
}

}  // namespace locavg
