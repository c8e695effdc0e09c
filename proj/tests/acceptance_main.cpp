// Acceptance harness: thirteen end-to-end checks covering the simulator
// semantics, the averaged complexity metrics, the algorithm validators, and
// the structured-instance kit (cluster construction, lifts, view
// isomorphism). Each criterion prints one PASS/FAIL line with its runtime;
// the process exit code is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "locavg/algorithms.hpp"
#include "locavg/cluster_tree.hpp"
#include "locavg/engine.hpp"
#include "locavg/generators.hpp"
#include "locavg/independence.hpp"
#include "locavg/iso.hpp"
#include "locavg/metrics.hpp"
#include "locavg/view.hpp"

using namespace locavg;

namespace {

// ---- pinned tolerances and protocol constants ------------------------------
constexpr int kValiditySeeds = 20;         // seeds per randomized algorithm
constexpr int kFlatnessTrials = 100;       // trials per size in the scaling checks
constexpr int kFlatnessFactor = 2;         // allowed max/min ratio of means
constexpr int kWorstRoundsLogFactor = 10;  // matching worst-case rounds vs log2 n
constexpr int kSinklessSlackFactor = 3;    // rounds vs fitted c * log2 n
constexpr double kCycleMeanCap = 0.81;     // Delta^4 / q for the 4-clique at q = 100
constexpr double kCycleSigmaSlack = 3.0;   // per-lift cap: mean bound + 3 sigma
const Rat kS0JoinFloor(2, 3);              // required |MIS inter S0| / |S0|
constexpr int kPairedWinFloor = 18;        // of 20 paired seeds
constexpr int kAlphaSamples = 5;           // clique-pair components per cluster
constexpr int64_t kAlphaBudget = 2'000'000;
constexpr int kMaxRounds = 1 << 30;

// ---- bookkeeping shared between criteria -----------------------------------

struct ReportNote {
    Rat avg_v;
    Rat exp_v_max;
    int worst = 0;
    bool identity_ok = false;   // mean of per-node means equals avg_v exactly
};
std::vector<ReportNote> g_notes;

void note_report(const ComplexityReport& rep, NodeId n) {
    ReportNote note;
    note.avg_v = rep.avg_v;
    note.exp_v_max = rep.exp_v_max;
    note.worst = rep.worst;
    Rat scaled_sum(0);
    for (const Rat& e : rep.exp_node) scaled_sum += e * Rat(7, 3);
    note.identity_ok = n == 0 || scaled_sum / (Rat(7, 3) * n) == rep.avg_v;
    g_notes.push_back(note);
}

struct DetMmIteration {
    int64_t edges_before = 0;
    int64_t edges_removed = 0;
    int64_t matched_weight = 0;
};
std::vector<std::vector<DetMmIteration>> g_detmm_runs;

struct RunBatch {
    ComplexityReport report;
    std::vector<ExecutionTrace> traces;
    bool all_valid = true;
};

RunBatch run_batch(const std::function<std::unique_ptr<Algorithm>()>& make,
                   const std::string& validator_name, const Graph& g, uint64_t seed0, int trials,
                   bool keep_traces = false, bool capture_detmm = false) {
    ReportBuilder rb(g);
    RunBatch out;
    for (int t = 0; t < trials; ++t) {
        auto alg = make();
        ExecutionTrace tr = run(*alg, g, seed0 + static_cast<uint64_t>(t), kMaxRounds);
        if (!validate_trace(validator_name, g, tr)) out.all_valid = false;
        if (capture_detmm) {
            const auto* st = alg->last_iteration_stats();
            if (st) {
                std::vector<DetMmIteration> its;
                for (const auto& s : *st)
                    its.push_back({s.edges_before, s.edges_removed, s.matched_weight});
                g_detmm_runs.push_back(std::move(its));
            }
        }
        rb.add(tr);
        if (keep_traces) out.traces.push_back(std::move(tr));
    }
    out.report = rb.finish();
    note_report(out.report, g.n);
    return out;
}

std::string rat_str(const Rat& r) { return format_rat_decimal(r, 6); }

// ---- shared instances -------------------------------------------------------

struct Instances {
    // the four structured bases, by (depth, width)
    ClusterGraph ct06, ct010, ct110, ct112;
    // scaling corpus: G(n, 10/n) at three sizes
    Graph gnp1k, gnp10k, gnp100k;
};

Instances build_instances() {
    Instances in;
    in.ct06 = build_base_graph(build_skeleton(0, 6));
    in.ct010 = build_base_graph(build_skeleton(0, 10));
    in.ct110 = build_base_graph(build_skeleton(1, 10));
    in.ct112 = build_base_graph(build_skeleton(1, 12));
    in.gnp1k = gnp_graph(1000, 10.0 / 1000, 1);
    in.gnp10k = gnp_graph(10000, 10.0 / 10000, 1);
    in.gnp100k = gnp_graph(100000, 10.0 / 100000, 1);
    return in;
}

// corpus for the goodness floors: 100 seeded sparse random graphs
std::vector<Graph> goodness_corpus() {
    std::vector<Graph> gs;
    for (NodeId n : {100, 200, 500, 1000, 2000})
        for (double pn : {2.0, 10.0})
            for (uint64_t seed = 1; seed <= 10; ++seed)
                gs.push_back(gnp_graph(n, pn / n, seed));
    return gs;
}

// covering-map property: every lifted node sees each base neighbor exactly once
bool local_bijection(const Graph& base, const Graph& lifted, int64_t q) {
    if (lifted.n != base.n * q || lifted.m() != base.m() * q) return false;
    std::vector<int> count(base.n, 0);
    for (NodeId x = 0; x < lifted.n; ++x) {
        NodeId b = static_cast<NodeId>(x / q);
        for (NodeId y : lifted.neighbors(x)) ++count[y / q];
        for (NodeId nb : base.neighbors(b)) {
            if (count[nb] != 1) {
                for (NodeId y : lifted.neighbors(x)) count[y / q] = 0;
                return false;
            }
        }
        int deg_sum = 0;
        for (NodeId y : lifted.neighbors(x)) {
            deg_sum += count[y / q];
            count[y / q] = 0;
        }
        if (deg_sum != base.degree(b)) return false;
    }
    return true;
}

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// ---- criterion runner -------------------------------------------------------

int g_failures = 0;

void criterion(int id, const std::function<std::pair<bool, std::string>()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        auto [p, d] = body();
        pass = p;
        detail = d;
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%2d %s [%6.1fs] %s\n", id, pass ? "PASS" : "FAIL", secs, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

}  // namespace

int main() {
    std::printf("acceptance checks\n");
    std::fflush(stdout);
    Instances inst = build_instances();
    std::vector<Graph> corpus = goodness_corpus();
    std::vector<const Graph*> corpus_all;
    for (const Graph& g : corpus) corpus_all.push_back(&g);
    for (const ClusterGraph* c : {&inst.ct06, &inst.ct010, &inst.ct110, &inst.ct112})
        corpus_all.push_back(&c->graph);

    // 1: ruling good-node floor -- nodes whose distance-2 ball carries marking
    // probability >= 1/2 must be at least half of all nodes, exactly
    criterion(1, [&]() -> std::pair<bool, std::string> {
        int passed = 0;
        double min_margin = 1e18;
        for (const Graph* g : corpus_all) {
            int64_t good = count_good_nodes_ruling(*g);
            int64_t floor = (g->n + 1) / 2;
            if (good >= floor) ++passed;
            if (floor > 0) min_margin = std::min(min_margin, double(good) / double(floor));
        }
        std::ostringstream os;
        os << "good-node floor ceil(n/2): " << passed << "/" << corpus_all.size()
           << " instances (tightest good/floor = " << min_margin << ")";
        return {passed == static_cast<int>(corpus_all.size()), os.str()};
    });

    // 2: matching good-edge floor -- same corpus, edges with a good endpoint
    criterion(2, [&]() -> std::pair<bool, std::string> {
        int passed = 0;
        double min_margin = 1e18;
        for (const Graph* g : corpus_all) {
            int64_t good = count_good_edges_matching(*g);
            int64_t floor = (g->m() + 1) / 2;
            if (good >= floor) ++passed;
            if (floor > 0) min_margin = std::min(min_margin, double(good) / double(floor));
        }
        std::ostringstream os;
        os << "good-edge floor ceil(m/2): " << passed << "/" << corpus_all.size()
           << " instances (tightest good/floor = " << min_margin << ")";
        return {passed == static_cast<int>(corpus_all.size()), os.str()};
    });

    // 3: validity suite -- every algorithm on every instance over seeds;
    // deterministic algorithms run once (seed-independence is unit-tested)
    criterion(3, [&]() -> std::pair<bool, std::string> {
        struct Algo {
            const char* name;
            std::function<std::unique_ptr<Algorithm>()> make;
            bool deterministic;
            bool needs_deg3;
        };
        std::vector<Algo> roster = {
            {"luby_mis", [] { return luby_mis(); }, false, false},
            {"ruling_set_22", [] { return ruling_set_22(); }, false, false},
            {"linial_mis", [] { return linial_greedy_mis(); }, true, false},
            {"det_ruling_logdelta", [] { return det_ruling_set(RulingMode::log_delta); }, true,
             false},
            {"det_ruling_loglogn", [] { return det_ruling_set(RulingMode::log_log_n); }, true,
             false},
            {"rand_mm", [] { return rand_maximal_matching(); }, false, false},
            {"det_mm", [] { return det_maximal_matching(); }, true, false},
            {"sinkless_r3", [] { return sinkless_orientation(3); }, false, true},
        };
        std::vector<std::pair<std::string, const Graph*>> suite = {
            {"path5", nullptr}, {"cycle12", nullptr}, {"clique4", nullptr}, {"k33", nullptr},
            {"gnp500", nullptr}, {"regular1000", nullptr}, {"ct_0_6", &inst.ct06.graph},
            {"ct_1_10", &inst.ct110.graph}};
        Graph p5 = path_graph(5), c12 = cycle_graph(12), k4 = complete_graph(4),
              k33 = complete_bipartite(3, 3), g500 = gnp_graph(500, 10.0 / 500, 42),
              r1000 = random_regular_graph(1000, 3, 42);
        suite[0].second = &p5;
        suite[1].second = &c12;
        suite[2].second = &k4;
        suite[3].second = &k33;
        suite[4].second = &g500;
        suite[5].second = &r1000;

        int combos = 0, failures = 0, skipped = 0;
        for (const auto& [gname, g] : suite) {
            for (const Algo& a : roster) {
                if (a.needs_deg3 && g->min_degree() < 3) {
                    ++skipped;   // precondition of the problem itself
                    continue;
                }
                int trials = a.deterministic ? 1 : kValiditySeeds;
                RunBatch batch = run_batch(a.make, a.name, *g, 1, trials, false,
                                           std::string(a.name) == "det_mm");
                ++combos;
                if (!batch.all_valid) ++failures;
            }
        }
        std::ostringstream os;
        os << "validity suite: " << combos << " algorithm-instance combos clean, " << skipped
           << " skipped by the degree-3 floor, " << failures << " failures";
        return {failures == 0, os.str()};
    });

    // 4: completion-time semantics -- hand-worked three-node traces, plus
    // node-processing-order independence on ten instances
    criterion(4, [&]() -> std::pair<bool, std::string> {
        Graph p3 = path_graph(3);
        bool hand_ok = true;
        {
            ExecutionTrace tr;
            tr.problem_kind = ProblemKind::node_labeled;
            tr.node_commit_round = {1, 2, 1};
            tr.node_output = {0, 1, 0};
            tr.edge_commit_round = {-1, -1};
            tr.edge_output = {0, 0};
            tr.rounds_elapsed = 2;
            CompletionTimes ct = completion_times(tr, p3);
            hand_ok &= ct.t_node == std::vector<int>{1, 2, 1};
            hand_ok &= ct.t_edge == std::vector<int>{2, 2};
            ComplexityReport rep = make_report(std::span(&tr, 1), p3);
            hand_ok &= rep.avg_v == Rat(4, 3) && rep.avg_e == Rat(2);
        }
        {
            ExecutionTrace tr;
            tr.problem_kind = ProblemKind::edge_labeled;
            tr.node_commit_round = {-1, -1, -1};
            tr.node_output = {0, 0, 0};
            tr.edge_commit_round = {3, 5};
            tr.edge_output = {1, 0};
            tr.rounds_elapsed = 5;
            CompletionTimes ct = completion_times(tr, p3);
            hand_ok &= ct.t_node == std::vector<int>{3, 5, 5};
            hand_ok &= ct.t_edge == std::vector<int>{3, 5};
        }

        int order_ok = 0, order_total = 0;
        auto check_order = [&](const std::function<std::unique_ptr<Algorithm>()>& make,
                               const Graph& g, uint64_t seed, bool shuffle) {
            ++order_total;
            auto a1 = make();
            ExecutionTrace t1 = run(*a1, g, seed, kMaxRounds);
            std::vector<NodeId> order(g.n);
            std::iota(order.begin(), order.end(), 0);
            if (shuffle) {
                Rng rng(seed * 977 + 5);
                for (NodeId i = g.n - 1; i > 0; --i)
                    std::swap(order[i], order[rng.below(static_cast<uint64_t>(i) + 1)]);
            } else {
                std::reverse(order.begin(), order.end());
            }
            auto a2 = make();
            ExecutionTrace t2 = run(*a2, g, seed, kMaxRounds, order);
            if (t1.node_output == t2.node_output && t1.edge_output == t2.edge_output &&
                t1.node_commit_round == t2.node_commit_round &&
                t1.edge_commit_round == t2.edge_commit_round &&
                t1.rounds_elapsed == t2.rounds_elapsed)
                ++order_ok;
        };
        for (uint64_t s = 0; s < 5; ++s)
            check_order([] { return luby_mis(); }, gnp_graph(100, 0.05, s), 7 + s, s % 2 == 0);
        for (uint64_t s = 0; s < 3; ++s)
            check_order([] { return rand_maximal_matching(); }, gnp_graph(80, 0.1, s), 11 + s,
                        s % 2 == 1);
        check_order([] { return ruling_set_22(); }, cycle_graph(12), 3, false);
        check_order([] { return det_maximal_matching(); }, complete_bipartite(3, 3), 1, true);

        std::ostringstream os;
        os << "completion-time hand traces " << (hand_ok ? "exact" : "WRONG")
           << "; order independence " << order_ok << "/" << order_total;
        return {hand_ok && order_ok == order_total, os.str()};
    });

    // 5: ruling-set node-averaged flatness across three decades of n
    Rat ruling_avg_small, ruling_avg_large;
    criterion(5, [&]() -> std::pair<bool, std::string> {
        std::vector<const Graph*> sizes = {&inst.gnp1k, &inst.gnp10k, &inst.gnp100k};
        std::vector<Rat> means;
        bool valid = true;
        for (const Graph* g : sizes) {
            RunBatch b = run_batch([] { return ruling_set_22(); }, "ruling_set_22", *g, 1,
                                   kFlatnessTrials);
            valid &= b.all_valid;
            means.push_back(b.report.avg_v);
        }
        ruling_avg_small = means.front();
        ruling_avg_large = means.back();
        Rat lo = std::min(means.front(), means.back());
        Rat hi = std::max(means.front(), means.back());
        bool flat = hi <= Rat(kFlatnessFactor) * lo;
        std::ostringstream os;
        os << "ruling mean rounds per node: " << rat_str(means[0]) << " / " << rat_str(means[1])
           << " / " << rat_str(means[2]) << " at n=1e3/1e4/1e5 (endpoint ratio <= "
           << kFlatnessFactor << ": " << (flat ? "yes" : "no") << ")";
        return {flat && valid, os.str()};
    });

    // 6: matching edge-averaged flatness plus a hard worst-case round cap
    criterion(6, [&]() -> std::pair<bool, std::string> {
        std::vector<const Graph*> sizes = {&inst.gnp1k, &inst.gnp10k, &inst.gnp100k};
        std::vector<Rat> means;
        bool valid = true, capped = true;
        int worst_seen = 0;
        for (const Graph* g : sizes) {
            RunBatch b = run_batch([] { return rand_maximal_matching(); }, "rand_mm", *g, 1,
                                   kFlatnessTrials, true);
            valid &= b.all_valid;
            means.push_back(b.report.avg_e);
            double cap = kWorstRoundsLogFactor * std::log2(static_cast<double>(g->n));
            for (const ExecutionTrace& tr : b.traces) {
                worst_seen = std::max(worst_seen, tr.rounds_elapsed);
                if (tr.rounds_elapsed > cap) capped = false;
            }
        }
        Rat lo = std::min(means.front(), means.back());
        Rat hi = std::max(means.front(), means.back());
        bool flat = hi <= Rat(kFlatnessFactor) * lo;
        std::ostringstream os;
        os << "matching mean rounds per edge: " << rat_str(means[0]) << " / " << rat_str(means[1])
           << " / " << rat_str(means[2]) << " (endpoint ratio ok: " << (flat ? "yes" : "no")
           << "); every trial within " << kWorstRoundsLogFactor << " log2 n rounds: "
           << (capped ? "yes" : "no") << " (max " << worst_seen << ")";
        return {flat && capped && valid, os.str()};
    });

    // 7: per-iteration bounds of the deterministic matching, from the stats
    // captured across the whole validity suite
    criterion(7, [&]() -> std::pair<bool, std::string> {
        int64_t iterations = 0;
        bool removal_ok = true, weight_ok = true;
        for (const auto& run_stats : g_detmm_runs) {
            for (const DetMmIteration& it : run_stats) {
                ++iterations;
                if (it.edges_removed < (it.edges_before + 39) / 40) removal_ok = false;
                if (10 * it.matched_weight < it.edges_before) weight_ok = false;
            }
        }
        std::ostringstream os;
        os << "deterministic matching: " << iterations << " iterations across "
           << g_detmm_runs.size() << " runs; removal >= ceil(E/40): "
           << (removal_ok ? "yes" : "no") << ", weight >= E/10: " << (weight_ok ? "yes" : "no");
        return {iterations > 0 && removal_ok && weight_ok, os.str()};
    });

    // 8: orientation scaling on random cubic graphs -- rounds against a
    // fitted log slope, and the node-average may at most double
    criterion(8, [&]() -> std::pair<bool, std::string> {
        struct SizeStats {
            int n;
            int max_rounds = 0;
            Rat mean_avg_v;
        };
        std::vector<SizeStats> stats;
        bool all_valid = true;
        for (int n : {100, 1000, 10000}) {
            SizeStats st;
            st.n = n;
            Rat sum(0);
            for (uint64_t i = 1; i <= 5; ++i) {
                Graph g = random_regular_graph(n, 3, i);
                RunBatch b = run_batch([] { return sinkless_orientation(3); }, "sinkless_r3", g,
                                       1000 + i, 1, true);
                all_valid &= b.all_valid;
                all_valid &= is_sinkless_orientation(g, b.traces[0].edge_output);
                st.max_rounds = std::max(st.max_rounds, b.traces[0].rounds_elapsed);
                sum += b.report.avg_v;
            }
            st.mean_avg_v = sum / 5;
            stats.push_back(st);
        }
        double c = stats[0].max_rounds / std::log2(100.0);
        bool rounds_ok = true;
        for (const SizeStats& st : stats)
            if (st.max_rounds > kSinklessSlackFactor * c * std::log2(double(st.n)))
                rounds_ok = false;
        bool avg_ok = stats[2].mean_avg_v <= Rat(2) * stats[0].mean_avg_v;
        std::ostringstream os;
        os << "orientation: worst rounds " << stats[0].max_rounds << "/" << stats[1].max_rounds
           << "/" << stats[2].max_rounds << " at n=1e2/1e3/1e4 (fitted slope c=" << c
           << ", slack x" << kSinklessSlackFactor << "); mean rounds per node "
           << rat_str(stats[0].mean_avg_v) << " -> " << rat_str(stats[2].mean_avg_v)
           << " (<= 2x: " << (avg_ok ? "yes" : "no") << ")";
        return {all_valid && rounds_ok && avg_ok, os.str()};
    });

    // 9: structured-family exactness -- family membership, node totals, the
    // degree ceiling, and exact two-per-component independence samples
    criterion(9, [&]() -> std::pair<bool, std::string> {
        std::vector<const ClusterGraph*> cases = {&inst.ct06, &inst.ct010, &inst.ct110,
                                                  &inst.ct112};
        bool all_ok = true;
        int64_t sampled = 0;
        std::ostringstream os;
        for (const ClusterGraph* cgp : cases) {
            const ClusterGraph& cg = *cgp;
            const ClusterTreeSkeleton& sk = *cg.skeleton;
            bool family = validate_family(cg).ok();

            int64_t expect_n = 0;
            for (const SkeletonNode& nd : sk.nodes)
                expect_n += 2 * ipow(sk.beta, sk.k + 1) * ipow(sk.beta / 2, sk.k + 1 - nd.depth);
            bool total_ok = cg.graph.n == expect_n && sk.total_nodes() == expect_n;
            bool deg_ok = cg.graph.max_degree() == 2 * ipow(sk.beta, sk.k + 1);

            // root cluster independent, every other cluster a disjoint union
            // of clique pairs with independence exactly 2
            auto members = cg.cluster_members();
            bool alpha_ok = true;
            for (NodeId v : members[0])
                for (NodeId u : cg.graph.neighbors(v))
                    if (cg.cluster_of[u] == 0) alpha_ok = false;
            for (size_t c = 1; c < members.size(); ++c) {
                int64_t clique = ipow(sk.beta, sk.nodes[c].psi);
                int64_t want_comp_size = 2 * clique;
                if (static_cast<int64_t>(members[c].size()) % want_comp_size != 0) {
                    alpha_ok = false;
                    continue;
                }
                // intra-cluster components
                std::vector<char> in_cluster(cg.graph.n, 0), seen(cg.graph.n, 0);
                for (NodeId v : members[c]) in_cluster[v] = 1;
                std::vector<std::vector<NodeId>> comps;
                std::vector<NodeId> stack;
                for (NodeId v : members[c]) {
                    if (seen[v]) continue;
                    comps.emplace_back();
                    stack.push_back(v);
                    seen[v] = 1;
                    while (!stack.empty()) {
                        NodeId x = stack.back();
                        stack.pop_back();
                        comps.back().push_back(x);
                        for (EdgeId e : cg.graph.incident(x)) {
                            if (!cg.edge_self(e)) continue;
                            NodeId y = cg.graph.other_end(e, x);
                            if (in_cluster[y] && !seen[y]) {
                                seen[y] = 1;
                                stack.push_back(y);
                            }
                        }
                    }
                }
                int64_t want_comps =
                    static_cast<int64_t>(members[c].size()) / want_comp_size;
                if (static_cast<int64_t>(comps.size()) != want_comps) alpha_ok = false;
                Rng rng(0xa1fa + static_cast<uint64_t>(c) * 131 + sk.beta);
                int take = std::min<int>(kAlphaSamples, static_cast<int>(comps.size()));
                for (int i = 0; i < take; ++i) {
                    size_t pick = rng.below(comps.size());
                    const auto& comp = comps[pick];
                    if (static_cast<int64_t>(comp.size()) != want_comp_size) alpha_ok = false;
                    IndependenceResult res =
                        independence_number_exact(cg.graph, comp, kAlphaBudget);
                    if (!res.exact || res.alpha != 2) alpha_ok = false;
                    ++sampled;
                }
            }
            bool ok = family && total_ok && deg_ok && alpha_ok;
            all_ok &= ok;
            os << "(" << sk.k << "," << sk.beta << "):" << (ok ? "ok" : "BAD") << " ";
        }
        os << "- " << sampled << " components sampled, independence 2 each";
        return {all_ok, os.str()};
    });

    // 10: lift correctness -- identity at order 1, covering property and
    // family membership at orders 5 and 50, short-cycle thinning on cliques
    criterion(10, [&]() -> std::pair<bool, std::string> {
        ClusterGraph l1 = random_lift(inst.ct06, 1, 5);
        bool q1_ok = validate_family(l1).ok() && l1.graph.edges == inst.ct06.graph.edges &&
                     local_bijection(inst.ct06.graph, l1.graph, 1);
        ClusterGraph l1b = random_lift(inst.ct110, 1, 6);
        q1_ok &= validate_family(l1b).ok() && l1b.graph.edges == inst.ct110.graph.edges;

        ClusterGraph l5 = random_lift(inst.ct110, 5, 7);
        bool q5_ok = validate_family(l5).ok() && local_bijection(inst.ct110.graph, l5.graph, 5);
        bool q50_ok;
        {
            ClusterGraph l50 = random_lift(inst.ct110, 50, 8);
            q50_ok = validate_family(l50).ok() && local_bijection(inst.ct110.graph, l50.graph, 50);
        }

        Graph k4 = complete_graph(4);
        std::vector<double> fr;
        for (uint64_t s = 1; s <= 50; ++s)
            fr.push_back(cycle_fraction(lift_graph(k4, 100, s), 4));
        double mean = std::accumulate(fr.begin(), fr.end(), 0.0) / fr.size();
        double var = 0;
        for (double f : fr) var += (f - mean) * (f - mean);
        double sd = std::sqrt(var / fr.size());
        bool mean_ok = mean <= kCycleMeanCap;
        bool each_ok = true;
        for (double f : fr)
            if (f > kCycleMeanCap + kCycleSigmaSlack * sd) each_ok = false;
        std::ostringstream os;
        os << "lifts: order-1 identity " << (q1_ok ? "ok" : "BAD") << ", order 5/50 family "
           << (q5_ok ? "ok" : "BAD") << "/" << (q50_ok ? "ok" : "BAD")
           << "; short-cycle fraction over 50 clique lifts: mean " << mean << " (cap "
           << kCycleMeanCap << "), sd " << sd << ", per-lift cap " << (each_ok ? "held" : "BROKEN");
        return {q1_ok && q5_ok && q50_ok && mean_ok && each_ok, os.str()};
    });

    // 11: view isomorphism on twenty lifted instances -- the bucket walk must
    // produce a verified mapping with matching canonical digests every time
    criterion(11, [&]() -> std::pair<bool, std::string> {
        int ok = 0;
        size_t mapping_size = 0;
        for (int i = 0; i < 20; ++i) {
            ClusterGraph lifted = random_lift(inst.ct110, 5, 200 + static_cast<uint64_t>(i));
            auto pair = find_treelike_pair(lifted, 1, 300 + static_cast<uint64_t>(i));
            if (!pair) continue;
            IsoMapping m = find_isomorphism(lifted, 1, pair->first, pair->second);
            bool verified = verify_isomorphism(lifted, 1, m);
            uint64_t h0 = canonical_view_hash(radius_view(lifted.graph, pair->first, 1));
            uint64_t h1 = canonical_view_hash(radius_view(lifted.graph, pair->second, 1));
            if (verified && h0 == h1) {
                ++ok;
                mapping_size = m.phi.size();
            }
        }
        std::ostringstream os;
        os << "view isomorphism: " << ok << "/20 lifted instances verified with equal digests"
           << " (mapping size " << mapping_size << ")";
        return {ok == 20, os.str()};
    });

    // 12: the root cluster must join the independent set, and the averaged
    // round count of the set algorithm must beat plain MIS on a lifted instance
    criterion(12, [&]() -> std::pair<bool, std::string> {
        auto members = inst.ct112.cluster_members();
        const std::vector<NodeId>& s0 = members[0];
        int64_t s0_size = static_cast<int64_t>(s0.size());
        int join_ok = 0;
        Rat min_frac(1);
        for (uint64_t seed = 1; seed <= 50; ++seed) {
            auto alg = luby_mis();
            ExecutionTrace tr = run(*alg, inst.ct112.graph, seed, kMaxRounds);
            if (!validate_trace("luby_mis", inst.ct112.graph, tr)) continue;
            int64_t in = 0;
            for (NodeId v : s0) in += tr.node_output[v] == 1;
            Rat frac(in, s0_size);
            min_frac = std::min(min_frac, frac);
            if (frac >= kS0JoinFloor) ++join_ok;
        }

        int wins = 0;
        Rat luby_mean(0), ruling_mean(0);
        {
            ClusterGraph lifted = random_lift(inst.ct112, 20, 7);
            for (uint64_t seed = 1; seed <= 20; ++seed) {
                RunBatch lb = run_batch([] { return luby_mis(); }, "luby_mis", lifted.graph,
                                        seed, 1);
                RunBatch rb = run_batch([] { return ruling_set_22(); }, "ruling_set_22",
                                        lifted.graph, seed, 1);
                luby_mean += lb.report.avg_v;
                ruling_mean += rb.report.avg_v;
                if (lb.report.avg_v > rb.report.avg_v) ++wins;
            }
            luby_mean /= 20;
            ruling_mean /= 20;
        }
        std::ostringstream os;
        os << "root-cluster join floor 2/3: " << join_ok << "/50 seeds (min fraction "
           << rat_str(min_frac) << "); lifted-instance pairing: mis mean " << rat_str(luby_mean)
           << " vs ruling mean " << rat_str(ruling_mean) << ", mis slower in " << wins
           << "/20 paired seeds";
        return {join_ok == 50 && wins >= kPairedWinFloor, os.str()};
    });

    // 13: metric identities accumulated over every report built above
    criterion(13, [&]() -> std::pair<bool, std::string> {
        int chain_bad = 0, identity_bad = 0;
        for (const ReportNote& n : g_notes) {
            if (!(n.avg_v <= n.exp_v_max && n.exp_v_max <= Rat(n.worst))) ++chain_bad;
            if (!n.identity_ok) ++identity_bad;
        }
        std::ostringstream os;
        os << "metric identities over " << g_notes.size()
           << " reports: mean <= max node mean <= worst violated " << chain_bad
           << "x, uniform-weight identity violated " << identity_bad << "x";
        return {!g_notes.empty() && chain_bad == 0 && identity_bad == 0, os.str()};
    });

    std::printf("%d of 13 criteria passed\n", 13 - g_failures);
    return g_failures;
}
