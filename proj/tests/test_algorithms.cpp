#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "locavg/algorithms.hpp"
#include "locavg/generators.hpp"
#include "locavg/graph.hpp"
#include "../src/sinkless_detail.hpp"

using namespace locavg;

namespace {

constexpr int kMaxRounds = 1 << 30;

std::vector<std::unique_ptr<Algorithm>> full_roster() {
    std::vector<std::unique_ptr<Algorithm>> out;
    out.push_back(luby_mis());
    out.push_back(ruling_set_22());
    out.push_back(linial_greedy_mis());
    out.push_back(det_ruling_set(RulingMode::log_delta));
    out.push_back(det_ruling_set(RulingMode::log_log_n));
    out.push_back(rand_maximal_matching());
    out.push_back(det_maximal_matching());
    return out;
}

}  // namespace

TEST_CASE("matching mark probability") {
    CHECK(rand_mm_mark_prob(1, 1) == Rat(1, 8));
    CHECK(rand_mm_mark_prob(2, 3) == Rat(1, 20));
    CHECK(rand_mm_mark_prob(7, 7) == Rat(1, 56));
}

TEST_CASE("every algorithm produces valid output on assorted graphs and seeds") {
    std::vector<Graph> graphs;
    graphs.push_back(path_graph(5));
    graphs.push_back(cycle_graph(12));
    graphs.push_back(complete_graph(4));
    graphs.push_back(complete_bipartite(3, 3));
    graphs.push_back(gnp_graph(60, 0.1, 11));
    graphs.push_back(random_regular_graph(50, 3, 7));
    for (const Graph& g : graphs) {
        for (uint64_t seed : {1, 2, 3}) {
            for (auto& alg : full_roster()) {
                ExecutionTrace tr = run(*alg, g, seed, kMaxRounds);
                CHECK_MESSAGE(validate_trace(alg->name(), g, tr),
                              alg->name(), " on n=", g.n, " seed=", seed);
            }
        }
    }
}

TEST_CASE("sinkless orientation is valid where the degree floor holds") {
    std::vector<Graph> graphs;
    graphs.push_back(complete_graph(4));
    graphs.push_back(complete_bipartite(3, 3));
    graphs.push_back(random_regular_graph(50, 3, 7));
    for (const Graph& g : graphs) {
        for (uint64_t seed : {1, 2, 3}) {
            auto alg = sinkless_orientation(3);
            ExecutionTrace tr = run(*alg, g, seed, kMaxRounds);
            CHECK_MESSAGE(validate_trace(alg->name(), g, tr), "n=", g.n, " seed=", seed);
            CHECK(is_sinkless_orientation(g, tr.edge_output));
        }
    }
}

TEST_CASE("deterministic algorithms ignore the seed") {
    Graph g = gnp_graph(80, 0.08, 5);
    {
        auto a = linial_greedy_mis();
        auto b = linial_greedy_mis();
        ExecutionTrace t1 = run(*a, g, 1, kMaxRounds);
        ExecutionTrace t2 = run(*b, g, 99, kMaxRounds);
        CHECK(t1.node_output == t2.node_output);
        CHECK(t1.node_commit_round == t2.node_commit_round);
    }
    {
        auto a = det_ruling_set(RulingMode::log_delta);
        auto b = det_ruling_set(RulingMode::log_delta);
        ExecutionTrace t1 = run(*a, g, 1, kMaxRounds);
        ExecutionTrace t2 = run(*b, g, 99, kMaxRounds);
        CHECK(t1.node_output == t2.node_output);
    }
    {
        auto a = det_maximal_matching();
        auto b = det_maximal_matching();
        ExecutionTrace t1 = run(*a, g, 1, kMaxRounds);
        ExecutionTrace t2 = run(*b, g, 99, kMaxRounds);
        CHECK(t1.edge_output == t2.edge_output);
    }
}

TEST_CASE("ruling iteration budget follows the halving counts") {
    CHECK(det_ruling_iterations(RulingMode::log_delta, 100, 8) == 3);
    CHECK(det_ruling_iterations(RulingMode::log_delta, 100, 5) == 3);
    CHECK(det_ruling_iterations(RulingMode::log_delta, 100, 1) == 0);
    CHECK(det_ruling_iterations(RulingMode::log_delta, 100, 0) == 0);
    CHECK(det_ruling_iterations(RulingMode::log_log_n, 2, 50) == 0);
    CHECK(det_ruling_iterations(RulingMode::log_log_n, 16, 50) == 4);
    CHECK(det_ruling_iterations(RulingMode::log_log_n, 1000000, 50) == 10);
}

TEST_CASE("deterministic ruling outputs point at a dominating neighbor") {
    Graph g = gnp_graph(70, 0.1, 3);
    auto alg = det_ruling_set(RulingMode::log_log_n);
    ExecutionTrace tr = run(*alg, g, 0, kMaxRounds);
    REQUIRE(validate_trace(alg->name(), g, tr));
    int in_set = 0;
    for (NodeId v = 0; v < g.n; ++v) {
        int64_t out = tr.node_output[v];
        if (out == -1) { ++in_set; continue; }
        REQUIRE(out >= 0);
        REQUIRE(out < g.n);
        auto nb = g.neighbors(v);
        CHECK(std::find(nb.begin(), nb.end(), static_cast<NodeId>(out)) != nb.end());
    }
    CHECK(in_set > 0);
}

TEST_CASE("default rounding matches everything in one round") {
    Graph g = star_graph(5);
    auto alg = det_maximal_matching();
    ExecutionTrace tr = run(*alg, g, 0, kMaxRounds);
    CHECK(tr.rounds_elapsed == 0);
    CHECK(validate_trace("det_mm", g, tr));
    const auto* stats = alg->last_iteration_stats();
    REQUIRE(stats != nullptr);
    REQUIRE(stats->size() == 1);
    CHECK((*stats)[0].edges_before == 5);
    CHECK((*stats)[0].edges_removed == 5);
    CHECK((*stats)[0].matched_weight == 6);
}

TEST_CASE("a single-edge rounder stretches rounding over iterations") {
    // always round to the heaviest surviving edge (ties to the lowest id)
    Rounder one_edge = [](const Graph& g, const std::vector<char>& alive,
                          const std::vector<int>& deg) {
        EdgeId best = -1;
        int best_w = -1;
        for (EdgeId e = 0; e < g.m(); ++e) {
            if (!alive[e]) continue;
            auto [u, v] = g.edges[e];
            int w = deg[u] + deg[v];
            if (w > best_w) { best_w = w; best = e; }
        }
        if (best < 0) return std::vector<EdgeId>{};
        return std::vector<EdgeId>{best};
    };
    Graph g = path_graph(5);   // edges (0,1) (1,2) (2,3) (3,4)
    auto alg = det_maximal_matching(one_edge);
    ExecutionTrace tr = run(*alg, g, 0, kMaxRounds);
    CHECK(validate_trace("det_mm", g, tr));
    CHECK(tr.rounds_elapsed == 1);
    CHECK(tr.edge_output == std::vector<int64_t>{0, 1, 0, 1});
    CHECK(tr.edge_commit_round == std::vector<int>{0, 0, 0, 1});
    const auto* stats = alg->last_iteration_stats();
    REQUIRE(stats->size() == 2);
    CHECK((*stats)[0].edges_before == 4);
    CHECK((*stats)[0].edges_removed == 3);
    CHECK((*stats)[1].edges_before == 1);
    CHECK((*stats)[1].edges_removed == 1);
}

TEST_CASE("rounder contract violations are caught") {
    Graph g = complete_graph(4);
    {
        auto alg = det_maximal_matching([](const Graph&, const std::vector<char>&,
                                           const std::vector<int>&) {
            return std::vector<EdgeId>{};   // weight zero
        });
        CHECK_THROWS_AS(run(*alg, g, 0, kMaxRounds), contract_error);
    }
    {
        auto alg = det_maximal_matching([](const Graph& gr, const std::vector<char>&,
                                           const std::vector<int>&) {
            return std::vector<EdgeId>{gr.m() - 1, gr.m() - 1};   // repeat = shares endpoints
        });
        CHECK_THROWS_AS(run(*alg, g, 0, kMaxRounds), contract_error);
    }
    {
        // adjacent pair
        auto alg = det_maximal_matching([](const Graph&, const std::vector<char>&,
                                           const std::vector<int>&) {
            return std::vector<EdgeId>{0, 1};   // (0,1) and (0,2) share node 0
        });
        CHECK_THROWS_AS(run(*alg, g, 0, kMaxRounds), contract_error);
    }
    {
        // second iteration hands back an edge removed in the first
        int calls = 0;
        auto alg = det_maximal_matching([&calls](const Graph& gr, const std::vector<char>& alive,
                                                 const std::vector<int>& deg) {
            ++calls;
            if (calls == 1) {
                // legal but partial: heaviest single edge
                EdgeId best = 0;
                int bw = -1;
                for (EdgeId e = 0; e < gr.m(); ++e)
                    if (alive[e]) {
                        auto [u, v] = gr.edges[e];
                        if (deg[u] + deg[v] > bw) { bw = deg[u] + deg[v]; best = e; }
                    }
                return std::vector<EdgeId>{best};
            }
            return std::vector<EdgeId>{0};   // edge 0 is long gone
        });
        Graph p = path_graph(6);
        CHECK_THROWS_AS(run(*alg, p, 0, kMaxRounds), contract_error);
    }
}

TEST_CASE("orientation of the 4-clique, seed zero") {
    Graph g = complete_graph(4);
    auto alg = sinkless_orientation(3);
    ExecutionTrace tr = run(*alg, g, 0, kMaxRounds);
    REQUIRE(validate_trace("sinkless_r3", g, tr));
    // edge order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
    CHECK(tr.edge_output == std::vector<int64_t>{1, 0, 0, 2, 3, 3});
}

TEST_CASE("sinkless orientation rejects bad parameters and thin graphs") {
    CHECK_THROWS_AS(sinkless_orientation(2), input_error);
    Graph thin = path_graph(5);
    auto alg = sinkless_orientation(3);
    CHECK_THROWS_AS(run(*alg, thin, 0, kMaxRounds), input_error);
}

TEST_CASE("starving the short-cycle phase still orients") {
    // girth 4, so a length cap of 3 pushes every node into the later phases
    Graph g = prism_graph(60);
    auto alg = detail::sinkless_orientation_with_cap(3, 3);
    for (uint64_t seed : {0, 1, 2}) {
        auto a = detail::sinkless_orientation_with_cap(3, 3);
        ExecutionTrace tr = run(*a, g, seed, kMaxRounds);
        CHECK(is_sinkless_orientation(g, tr.edge_output));
        CHECK(tr.complete());
    }
    (void)alg;
}

TEST_CASE("sinkless handles larger random cubic graphs") {
    for (uint64_t seed : {1, 2, 3, 4}) {
        Graph g = random_regular_graph(100, 3, seed);
        auto alg = sinkless_orientation(3);
        ExecutionTrace tr = run(*alg, g, seed + 50, kMaxRounds);
        CHECK(is_sinkless_orientation(g, tr.edge_output));
    }
}

TEST_CASE("unknown algorithm names are rejected by the trace validator") {
    Graph g = path_graph(3);
    ExecutionTrace tr;
    tr.node_commit_round = {0, 0, 0};
    tr.node_output = {1, 0, 1};
    tr.edge_commit_round = {-1, -1};
    tr.edge_output = {0, 0};
    CHECK_THROWS_AS(validate_trace("no_such_thing", g, tr), input_error);
}

TEST_CASE("randomized matching tracks iteration statistics") {
    Graph g = gnp_graph(100, 0.08, 13);
    auto alg = rand_maximal_matching();
    ExecutionTrace tr = run(*alg, g, 21, kMaxRounds);
    REQUIRE(validate_trace("rand_mm", g, tr));
    const auto* stats = alg->last_iteration_stats();
    REQUIRE(stats != nullptr);
    REQUIRE_FALSE(stats->empty());
    // no per-iteration removal floor here: a round of marks may all collide
    int64_t prev = g.m();
    int64_t total_removed = 0;
    for (const auto& it : *stats) {
        CHECK(it.edges_before == prev);
        CHECK(it.edges_removed >= 0);
        CHECK(it.edges_removed <= it.edges_before);
        total_removed += it.edges_removed;
        prev = it.edges_before - it.edges_removed;
    }
    CHECK(prev == 0);
    CHECK(total_removed == g.m());
}

TEST_CASE("ruling goodness counters") {
    Graph star3 = star_graph(3);
    CHECK(count_good_nodes_ruling(star3) == 4);
    Graph k4 = complete_graph(4);
    CHECK(count_good_nodes_ruling(k4) == 4);   // ball covers everything
}

TEST_CASE("matching goodness predicates") {
    Graph star6 = star_graph(6);
    CHECK(is_good_node_matching(star6, 0));
    for (NodeId leaf = 1; leaf <= 6; ++leaf) CHECK_FALSE(is_good_node_matching(star6, leaf));
    Graph star3 = star_graph(3);
    CHECK(count_good_edges_matching(star3) == 3);
    Graph c5 = cycle_graph(5);
    // regular graphs: every node good, so every edge good
    CHECK(count_good_edges_matching(c5) == 5);
}

TEST_CASE("mis outputs are binary and rounds stay sane") {
    Graph g = gnp_graph(200, 0.03, 17);
    auto alg = luby_mis();
    ExecutionTrace tr = run(*alg, g, 9, kMaxRounds);
    REQUIRE(validate_trace("luby_mis", g, tr));
    for (int64_t o : tr.node_output) CHECK((o == 0 || o == 1));
    CHECK(tr.rounds_elapsed < 200);
}
