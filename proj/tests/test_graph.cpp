#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "locavg/common.hpp"
#include "locavg/generators.hpp"
#include "locavg/graph.hpp"

using namespace locavg;

TEST_CASE("csr construction sorts and ids edges") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 3}, {0, 2}});
    CHECK(g.n == 4);
    CHECK(g.m() == 4);
    // edge ids follow sorted (u, v)
    CHECK(g.edges[0] == std::pair<NodeId, NodeId>{0, 1});
    CHECK(g.edges[1] == std::pair<NodeId, NodeId>{0, 2});
    CHECK(g.edges[2] == std::pair<NodeId, NodeId>{1, 3});
    CHECK(g.edges[3] == std::pair<NodeId, NodeId>{2, 3});
    CHECK(g.edge_id(3, 1) == 2);
    CHECK(g.edge_id(0, 3) == -1);
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(3) == 2);
    auto nb = g.neighbors(1);
    REQUIRE(nb.size() == 2);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 3);
    auto inc = g.incident(1);
    CHECK(inc[0] == 0);
    CHECK(inc[1] == 2);
    CHECK(g.other_end(2, 1) == 3);
    CHECK(g.other_end(2, 3) == 1);
    CHECK(g.min_degree() == 2);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("from_edges accepts either endpoint order") {
    Graph a = Graph::from_edges(3, {{1, 0}, {2, 1}});
    Graph b = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(a.edges == b.edges);
}

TEST_CASE("from_edges rejects malformed input") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), input_error);          // self loop
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), input_error);  // duplicate
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), input_error);          // out of range
    CHECK_THROWS_AS(Graph::from_edges(-1, {}), input_error);
}

TEST_CASE("empty and edgeless graphs") {
    Graph g = Graph::from_edges(5, {});
    CHECK(g.n == 5);
    CHECK(g.m() == 0);
    CHECK(g.min_degree() == 0);
    CHECK(g.max_degree() == 0);
    Graph e = Graph::from_edges(0, {});
    CHECK(e.n == 0);
}

TEST_CASE("named generators have the expected shape") {
    Graph p = path_graph(5);
    CHECK(p.m() == 4);
    CHECK(p.min_degree() == 1);
    CHECK(p.max_degree() == 2);

    Graph c = cycle_graph(6);
    CHECK(c.m() == 6);
    CHECK(c.min_degree() == 2);
    CHECK(c.max_degree() == 2);

    Graph k = complete_graph(5);
    CHECK(k.m() == 10);
    CHECK(k.min_degree() == 4);

    Graph kb = complete_bipartite(3, 3);
    CHECK(kb.m() == 9);
    CHECK(kb.min_degree() == 3);
    CHECK_FALSE(kb.has_edge(0, 1));
    CHECK(kb.has_edge(0, 3));

    Graph s = star_graph(4);
    CHECK(s.n == 5);
    CHECK(s.m() == 4);
    CHECK(s.max_degree() == 4);
    CHECK(s.min_degree() == 1);

    Graph pr = prism_graph(5);
    CHECK(pr.n == 10);
    CHECK(pr.m() == 15);
    CHECK(pr.min_degree() == 3);
    CHECK(pr.max_degree() == 3);
}

TEST_CASE("gnp is deterministic per seed and sane") {
    Graph a = gnp_graph(200, 0.05, 42);
    Graph b = gnp_graph(200, 0.05, 42);
    Graph c = gnp_graph(200, 0.05, 43);
    CHECK(a.edges == b.edges);
    CHECK(a.edges != c.edges);
    // expectation is 995; allow a wide deterministic window
    CHECK(a.m() > 700);
    CHECK(a.m() < 1300);
    CHECK(gnp_graph(100, 0.0, 1).m() == 0);
    CHECK(gnp_graph(50, 1.0, 1).m() == 50 * 49 / 2);
    CHECK_THROWS_AS(gnp_graph(10, -0.1, 1), input_error);
    CHECK_THROWS_AS(gnp_graph(10, 1.5, 1), input_error);
}

TEST_CASE("random regular graphs are simple and regular") {
    for (uint64_t seed : {1, 2, 3}) {
        Graph g = random_regular_graph(100, 3, seed);
        CHECK(g.n == 100);
        CHECK(g.m() == 150);
        CHECK(g.min_degree() == 3);
        CHECK(g.max_degree() == 3);
    }
    Graph a = random_regular_graph(60, 4, 9);
    Graph b = random_regular_graph(60, 4, 9);
    CHECK(a.edges == b.edges);
    CHECK_THROWS_AS(random_regular_graph(5, 5, 1), input_error);   // d >= n
    CHECK_THROWS_AS(random_regular_graph(5, 3, 1), input_error);   // odd n*d
    CHECK_THROWS_AS(random_regular_graph(5, -1, 1), input_error);
}

TEST_CASE("log helpers") {
    CHECK(log2_ceil(0) == 0);
    CHECK(log2_ceil(1) == 0);
    CHECK(log2_ceil(2) == 1);
    CHECK(log2_ceil(3) == 2);
    CHECK(log2_ceil(1024) == 10);
    CHECK(log2_ceil(1025) == 11);
    CHECK(log2_floor(1) == 0);
    CHECK(log2_floor(2) == 1);
    CHECK(log2_floor(3) == 1);
    CHECK(log2_floor(1024) == 10);
    CHECK(log_star(2.0) == 0);
    CHECK(log_star(4.0) == 1);
    CHECK(log_star(16.0) == 2);
    CHECK(log_star(65536.0) == 3);
}

TEST_CASE("stream rng draws are reproducible and bounded") {
    StreamRng a(123), b(123), c(124);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    bool differs = false;
    for (int i = 0; i < 10; ++i) differs |= a.next() != c.next();
    CHECK(differs);
    StreamRng d(7);
    for (int i = 0; i < 1000; ++i) CHECK(d.below(13) < 13);
    // chance(k, k) always true, chance(0, k) never
    StreamRng e(9);
    for (int i = 0; i < 50; ++i) CHECK(e.chance(5, 5));
    for (int i = 0; i < 50; ++i) CHECK_FALSE(e.chance(0, 7));
}

TEST_CASE("per-entity stream seeds differ") {
    std::set<uint64_t> seen;
    for (NodeId v = 0; v < 100; ++v) seen.insert(node_stream_seed(5, v));
    for (EdgeId e = 0; e < 100; ++e) seen.insert(edge_stream_seed(5, e));
    CHECK(seen.size() == 200);
    CHECK(node_stream_seed(5, 0) != node_stream_seed(6, 0));
}
