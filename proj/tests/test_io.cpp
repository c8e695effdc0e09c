#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <sstream>

#include "locavg/generators.hpp"
#include "locavg/io.hpp"

using namespace locavg;

namespace {

LoadedGraph roundtrip(const Graph& g) {
    std::stringstream ss;
    write_graph(ss, g);
    return read_graph(ss);
}

LoadedGraph roundtrip(const ClusterGraph& g) {
    std::stringstream ss;
    write_graph(ss, g);
    return read_graph(ss);
}

LoadedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace

TEST_CASE("plain graphs survive a write/read cycle") {
    Graph g = gnp_graph(30, 0.12, 5);
    LoadedGraph lg = roundtrip(g);
    CHECK_FALSE(lg.cluster.has_value());
    CHECK(lg.graph.n == g.n);
    CHECK(lg.graph.edges == g.edges);
    CHECK(lg.plain().m() == g.m());
}

TEST_CASE("clustered graphs keep labels, assignment, skeleton and order") {
    ClusterGraph base = build_base_graph(build_skeleton(0, 6));
    LoadedGraph lg = roundtrip(base);
    REQUIRE(lg.cluster.has_value());
    const ClusterGraph& c = *lg.cluster;
    CHECK(c.graph.edges == base.graph.edges);
    CHECK(c.cluster_of == base.cluster_of);
    CHECK(c.lift_order == 1);
    REQUIRE(c.edge_labels.size() == base.edge_labels.size());
    for (EdgeId e = 0; e < c.graph.m(); ++e) {
        CHECK(c.edge_labels[e].exp_lo == base.edge_labels[e].exp_lo);
        CHECK(c.edge_labels[e].exp_hi == base.edge_labels[e].exp_hi);
        CHECK(c.edge_labels[e].self == base.edge_labels[e].self);
    }
    const ClusterTreeSkeleton& s = *c.skeleton;
    CHECK(s.k == base.skeleton->k);
    CHECK(s.beta == base.skeleton->beta);
    REQUIRE(s.nodes.size() == base.skeleton->nodes.size());
    for (size_t i = 0; i < s.nodes.size(); ++i) {
        CHECK(s.nodes[i].id == base.skeleton->nodes[i].id);
        CHECK(s.nodes[i].internal == base.skeleton->nodes[i].internal);
        CHECK(s.nodes[i].parent == base.skeleton->nodes[i].parent);
        CHECK(s.nodes[i].psi == base.skeleton->nodes[i].psi);
        CHECK(s.nodes[i].depth == base.skeleton->nodes[i].depth);
    }
    CHECK(s.edges.size() == base.skeleton->edges.size());
    CHECK(validate_family(c).ok());
}

TEST_CASE("lifted graphs keep their order and still validate") {
    ClusterGraph base = build_base_graph(build_skeleton(0, 6));
    ClusterGraph lifted = random_lift(base, 3, 9);
    LoadedGraph lg = roundtrip(lifted);
    REQUIRE(lg.cluster.has_value());
    CHECK(lg.cluster->lift_order == 3);
    CHECK(lg.cluster->graph.n == lifted.graph.n);
    CHECK(lg.cluster->graph.edges == lifted.graph.edges);
    CHECK(validate_family(*lg.cluster).ok());
}

TEST_CASE("file save and load agree with stream writes") {
    std::string path = "/tmp/io_test_graph.txt";
    Graph g = cycle_graph(9);
    save_graph_file(path, g);
    LoadedGraph lg = load_graph_file(path);
    CHECK(lg.graph.edges == g.edges);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_graph_file("/tmp/no_such_graph_file.txt"), input_error);
}

TEST_CASE("edge lines may order endpoints either way") {
    LoadedGraph plain = parse("graph v1\nnodes 3\nedges 2\ne 2 0\ne 1 2\n");
    CHECK(plain.graph.edges == std::vector<std::pair<NodeId, NodeId>>{{0, 2}, {1, 2}});

    // labeled variant: lo/hi follow the stored (sorted) orientation
    std::string text =
        "graph v1\nnodes 2\nedges 1\n"
        "e 1 0 4 7 0\n"
        "cluster 0 0\ncluster 1 1\n"
        "skeleton begin\nk 0\nbeta 6\n"
        "snode 0 1 -1 -1 0\nsnode 1 0 0 0 1\n"
        "sedge 0 1 2 0\nsedge 1 0 1 0\n"
        "skeleton end\nlift 1\n";
    LoadedGraph lg = parse(text);
    REQUIRE(lg.cluster.has_value());
    CHECK(lg.cluster->graph.edges[0] == std::pair<NodeId, NodeId>{0, 1});
    // "4 7" was written for the (1, 0) direction, so sorted storage flips it
    CHECK(lg.cluster->edge_labels[0].exp_lo == 7);
    CHECK(lg.cluster->edge_labels[0].exp_hi == 4);
}

TEST_CASE("blank lines are tolerated") {
    LoadedGraph lg = parse("graph v1\n\nnodes 2\n\nedges 1\n\ne 0 1\n\n");
    CHECK(lg.graph.n == 2);
    CHECK(lg.graph.m() == 1);
}

TEST_CASE("malformed graph files are rejected") {
    CHECK_THROWS_AS(parse(""), input_error);
    CHECK_THROWS_AS(parse("graph v2\nnodes 1\nedges 0\n"), input_error);
    CHECK_THROWS_AS(parse("graph v1\nedges 0\n"), input_error);                    // no nodes
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\n"), input_error);                    // no edges
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 2\ne 0 1\n"), input_error);    // count off
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\nえ 0 1\n"), input_error);   // junk directive
    CHECK_THROWS_AS(parse("graph v1\nnodes -2\nedges 0\n"), input_error);
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\ne 0\n"), input_error);      // lone endpoint
    CHECK_THROWS_AS(parse("graph v1\nnodes 3\nedges 2\ne 0 1\ne 1 2 0 0 0\n"),
                    input_error);                                                  // mixed labels
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\ne 0 1 0 0 2\n"), input_error);  // self flag
    CHECK_THROWS_AS(parse("graph v1\nnodes 1\nedges 0\nlift 0\n"), input_error);
}

TEST_CASE("cluster data must be complete and consistent") {
    std::string skel =
        "skeleton begin\nk 0\nbeta 6\n"
        "snode 0 1 -1 -1 0\nsnode 1 0 0 0 1\n"
        "sedge 0 1 2 0\nsedge 1 0 1 0\n"
        "skeleton end\n";
    std::string edge = "e 0 1 0 0 0\n";
    // missing one cluster line
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge + "cluster 0 0\n" + skel),
                    input_error);
    // no skeleton block
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge + "cluster 0 0\ncluster 1 1\n"),
                    input_error);
    // duplicate cluster line
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge +
                          "cluster 0 0\ncluster 0 1\ncluster 1 1\n" + skel),
                    input_error);
    // cluster node out of range
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge +
                          "cluster 0 0\ncluster 5 1\n" + skel),
                    input_error);
    // cluster id outside the skeleton
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge +
                          "cluster 0 0\ncluster 1 9\n" + skel),
                    input_error);
    // skeleton never closed
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge +
                          "cluster 0 0\ncluster 1 1\nskeleton begin\nk 0\nbeta 6\n"),
                    input_error);
    // skeleton missing beta
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\n" + edge +
                          "cluster 0 0\ncluster 1 1\nskeleton begin\nk 0\nskeleton end\n"),
                    input_error);
    // cluster lines next to unlabeled edges
    CHECK_THROWS_AS(parse("graph v1\nnodes 2\nedges 1\ne 0 1\ncluster 0 0\ncluster 1 1\n" + skel),
                    input_error);
    // the valid version of the same text parses
    LoadedGraph ok = parse("graph v1\nnodes 2\nedges 1\n" + edge +
                           "cluster 0 0\ncluster 1 1\n" + skel);
    CHECK(ok.cluster.has_value());
}

TEST_CASE("csv splitting is plain and newline tolerant") {
    std::istringstream in("a,b,c\r\n\n1,2,3\nx,,\n");
    auto rows = read_csv(in);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"a", "b", "c"});
    CHECK(rows[1] == std::vector<std::string>{"1", "2", "3"});
    CHECK(rows[2] == std::vector<std::string>{"x", "", ""});
}
