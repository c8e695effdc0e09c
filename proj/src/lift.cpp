#include <numeric>

#include "locavg/cluster_tree.hpp"

namespace locavg {

namespace {

// lifted node id of copy c of base node v
inline NodeId lifted(NodeId v, int64_t q, int64_t c) {
    return static_cast<NodeId>(static_cast<int64_t>(v) * q + c);
}

std::vector<std::pair<NodeId, NodeId>> lift_edges(const Graph& base, int64_t q, uint64_t seed) {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(static_cast<size_t>(base.m()) * q);
    std::vector<int64_t> perm(q);
    for (EdgeId e = 0; e < base.m(); ++e) {
        auto [u, v] = base.edges[e];
        // a fresh uniform permutation per base edge, from an edge-local stream
        Rng rng(edge_stream_seed(seed, e));
        std::iota(perm.begin(), perm.end(), 0);
        for (int64_t i = q - 1; i > 0; --i) {
            int64_t j = static_cast<int64_t>(rng.below(static_cast<uint64_t>(i + 1)));
            std::swap(perm[i], perm[j]);
        }
        for (int64_t c = 0; c < q; ++c) out.emplace_back(lifted(u, q, c), lifted(v, q, perm[c]));
    }
    return out;
}

}  // namespace

Graph lift_graph(const Graph& base, int64_t q, uint64_t seed) {
    if (q < 1) throw input_error("lift order must be >= 1");
    if (base.n > 0 && static_cast<int64_t>(base.n) * q > (1LL << 30))
        throw input_error("lift too large");
    return Graph::from_edges(static_cast<NodeId>(base.n * q), lift_edges(base, q, seed));
}

ClusterGraph random_lift(const ClusterGraph& base, int64_t q, uint64_t seed) {
    ClusterGraph g;
    g.graph = lift_graph(base.graph, q, seed);
    g.skeleton = base.skeleton;
    g.lift_order = base.lift_order * q;
    g.cluster_of.resize(g.graph.n);
    for (NodeId v = 0; v < base.graph.n; ++v)
        for (int64_t c = 0; c < q; ++c) g.cluster_of[lifted(v, q, c)] = base.cluster_of[v];

    g.edge_labels.resize(g.graph.m());
    for (EdgeId e = 0; e < g.graph.m(); ++e) {
        auto [a, b] = g.graph.edges[e];
        NodeId ba = static_cast<NodeId>(a / q), bb = static_cast<NodeId>(b / q);
        EdgeId be = base.graph.edge_id(ba, bb);
        if (be < 0) throw contract_error("lift produced an edge outside a base fiber pair");
        EdgeLabel l = base.edge_labels[be];
        // base labels are stored relative to the base endpoint order; flip if
        // the lifted endpoints sort the other way
        if ((ba < bb) != (a < b)) std::swap(l.exp_lo, l.exp_hi);
        g.edge_labels[e] = l;
    }
    return g;
}

}  // namespace locavg
