#pragma once

#include <span>
#include <utility>
#include <vector>

#include "locavg/common.hpp"

namespace locavg {

// Simple undirected graph in CSR form. Edges carry stable ids assigned in
// sorted (u, v) order with u < v; adjacency lists are sorted by neighbor id.
struct Graph {
    NodeId n = 0;
    std::vector<int64_t> off;                        // size n + 1
    std::vector<NodeId> adj;                         // size 2m
    std::vector<EdgeId> adj_edge;                    // edge id parallel to adj
    std::vector<std::pair<NodeId, NodeId>> edges;    // by edge id, u < v

    static Graph from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edge_list);

    EdgeId m() const { return static_cast<EdgeId>(edges.size()); }

    int degree(NodeId v) const { return static_cast<int>(off[v + 1] - off[v]); }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj.data() + off[v], adj.data() + off[v + 1]};
    }

    std::span<const EdgeId> incident(NodeId v) const {
        return {adj_edge.data() + off[v], adj_edge.data() + off[v + 1]};
    }

    bool has_edge(NodeId u, NodeId v) const;

    // -1 when absent
    EdgeId edge_id(NodeId u, NodeId v) const;

    NodeId other_end(EdgeId e, NodeId v) const {
        auto [a, b] = edges[e];
        return a == v ? b : a;
    }

    int min_degree() const;
    int max_degree() const;
};

}  // namespace locavg
