#include "locavg/graph.hpp"

#include <algorithm>

namespace locavg {

Graph Graph::from_edges(NodeId n, std::vector<std::pair<NodeId, NodeId>> edge_list) {
    if (n < 0) throw input_error("negative node count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loops not supported");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw input_error("duplicate edge");

    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.off.assign(n + 1, 0);
    for (auto [u, v] : g.edges) {
        ++g.off[u + 1];
        ++g.off[v + 1];
    }
    for (NodeId v = 0; v < n; ++v) g.off[v + 1] += g.off[v];
    g.adj.resize(g.edges.size() * 2);
    g.adj_edge.resize(g.edges.size() * 2);
    std::vector<int64_t> cursor(g.off.begin(), g.off.end() - 1);
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        g.adj[cursor[u]] = v;
        g.adj_edge[cursor[u]++] = e;
        g.adj[cursor[v]] = u;
        g.adj_edge[cursor[v]++] = e;
    }
    // edges were sorted by (u, v), so u-lists are already ascending; v-lists
    // need a local sort to restore neighbor order.
    for (NodeId v = 0; v < n; ++v) {
        std::vector<std::pair<NodeId, EdgeId>> row;
        row.reserve(g.degree(v));
        for (int64_t i = g.off[v]; i < g.off[v + 1]; ++i) row.emplace_back(g.adj[i], g.adj_edge[i]);
        std::sort(row.begin(), row.end());
        for (int64_t i = g.off[v]; i < g.off[v + 1]; ++i) {
            g.adj[i] = row[i - g.off[v]].first;
            g.adj_edge[i] = row[i - g.off[v]].second;
        }
    }
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    return edge_id(u, v) >= 0;
}

EdgeId Graph::edge_id(NodeId u, NodeId v) const {
    if (u == v) return -1;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return adj_edge[off[u] + (it - nb.begin())];
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = degree(0);
    for (NodeId v = 1; v < n; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (NodeId v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
}

}  // namespace locavg
