#include "locavg/iso.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "locavg/common.hpp"

namespace locavg {

namespace {

// Unvisited neighbors of x grouped by the label exponent of the arc x -> u.
// Within a bucket, same-cluster neighbors come first, then ascending id.
std::map<int, std::vector<NodeId>> exponent_buckets(const ClusterGraph& g, NodeId x,
                                                    const std::vector<char>& visited) {
    std::map<int, std::vector<std::pair<int, NodeId>>> raw;
    auto nbrs = g.graph.neighbors(x);
    auto inc = g.graph.incident(x);
    for (size_t p = 0; p < nbrs.size(); ++p) {
        NodeId u = nbrs[p];
        if (visited[u]) continue;
        EdgeId e = inc[p];
        raw[g.arc_exp(x, e)].push_back({g.edge_self(e) ? 0 : 1, u});
    }
    std::map<int, std::vector<NodeId>> buckets;
    for (auto& [exp, v] : raw) {
        std::sort(v.begin(), v.end());
        auto& out = buckets[exp];
        out.reserve(v.size());
        for (auto& [self_rank, u] : v) out.push_back(u);
    }
    return buckets;
}

}  // namespace

IsoMapping find_isomorphism(const ClusterGraph& g, int k, NodeId v0, NodeId v1) {
    if (v0 < 0 || v0 >= g.graph.n || v1 < 0 || v1 >= g.graph.n)
        throw input_error("view root out of range");
    if (g.cluster_of[v0] != 0) throw input_error("first node must lie in the root cluster");
    if (g.cluster_of[v1] != 1) throw input_error("second node must lie in cluster 1");
    if (!is_tree_like(g.graph, v0, k) || !is_tree_like(g.graph, v1, k))
        throw input_error("both radius-k views must be tree-like");

    IsoMapping m;
    m.v0 = v0;
    m.v1 = v1;
    m.k = k;
    m.phi[v0] = v1;

    std::vector<char> vis0(g.graph.n, 0), vis1(g.graph.n, 0);
    vis0[v0] = 1;
    vis1[v1] = 1;

    struct Pair {
        NodeId x, y;
        int depth;
    };
    std::deque<Pair> queue{{v0, v1, 0}};
    while (!queue.empty()) {
        auto [x, y, d] = queue.front();
        queue.pop_front();
        if (d == k) continue;

        auto bx = exponent_buckets(g, x, vis0);
        auto by = exponent_buckets(g, y, vis1);
        {
            auto ix = bx.begin();
            auto iy = by.begin();
            for (; ix != bx.end() && iy != by.end(); ++ix, ++iy)
                if (ix->first != iy->first)
                    throw contract_error("views expose different arc exponents");
            if (ix != bx.end() || iy != by.end())
                throw contract_error("views expose different arc exponents");
        }

        NodeId surplus_x = -1, surplus_y = -1;
        auto match = [&](NodeId a, NodeId b) {
            m.phi[a] = b;
            vis0[a] = 1;
            vis1[b] = 1;
            queue.push_back({a, b, d + 1});
        };
        for (auto& [exp, vx] : bx) {
            auto& vy = by[exp];
            size_t common = std::min(vx.size(), vy.size());
            for (size_t i = 0; i < common; ++i) match(vx[i], vy[i]);
            if (vx.size() == vy.size()) continue;
            if (vx.size() == vy.size() + 1) {
                if (surplus_x >= 0) throw contract_error("more than one surplus bucket per step");
                surplus_x = vx.back();
            } else if (vy.size() == vx.size() + 1) {
                if (surplus_y >= 0) throw contract_error("more than one surplus bucket per step");
                surplus_y = vy.back();
            } else {
                throw contract_error("bucket sizes differ by more than one");
            }
        }
        if ((surplus_x >= 0) != (surplus_y >= 0))
            throw contract_error("surplus node without an opposite partner");
        if (surplus_x >= 0) match(surplus_x, surplus_y);
    }
    return m;
}

bool verify_isomorphism(const ClusterGraph& g, int k, const IsoMapping& m) {
    if (m.v0 < 0 || m.v1 < 0 || m.v0 >= g.graph.n || m.v1 >= g.graph.n) return false;
    ViewTree t0 = locavg::radius_view(g.graph, m.v0, k);
    ViewTree t1 = locavg::radius_view(g.graph, m.v1, k);
    if (m.phi.size() != t0.vertices.size()) return false;
    if (t0.vertices.size() != t1.vertices.size()) return false;
    if (t0.view_edges.size() != t1.view_edges.size()) return false;
    auto it = m.phi.find(m.v0);
    if (it == m.phi.end() || it->second != m.v1) return false;

    std::unordered_map<NodeId, NodeId> inv;
    for (auto [a, b] : m.phi)
        if (!inv.emplace(b, a).second) return false;
    for (NodeId v : t0.vertices)
        if (!m.phi.count(v)) return false;
    for (NodeId v : t1.vertices)
        if (!inv.count(v)) return false;

    std::set<std::pair<NodeId, NodeId>> e1;
    for (auto [i, j] : t1.view_edges) {
        NodeId a = t1.vertices[i], b = t1.vertices[j];
        e1.insert({std::min(a, b), std::max(a, b)});
    }
    for (auto [i, j] : t0.view_edges) {
        NodeId a = m.phi.at(t0.vertices[i]), b = m.phi.at(t0.vertices[j]);
        if (!e1.count({std::min(a, b), std::max(a, b)})) return false;
    }
    // sizes match and the forward map is injective, so the inverse direction
    // is covered as well
    return true;
}

std::optional<std::pair<NodeId, NodeId>> find_treelike_pair(const ClusterGraph& g, int k,
                                                            uint64_t seed) {
    auto members = g.cluster_members();
    if (members.size() < 2 || members[0].empty() || members[1].empty()) return std::nullopt;

    Rng rng(seed ^ 0x7265657061697273ULL);
    auto shuffle = [&](std::vector<NodeId>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
    };
    shuffle(members[0]);
    shuffle(members[1]);

    NodeId a = -1, b = -1;
    for (NodeId v : members[0])
        if (is_tree_like(g.graph, v, k)) { a = v; break; }
    if (a < 0) return std::nullopt;
    for (NodeId v : members[1])
        if (is_tree_like(g.graph, v, k)) { b = v; break; }
    if (b < 0) return std::nullopt;
    return std::make_pair(a, b);
}

}  // namespace locavg
