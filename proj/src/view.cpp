#include "locavg/view.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace locavg {

namespace {

// BFS ball of radius k; returns (vertices in BFS order, dist per vertex).
void ball(const Graph& g, NodeId v, int k, std::vector<NodeId>& verts, std::vector<int>& dist,
          std::unordered_map<NodeId, int>& index_of) {
    verts.clear();
    dist.clear();
    index_of.clear();
    verts.push_back(v);
    dist.push_back(0);
    index_of[v] = 0;
    size_t head = 0;
    while (head < verts.size()) {
        NodeId x = verts[head];
        int dx = dist[head];
        ++head;
        if (dx == k) continue;
        for (NodeId y : g.neighbors(x)) {
            if (index_of.count(y)) continue;
            index_of[y] = static_cast<int>(verts.size());
            verts.push_back(y);
            dist.push_back(dx + 1);
        }
    }
}

}  // namespace

ViewTree radius_view(const Graph& g, NodeId v, int k) {
    if (v < 0 || v >= g.n) throw input_error("view root out of range");
    if (k < 0) throw input_error("negative view radius");
    ViewTree t;
    t.root = v;
    t.radius = k;
    std::unordered_map<NodeId, int> index_of;
    ball(g, v, k, t.vertices, t.dist, index_of);
    for (int i = 0; i < static_cast<int>(t.vertices.size()); ++i) {
        NodeId x = t.vertices[i];
        for (NodeId y : g.neighbors(x)) {
            auto it = index_of.find(y);
            if (it == index_of.end()) continue;
            int j = it->second;
            if (j <= i) continue;  // each edge once, (i, j) with i < j
            if (t.dist[i] == k && t.dist[j] == k) continue;
            t.view_edges.emplace_back(i, j);
        }
    }
    std::sort(t.view_edges.begin(), t.view_edges.end());
    return t;
}

bool is_tree_like(const Graph& g, NodeId v, int k) {
    ViewTree t = radius_view(g, v, k);
    return t.is_tree();
}

std::optional<int> node_in_short_cycle(const Graph& g, NodeId v, int ell) {
    if (ell < 3) return std::nullopt;
    int best = ell + 1;
    // shortest cycle through v = min over incident edges {v,u} of
    // 1 + dist(v, u) in the graph without that edge
    std::vector<int> dist(g.n, -1);
    std::vector<NodeId> touched;
    for (size_t idx = 0; idx < g.neighbors(v).size(); ++idx) {
        NodeId target = g.neighbors(v)[idx];
        EdgeId banned = g.incident(v)[idx];
        int limit = best - 2;  // need dist(v, target) <= best - 2 to improve
        if (limit < 1) break;
        for (NodeId x : touched) dist[x] = -1;
        touched.clear();
        std::deque<NodeId> q{v};
        dist[v] = 0;
        touched.push_back(v);
        bool found = false;
        while (!q.empty() && !found) {
            NodeId x = q.front();
            q.pop_front();
            if (dist[x] >= limit) break;
            for (size_t i = 0; i < g.neighbors(x).size(); ++i) {
                NodeId y = g.neighbors(x)[i];
                if (g.incident(x)[i] == banned) continue;
                if (dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                touched.push_back(y);
                if (y == target) {
                    best = std::min(best, dist[y] + 1);
                    found = true;
                    break;
                }
                q.push_back(y);
            }
        }
    }
    if (best <= ell) return best;
    return std::nullopt;
}

double cycle_fraction(const Graph& g, int ell) {
    if (g.n == 0) return 0.0;
    int64_t c = 0;
    for (NodeId v = 0; v < g.n; ++v)
        if (node_in_short_cycle(g, v, ell)) ++c;
    return static_cast<double>(c) / static_cast<double>(g.n);
}

uint64_t canonical_view_hash(const ViewTree& view) {
    size_t nv = view.vertices.size();
    // adjacency within the view, with the label digest for each arc
    std::vector<std::vector<std::pair<int, uint64_t>>> adj(nv);
    bool labeled = !view.labels.empty();
    for (size_t e = 0; e < view.view_edges.size(); ++e) {
        auto [a, b] = view.view_edges[e];
        uint64_t lab_ab = 0x11, lab_ba = 0x11;
        if (labeled) {
            const ViewEdgeLabel& l = view.labels[e];
            lab_ab = splitmix64(0x300 + static_cast<uint64_t>(l.exp_a + 1) * 4 + (l.self ? 1 : 0));
            lab_ba = splitmix64(0x300 + static_cast<uint64_t>(l.exp_b + 1) * 4 + (l.self ? 1 : 0));
        }
        adj[a].emplace_back(b, lab_ab);
        adj[b].emplace_back(a, lab_ba);
    }
    // iterated refinement: depth+1 rounds make the digest exact on tree views
    std::vector<uint64_t> col(nv), nxt(nv);
    for (size_t i = 0; i < nv; ++i) col[i] = splitmix64(0xabcdef + static_cast<uint64_t>(view.dist[i]));
    std::vector<uint64_t> bag;
    for (int round = 0; round <= view.radius; ++round) {
        for (size_t i = 0; i < nv; ++i) {
            bag.clear();
            for (auto [j, lab] : adj[i]) bag.push_back(splitmix64(col[j] ^ lab));
            std::sort(bag.begin(), bag.end());
            uint64_t h = splitmix64(col[i] ^ 0x9e3779b97f4a7c15ULL);
            for (uint64_t b : bag) h = splitmix64(h ^ b);
            nxt[i] = h;
        }
        col.swap(nxt);
    }
    uint64_t root = splitmix64(col[0] ^ 0x517cc1b727220a95ULL);
    bag.assign(col.begin(), col.end());
    std::sort(bag.begin(), bag.end());
    for (uint64_t b : bag) root = splitmix64(root ^ b);
    return root;
}

}  // namespace locavg
