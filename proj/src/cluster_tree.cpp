#include "locavg/cluster_tree.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace locavg {

namespace {

int64_t ipow(int64_t b, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

int64_t ClusterTreeSkeleton::label_value(const SkeletonEdge& e) const {
    return e.coeff * ipow(beta, e.exp);
}

std::optional<SkeletonEdge> ClusterTreeSkeleton::edge_between(int from, int to) const {
    for (const SkeletonEdge& e : edges)
        if (e.from == from && e.to == to) return e;
    return std::nullopt;
}

std::vector<int> ClusterTreeSkeleton::children(int v) const {
    std::vector<int> out;
    for (const SkeletonNode& u : nodes)
        if (u.parent == v) out.push_back(u.id);
    return out;
}

int64_t ClusterTreeSkeleton::cluster_size(int v) const {
    // 2 beta^(k+1) (beta/2)^(k+1-depth)
    return 2 * ipow(beta, k + 1) * ipow(beta / 2, k + 1 - nodes[v].depth);
}

int64_t ClusterTreeSkeleton::total_nodes() const {
    int64_t t = 0;
    for (const SkeletonNode& v : nodes) t += cluster_size(v.id);
    return t;
}

ClusterTreeSkeleton build_skeleton(int k, int64_t beta) {
    if (k < 0) throw input_error("negative tree depth");
    if (beta < 4 || beta % 2 != 0) throw input_error("beta must be even and >= 4");
    if (4 * (k + 1) >= beta) throw input_error("beta too small for depth: need 2(k+1)/beta < 1/2");

    ClusterTreeSkeleton s;
    s.k = k;
    s.beta = beta;
    // depth-0 tree: root 0 and leaf 1 joined by (0,1,2b^0),(1,0,b^1), self (1,1,b^1)
    s.nodes.push_back({0, true, -1, -1, 0});
    s.nodes.push_back({1, false, 0, 1, 1});
    s.edges.push_back({0, 1, 2, 0});
    s.edges.push_back({1, 0, 1, 1});
    s.edges.push_back({1, 1, 1, 1});

    for (int step = 1; step <= k; ++step) {
        int old_count = static_cast<int>(s.nodes.size());
        for (int v = 0; v < old_count; ++v) {
            if (s.nodes[v].internal) {
                // one fresh leaf per internal node, hung with exponent `step`
                int id = static_cast<int>(s.nodes.size());
                s.nodes.push_back({id, false, v, step + 1, s.nodes[v].depth + 1});
                s.edges.push_back({v, id, 2, step});
                s.edges.push_back({id, v, 1, step + 1});
                s.edges.push_back({id, id, 1, step + 1});
            } else {
                // previous leaves become internal and receive a leaf for every
                // exponent except their own
                int skip = s.nodes[v].psi;
                for (int j = 0; j <= step; ++j) {
                    if (j == skip) continue;
                    int id = static_cast<int>(s.nodes.size());
                    s.nodes.push_back({id, false, v, j + 1, s.nodes[v].depth + 1});
                    s.edges.push_back({v, id, 2, j});
                    s.edges.push_back({id, v, 1, j + 1});
                    s.edges.push_back({id, id, 1, j + 1});
                }
                s.nodes[v].internal = true;
            }
        }
    }
    return s;
}

int ClusterGraph::arc_exp(NodeId from, EdgeId e) const {
    auto [a, b] = graph.edges[e];
    const EdgeLabel& l = edge_labels[e];
    return from == a ? l.exp_lo : l.exp_hi;
}

std::vector<std::vector<NodeId>> ClusterGraph::cluster_members() const {
    std::vector<std::vector<NodeId>> out(skeleton->nodes.size());
    for (NodeId v = 0; v < graph.n; ++v) out[cluster_of[v]].push_back(v);
    return out;
}

ClusterGraph build_base_graph(const ClusterTreeSkeleton& skel) {
    int64_t beta = skel.beta;
    int nc = static_cast<int>(skel.nodes.size());

    std::vector<int64_t> first(nc + 1, 0);
    for (int c = 0; c < nc; ++c) first[c + 1] = first[c] + skel.cluster_size(c);
    NodeId n = static_cast<NodeId>(first[nc]);

    std::vector<std::pair<NodeId, NodeId>> edges;

    // intra-cluster structure: beta^psi cliques plus a pairing of the two
    // clique halves; the root cluster stays independent
    for (int c = 1; c < nc; ++c) {
        int64_t size = skel.cluster_size(c);
        int64_t cl = ipow(beta, skel.nodes[c].psi);
        int64_t t = size / cl;
        if (t * cl != size || t % 2 != 0) throw contract_error("cluster does not split into clique pairs");
        NodeId base = static_cast<NodeId>(first[c]);
        for (int64_t j = 0; j < t; ++j) {
            NodeId cb = base + static_cast<NodeId>(j * cl);
            for (int64_t a = 0; a < cl; ++a)
                for (int64_t b = a + 1; b < cl; ++b)
                    edges.emplace_back(cb + static_cast<NodeId>(a), cb + static_cast<NodeId>(b));
        }
        for (int64_t j = 0; j < t / 2; ++j) {
            NodeId cb1 = base + static_cast<NodeId>(j * cl);
            NodeId cb2 = base + static_cast<NodeId>((t / 2 + j) * cl);
            for (int64_t a = 0; a < cl; ++a)
                edges.emplace_back(cb1 + static_cast<NodeId>(a), cb2 + static_cast<NodeId>(a));
        }
    }

    // parent/child blocks: parent groups of beta^(j+1) vs child groups of
    // 2 beta^j, matched by index, each pair completely bipartite
    for (const SkeletonNode& child : skel.nodes) {
        if (child.parent < 0) continue;
        int p = child.parent;
        auto down = skel.edge_between(p, child.id);
        if (!down || down->coeff != 2) throw contract_error("skeleton parent edge malformed");
        int j = down->exp;
        int64_t pg = ipow(beta, j + 1);
        int64_t cg = 2 * ipow(beta, j);
        int64_t groups = skel.cluster_size(p) / pg;
        if (groups * pg != skel.cluster_size(p) || groups * cg != skel.cluster_size(child.id))
            throw contract_error("cluster sizes do not align into groups");
        for (int64_t gi = 0; gi < groups; ++gi) {
            NodeId pb = static_cast<NodeId>(first[p] + gi * pg);
            NodeId cb = static_cast<NodeId>(first[child.id] + gi * cg);
            for (int64_t a = 0; a < pg; ++a)
                for (int64_t b = 0; b < cg; ++b)
                    edges.emplace_back(pb + static_cast<NodeId>(a), cb + static_cast<NodeId>(b));
        }
    }

    ClusterGraph g;
    g.graph = Graph::from_edges(n, std::move(edges));
    g.skeleton = std::make_shared<ClusterTreeSkeleton>(skel);
    g.cluster_of.resize(n);
    for (int c = 0; c < nc; ++c)
        for (int64_t v = first[c]; v < first[c + 1]; ++v) g.cluster_of[v] = c;

    // attach labels from the skeleton
    g.edge_labels.resize(g.graph.m());
    for (EdgeId e = 0; e < g.graph.m(); ++e) {
        auto [a, b] = g.graph.edges[e];
        int ca = g.cluster_of[a], cb2 = g.cluster_of[b];
        EdgeLabel l;
        l.self = ca == cb2;
        auto ab = skel.edge_between(ca, cb2);
        auto ba = skel.edge_between(cb2, ca);
        if (!ab || !ba) throw contract_error("edge without a skeleton counterpart");
        l.exp_lo = static_cast<int16_t>(ab->exp);
        l.exp_hi = static_cast<int16_t>(ba->exp);
        g.edge_labels[e] = l;
    }
    return g;
}

FamilyReport validate_family(const ClusterGraph& g) {
    FamilyReport rep;
    const ClusterTreeSkeleton& skel = *g.skeleton;
    int nc = static_cast<int>(skel.nodes.size());

    // directed lookup (from, to) -> expected count and exponent
    std::map<std::pair<int, int>, std::pair<int64_t, int>> expect;
    for (const SkeletonEdge& e : skel.edges)
        expect[{e.from, e.to}] = {skel.label_value(e), e.exp};

    std::vector<int64_t> count(nc);
    for (NodeId v = 0; v < g.graph.n; ++v) {
        int cv = g.cluster_of[v];
        std::fill(count.begin(), count.end(), 0);
        for (NodeId u : g.graph.neighbors(v)) ++count[g.cluster_of[u]];
        for (int c = 0; c < nc; ++c) {
            auto it = expect.find({cv, c});
            int64_t want = it == expect.end() ? 0 : it->second.first;
            if (count[c] == want) continue;
            if (it == expect.end())
                rep.violations.push_back({"extra-edge", v, cv, c, 0, count[c]});
            else
                rep.violations.push_back({"count", v, cv, c, want, count[c]});
        }
    }

    // label consistency with the skeleton
    for (EdgeId e = 0; e < g.graph.m(); ++e) {
        auto [a, b] = g.graph.edges[e];
        int ca = g.cluster_of[a], cb = g.cluster_of[b];
        auto ab = expect.find({ca, cb});
        auto ba = expect.find({cb, ca});
        if (ab == expect.end() || ba == expect.end()) continue;  // reported above
        const EdgeLabel& l = g.edge_labels[e];
        if (l.exp_lo != ab->second.second || l.exp_hi != ba->second.second || l.self != (ca == cb))
            rep.violations.push_back({"label", a, ca, cb, ab->second.second, l.exp_lo});
    }

    // outgoing degree profile: internal clusters expose 2 beta^i neighbors for
    // every i in 0..k, leaf clusters 2 beta^i for exactly one i in 0..k+1
    for (NodeId v = 0; v < g.graph.n; ++v) {
        int cv = g.cluster_of[v];
        std::map<int, int64_t> by_exp;
        for (EdgeId e : g.graph.incident(v)) ++by_exp[g.arc_exp(v, e)];
        if (skel.nodes[cv].internal) {
            bool ok = static_cast<int>(by_exp.size()) == skel.k + 1;
            for (int i = 0; ok && i <= skel.k; ++i) {
                auto it = by_exp.find(i);
                ok = it != by_exp.end() && it->second == 2 * ipow(skel.beta, i);
            }
            if (!ok)
                rep.violations.push_back({"degree-profile", v, cv, -1, skel.k + 1,
                                          static_cast<int64_t>(by_exp.size())});
        } else {
            bool ok = by_exp.size() == 1;
            if (ok) {
                auto [i, cnt] = *by_exp.begin();
                ok = i >= 0 && i <= skel.k + 1 && cnt == 2 * ipow(skel.beta, i);
            }
            if (!ok)
                rep.violations.push_back({"degree-profile", v, cv, -1, 1,
                                          static_cast<int64_t>(by_exp.size())});
        }
    }
    return rep;
}

ViewTree radius_view(const ClusterGraph& g, NodeId v, int k) {
    ViewTree t = radius_view(g.graph, v, k);
    t.labels.resize(t.view_edges.size());
    for (size_t i = 0; i < t.view_edges.size(); ++i) {
        auto [a, b] = t.view_edges[i];
        EdgeId e = g.graph.edge_id(t.vertices[a], t.vertices[b]);
        t.labels[i].exp_a = static_cast<int16_t>(g.arc_exp(t.vertices[a], e));
        t.labels[i].exp_b = static_cast<int16_t>(g.arc_exp(t.vertices[b], e));
        t.labels[i].self = g.edge_self(e);
    }
    return t;
}

}  // namespace locavg
