#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "locavg/algorithms.hpp"
#include "scheduled.hpp"
#include "sinkless_detail.hpp"

namespace locavg {
namespace {

constexpr long long kTimeHorizon = 1LL << 30;
constexpr int kBfsNodeBudget = 50000;

// One contracted edge. The original endpoints ride along so commits can name
// real nodes: x lives in super a, y in super b (a == b for a self-loop).
struct HEdge {
    EdgeId orig;
    NodeId x, y;
    int a, b;
};

// An uncommitted pick edge whose partner got satisfied; the owner may orient
// it out of `inner` at any later time.
struct ReserveRec {
    EdgeId orig;
    NodeId inner, outer;
};

struct Level {
    long long t_base = 0;   // absolute round of the level start
    long long m_unit = 1;   // rounds per level-local unit
    int nsupers = 0;
    std::vector<HEdge> edges;
    std::vector<std::vector<int>> members;                  // previous-level super ids, sorted
    std::vector<std::vector<std::array<int, 3>>> tree;      // {child pos, parent pos, edge idx one level down}
    std::vector<std::vector<ReserveRec>> reserves;
    std::vector<char> satisfied;
    std::vector<long long> sat_unit;                        // level units, -1 while unsatisfied
};

// A candidate cycle in canonical traversal form; eidx[i] connects sseq[i] to
// sseq[(i+1) % k].
struct CycleCand {
    std::vector<EdgeId> key;   // original edge ids in traversal order
    std::vector<int> eidx;
    std::vector<int> sseq;
};

// Deterministic sinkless orientation. Each level: orient every cycle of
// length <= cap, let leftover supers pick three edges each (a pick nobody
// contests is a guaranteed exit), run r cession rounds where a super whose
// pick partner already exited takes the contested edge, then cluster the
// rest around greedily chosen centers and recurse on the contracted
// multigraph with round costs scaled by 4r+4. A per-component finisher
// resolves whatever survives the level budget.
class SinklessOrientation : public detail::ScheduledAlgorithm {
  public:
    SinklessOrientation(int r, int cap)
        : ScheduledAlgorithm("sinkless_r" + std::to_string(r), ProblemKind::orientation),
          r_(r), cap_(cap) {
        if (r < 3) throw input_error("sinkless orientation needs r >= 3");
        if (cap < 1) throw input_error("cycle length cap must be positive");
    }

  protected:
    void build_schedule(const Graph& g, uint64_t) override;

  private:
    void commit_must(EdgeId e, long long t, NodeId head);
    void satisfy(int lvl, int s, long long unit, long long t, NodeId anchor);
    void unfold(int lvl, int s, long long t, NodeId anchor);
    int run_level(int lvl);       // returns next level index, -1 when everything resolved
    void finisher(int lvl);

    int r_, cap_;
    const Graph* g_ = nullptr;
    std::vector<Level> levels_;
    std::vector<std::vector<int>> node_super_;     // per level: node -> super id, -1 once resolved
    std::vector<std::vector<int>> cluster_of_;     // per level: super -> next-level cluster, -1 if satisfied
    std::vector<std::vector<int>> pos_of_;         // per level: super -> member position in its cluster
    std::vector<std::vector<std::pair<EdgeId, NodeId>>> node_reserves_;  // (edge, outer) per inner node
    std::vector<char> edge_done_;
    std::vector<NodeId> head_;
};

void SinklessOrientation::commit_must(EdgeId e, long long t, NodeId head) {
    if (edge_done_[e]) throw contract_error("orientation committed an edge twice");
    if (t < 0 || t >= kTimeHorizon) throw contract_error("orientation schedule exceeds the supported horizon");
    edge_done_[e] = 1;
    head_[e] = head;
    commit_edge_at(e, static_cast<int>(t), head);
}

void SinklessOrientation::satisfy(int lvl, int s, long long unit, long long t, NodeId anchor) {
    Level& L = levels_[lvl];
    if (L.satisfied[s]) return;
    L.satisfied[s] = 1;
    L.sat_unit[s] = unit;
    unfold(lvl, s, t, anchor);
}

// The super has an outgoing arc from original node `anchor`, committed at t.
// Route every member toward the anchor: each member orients its tree edge
// out of itself one unit later per hop, which hands it an anchor of its own.
void SinklessOrientation::unfold(int lvl, int s, long long t, NodeId anchor) {
    if (lvl == 0) {
        for (auto& [e, outer] : node_reserves_[anchor])
            if (!edge_done_[e]) commit_must(e, t, outer);
        return;
    }
    const Level& prev = levels_[lvl - 1];
    const Level& cur = levels_[lvl];
    const std::vector<int>& mem = cur.members[s];
    const int k = static_cast<int>(mem.size());

    int asuper = node_super_[lvl - 1][anchor];
    if (asuper < 0 || cluster_of_[lvl - 1][asuper] != s)
        throw contract_error("unfold anchored outside its super");
    int apos = pos_of_[lvl - 1][asuper];

    std::vector<std::vector<std::array<int, 2>>> adj(k);
    for (const auto& tr : cur.tree[s]) {
        adj[tr[0]].push_back({tr[1], tr[2]});
        adj[tr[1]].push_back({tr[0], tr[2]});
    }
    std::vector<long long> depth(k, -1);
    std::vector<int> par_edge(k, -1), order;
    depth[apos] = 0;
    order.push_back(apos);
    for (size_t h = 0; h < order.size(); ++h) {
        int u = order[h];
        for (auto& [w, ei] : adj[u]) {
            if (depth[w] >= 0) continue;
            depth[w] = depth[u] + 1;
            par_edge[w] = ei;
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != k) throw contract_error("cluster tree does not span its members");

    for (int pos : order) {
        if (pos == apos) {
            unfold(lvl - 1, asuper, t, anchor);
            continue;
        }
        const HEdge& rec = prev.edges[par_edge[pos]];
        int bsup = mem[pos];
        NodeId inner = rec.a == bsup ? rec.x : rec.y;
        NodeId outer = rec.a == bsup ? rec.y : rec.x;
        long long tc = t + depth[pos] * prev.m_unit;
        commit_must(rec.orig, tc, outer);
        unfold(lvl - 1, bsup, tc, inner);
    }
}

// Rotate/reflect a cycle so it starts at its smallest super and walks toward
// the smaller next super (smaller first edge id for two-cycles).
void canonicalize(CycleCand& c, const std::vector<HEdge>& E) {
    const int k = static_cast<int>(c.eidx.size());
    if (k == 1) {
        c.key = {E[c.eidx[0]].orig};
        return;
    }
    if (k == 2) {
        if (c.sseq[0] > c.sseq[1]) std::swap(c.sseq[0], c.sseq[1]);
        if (E[c.eidx[0]].orig > E[c.eidx[1]].orig) std::swap(c.eidx[0], c.eidx[1]);
    } else {
        int p = static_cast<int>(std::min_element(c.sseq.begin(), c.sseq.end()) - c.sseq.begin());
        bool forward = c.sseq[(p + 1) % k] < c.sseq[(p - 1 + k) % k];
        std::vector<int> ns(k), ne(k);
        for (int i = 0; i < k; ++i) {
            if (forward) {
                ns[i] = c.sseq[(p + i) % k];
                ne[i] = c.eidx[(p + i) % k];
            } else {
                ns[i] = c.sseq[(p - i + k) % k];
                ne[i] = c.eidx[(p - 1 - i + 2 * k) % k];
            }
        }
        c.sseq = std::move(ns);
        c.eidx = std::move(ne);
    }
    c.key.resize(k);
    for (int i = 0; i < k; ++i) c.key[i] = E[c.eidx[i]].orig;
}

int SinklessOrientation::run_level(int lvl) {
    Level& L = levels_[lvl];
    const std::vector<HEdge>& E = L.edges;
    const long long M = L.m_unit, T = L.t_base;
    const int ns = L.nsupers;

    IterationStats is;
    is.iteration = lvl;
    is.nodes_before = ns;
    is.edges_before = static_cast<int64_t>(E.size());

    std::vector<std::vector<int>> inc(ns);
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        inc[E[i].a].push_back(i);
        if (E[i].b != E[i].a) inc[E[i].b].push_back(i);
    }

    // phase 0: a super holding a reserve exits through it immediately
    for (int s = 0; s < ns; ++s) {
        if (L.reserves[s].empty()) continue;
        std::sort(L.reserves[s].begin(), L.reserves[s].end(),
                  [](const ReserveRec& a, const ReserveRec& b) { return a.orig < b.orig; });
        for (const ReserveRec& rr : L.reserves[s]) {
            if (edge_done_[rr.orig]) continue;
            commit_must(rr.orig, T, rr.outer);
            satisfy(lvl, s, 0, T, rr.inner);
            break;
        }
    }

    // phase 1: short cycles. Each edge contributes its minimum cycle of
    // length <= cap; candidates are taken greedily by (length, edge ids) and
    // oriented cyclically, which hands every super on one an out-arc.
    std::map<std::pair<int, int>, std::vector<int>> pair_edges;   // non-loop, by super pair
    std::vector<std::vector<int>> nbr(ns);                        // unique neighbor supers, sorted
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        if (E[i].a == E[i].b) continue;
        int a = std::min(E[i].a, E[i].b), b = std::max(E[i].a, E[i].b);
        pair_edges[{a, b}].push_back(i);
        nbr[a].push_back(b);
        nbr[b].push_back(a);
    }
    for (auto& [k, v] : pair_edges)
        std::sort(v.begin(), v.end(), [&](int i, int j) { return E[i].orig < E[j].orig; });
    for (auto& v : nbr) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    auto min_pair_edge = [&](int a, int b) {
        return pair_edges[{std::min(a, b), std::max(a, b)}][0];
    };

    std::vector<CycleCand> cands;
    std::vector<int> bfs_dist(ns, -1), bfs_par(ns, -1);
    std::vector<int> bfs_touched;
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        const HEdge& e = E[i];
        CycleCand c;
        if (e.a == e.b) {
            c.eidx = {i};
            c.sseq = {e.a};
        } else if (pair_edges[{std::min(e.a, e.b), std::max(e.a, e.b)}].size() > 1 && cap_ >= 2) {
            const auto& pe = pair_edges[{std::min(e.a, e.b), std::max(e.a, e.b)}];
            int f = pe[0] == i ? pe[1] : pe[0];
            c.eidx = {i, f};
            c.sseq = {e.a, e.b};
        } else if (cap_ >= 3) {
            int tri = -1;
            const auto& na = nbr[e.a];
            const auto& nb2 = nbr[e.b];
            for (size_t ia = 0, ib = 0; ia < na.size() && ib < nb2.size();) {
                if (na[ia] < nb2[ib]) ++ia;
                else if (na[ia] > nb2[ib]) ++ib;
                else {
                    if (na[ia] != e.a && na[ia] != e.b) { tri = na[ia]; break; }
                    ++ia; ++ib;
                }
            }
            if (tri >= 0) {
                c.eidx = {i, min_pair_edge(e.b, tri), min_pair_edge(tri, e.a)};
                c.sseq = {e.a, e.b, tri};
            }
        }
        if (c.eidx.empty() && cap_ >= 4) {
            // BFS from a toward b avoiding edge i itself
            bfs_touched.clear();
            bfs_dist[e.a] = 0;
            bfs_touched.push_back(e.a);
            int found = -1;
            for (size_t h = 0; h < bfs_touched.size() && found < 0; ++h) {
                int u = bfs_touched[h];
                if (bfs_dist[u] >= cap_ - 1) break;
                for (int ei : inc[u]) {
                    if (ei == i) continue;
                    const HEdge& f = E[ei];
                    if (f.a == f.b) continue;
                    int w = f.a == u ? f.b : f.a;
                    if (bfs_dist[w] >= 0) continue;
                    bfs_dist[w] = bfs_dist[u] + 1;
                    bfs_par[w] = ei;
                    bfs_touched.push_back(w);
                    if (w == e.b) { found = w; break; }
                    if (static_cast<int>(bfs_touched.size()) > kBfsNodeBudget) break;
                }
                if (static_cast<int>(bfs_touched.size()) > kBfsNodeBudget) break;
            }
            if (found >= 0) {
                std::vector<int> path_e, path_s;
                for (int u = e.b; u != e.a;) {
                    path_e.push_back(bfs_par[u]);
                    path_s.push_back(u);
                    const HEdge& f = E[bfs_par[u]];
                    u = f.a == u ? f.b : f.a;
                }
                c.sseq = {e.a};
                for (size_t j = path_s.size(); j-- > 0;) {
                    c.eidx.push_back(path_e[j]);
                    c.sseq.push_back(path_s[j]);
                }
                c.eidx.push_back(i);
            }
            for (int u : bfs_touched) { bfs_dist[u] = -1; bfs_par[u] = -1; }
        }
        if (!c.eidx.empty()) {
            canonicalize(c, E);
            cands.push_back(std::move(c));
        }
    }
    std::sort(cands.begin(), cands.end(), [](const CycleCand& a, const CycleCand& b) {
        if (a.key.size() != b.key.size()) return a.key.size() < b.key.size();
        return a.key < b.key;
    });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const CycleCand& a, const CycleCand& b) { return a.key == b.key; }),
                cands.end());

    std::vector<char> cyc_used(E.size(), 0);
    for (const CycleCand& c : cands) {
        bool free = true;
        for (int ei : c.eidx)
            if (cyc_used[ei] || edge_done_[E[ei].orig]) { free = false; break; }
        if (!free) continue;
        const int k = static_cast<int>(c.eidx.size());
        for (int j = 0; j < k; ++j) {
            const HEdge& rec = E[c.eidx[j]];
            cyc_used[c.eidx[j]] = 1;
            NodeId hd, tl;
            if (k == 1) {
                hd = std::max(rec.x, rec.y);
                tl = std::min(rec.x, rec.y);
            } else {
                int nxt = c.sseq[(j + 1) % k];
                hd = rec.a == nxt ? rec.x : rec.y;
                tl = rec.a == nxt ? rec.y : rec.x;
            }
            commit_must(rec.orig, T + 3 * r_ * M, hd);
            satisfy(lvl, c.sseq[j], 3 * r_, T + 3 * r_ * M, tl);
        }
    }

    // phase 2: every leftover super picks three edges. A pick nobody else
    // picked is an exit; the smallest such pick is oriented out of the
    // picker, the rest of the level's uncontested edges take the default
    // head (larger endpoint id).
    std::vector<std::vector<int>> picks(ns);
    std::vector<int> pick_cnt(E.size(), 0);
    for (int s = 0; s < ns; ++s) {
        if (L.satisfied[s]) continue;
        std::vector<int> live;
        for (int ei : inc[s])
            if (!edge_done_[E[ei].orig] && E[ei].a != E[ei].b) live.push_back(ei);
        std::sort(live.begin(), live.end(), [&](int i, int j) {
            int wi = E[i].a == s ? E[i].b : E[i].a;
            int wj = E[j].a == s ? E[j].b : E[j].a;
            if (wi != wj) return wi < wj;
            return E[i].orig < E[j].orig;
        });
        if (static_cast<int>(live.size()) < 3)
            throw contract_error("unsatisfied super with fewer than three live edges");
        live.resize(3);
        picks[s] = live;
        for (int ei : live) ++pick_cnt[ei];
    }
    for (int s = 0; s < ns; ++s) {
        if (L.satisfied[s] || picks[s].empty()) continue;
        for (int ei : picks[s]) {
            if (pick_cnt[ei] != 1) continue;
            const HEdge& rec = E[ei];
            NodeId inner = rec.a == s ? rec.x : rec.y;
            NodeId outer = rec.a == s ? rec.y : rec.x;
            commit_must(rec.orig, T + (3 * r_ + 1) * M, outer);
            satisfy(lvl, s, 3 * r_ + 1, T + (3 * r_ + 1) * M, inner);
            break;
        }
    }
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        if (edge_done_[E[i].orig] || pick_cnt[i] == 2) continue;
        commit_must(E[i].orig, T + (3 * r_ + 1) * M, std::max(E[i].x, E[i].y));
    }

    // phase 3: r cession rounds. A contested pick whose partner exited by
    // round 3r+t is known to be free; the smallest such pick becomes the
    // grabber's exit.
    for (int t = 1; t <= r_; ++t) {
        for (int s = 0; s < ns; ++s) {
            if (L.satisfied[s] || picks[s].empty()) continue;
            int best = -1;
            for (int ei : picks[s]) {
                if (edge_done_[E[ei].orig]) continue;
                int p = E[ei].a == s ? E[ei].b : E[ei].a;
                if (L.sat_unit[p] < 0 || L.sat_unit[p] > 3 * r_ + t) continue;
                if (best < 0 || E[ei].orig < E[best].orig) best = ei;
            }
            if (best < 0) continue;
            const HEdge& rec = E[best];
            NodeId inner = rec.a == s ? rec.x : rec.y;
            NodeId outer = rec.a == s ? rec.y : rec.x;
            commit_must(rec.orig, T + (3 * r_ + 1 + t) * M, outer);
            satisfy(lvl, s, 3 * r_ + 1 + t, T + (3 * r_ + 1 + t) * M, inner);
        }
    }

    // contested edges whose pickers both exited elsewhere
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        if (edge_done_[E[i].orig] || pick_cnt[i] != 2) continue;
        if (L.satisfied[E[i].a] && L.satisfied[E[i].b])
            commit_must(E[i].orig, T + (4 * r_ + 2) * M, std::max(E[i].x, E[i].y));
    }

    std::vector<int> unsat;
    for (int s = 0; s < ns; ++s)
        if (!L.satisfied[s]) unsat.push_back(s);
    is.nodes_removed = ns - static_cast<int64_t>(unsat.size());
    int64_t carried = 0;

    cluster_of_[lvl].assign(ns, -1);
    pos_of_[lvl].assign(ns, -1);

    if (unsat.empty()) {
        for (const HEdge& e : E)
            if (!edge_done_[e.orig]) throw contract_error("resolved level left an edge behind");
        is.edges_removed = is.edges_before;
        stats_.push_back(is);
        return -1;
    }

    // phase 4: split leftover contested edges into reserves (partner
    // satisfied) and the unsatisfied-vs-unsatisfied graph, then cluster that
    // graph around centers pairwise more than 2r+1 apart.
    std::vector<std::vector<ReserveRec>> fresh(ns);
    std::vector<std::vector<std::array<int, 2>>> uu(ns);  // (other super, edge idx)
    std::vector<int> uu_edges;
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        const HEdge& e = E[i];
        if (edge_done_[e.orig]) continue;
        bool sa = L.satisfied[e.a], sb = L.satisfied[e.b];
        if (!sa && !sb) {
            uu[e.a].push_back({e.b, i});
            uu[e.b].push_back({e.a, i});
            uu_edges.push_back(i);
            continue;
        }
        int owner = sa ? e.b : e.a;
        NodeId inner = sa ? e.y : e.x;
        NodeId outer = sa ? e.x : e.y;
        fresh[owner].push_back({e.orig, inner, outer});
        node_reserves_[inner].push_back({e.orig, outer});
    }

    const int radius = 2 * r_ + 1;
    std::vector<int> budget(ns, -1);
    std::vector<int> centers;
    std::vector<int> q;
    for (int s : unsat) {
        if (budget[s] >= 0) continue;
        centers.push_back(s);
        budget[s] = radius;
        q.assign(1, s);
        for (size_t h = 0; h < q.size(); ++h) {
            int u = q[h];
            if (budget[u] == 0) continue;
            for (auto& [w, ei] : uu[u]) {
                if (budget[w] >= budget[u] - 1) continue;
                budget[w] = budget[u] - 1;
                q.push_back(w);
            }
        }
    }

    const int nc = static_cast<int>(centers.size());
    std::vector<int> owner(ns, -1), par_super(ns, -1), par_eidx(ns, -1), dist(ns, -1);
    std::vector<int> frontier;
    for (int ci = 0; ci < nc; ++ci) {
        owner[centers[ci]] = ci;
        dist[centers[ci]] = 0;
        frontier.push_back(centers[ci]);
    }
    int layer = 0;
    while (!frontier.empty()) {
        ++layer;
        std::vector<std::array<int, 4>> cand;  // (super, owner, parent, edge idx by orig)
        for (int v : frontier)
            for (auto& [w, ei] : uu[v])
                if (owner[w] < 0) cand.push_back({w, owner[v], v, ei});
        std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
            if (a[0] != b[0]) return a[0] < b[0];
            if (a[1] != b[1]) return a[1] < b[1];
            if (a[2] != b[2]) return a[2] < b[2];
            return E[a[3]].orig < E[b[3]].orig;
        });
        frontier.clear();
        for (const auto& c : cand) {
            if (owner[c[0]] >= 0) continue;
            owner[c[0]] = c[1];
            par_super[c[0]] = c[2];
            par_eidx[c[0]] = c[3];
            dist[c[0]] = layer;
            frontier.push_back(c[0]);
        }
    }
    for (int s : unsat)
        if (owner[s] < 0 || dist[s] > radius)
            throw contract_error("cluster assignment missed an unsatisfied super");

    Level next;
    next.t_base = T + (6 * r_ + 4) * M;
    next.m_unit = (4 * r_ + 4) * M;
    next.nsupers = nc;
    next.members.resize(nc);
    next.tree.resize(nc);
    next.reserves.resize(nc);
    for (int s : unsat) next.members[owner[s]].push_back(s);
    for (int c = 0; c < nc; ++c) std::sort(next.members[c].begin(), next.members[c].end());
    for (int c = 0; c < nc; ++c)
        for (int p = 0; p < static_cast<int>(next.members[c].size()); ++p) {
            cluster_of_[lvl][next.members[c][p]] = c;
            pos_of_[lvl][next.members[c][p]] = p;
        }
    std::vector<char> tree_used(E.size(), 0);
    for (int s : unsat) {
        if (par_eidx[s] < 0) continue;
        next.tree[owner[s]].push_back({pos_of_[lvl][s], pos_of_[lvl][par_super[s]], par_eidx[s]});
        tree_used[par_eidx[s]] = 1;
    }
    for (int s : unsat)
        for (ReserveRec& rr : fresh[s])
            next.reserves[cluster_of_[lvl][s]].push_back(rr);
    for (int i : uu_edges) {
        if (tree_used[i]) continue;  // consumed: commits when its cluster unfolds
        const HEdge& e = E[i];
        next.edges.push_back({e.orig, e.x, e.y, cluster_of_[lvl][e.a], cluster_of_[lvl][e.b]});
        ++carried;
    }
    next.satisfied.assign(nc, 0);
    next.sat_unit.assign(nc, -1);

    is.edges_removed = is.edges_before - carried;
    stats_.push_back(is);

    node_super_.emplace_back(g_->n, -1);
    for (NodeId v = 0; v < g_->n; ++v) {
        int s = node_super_[lvl][v];
        if (s >= 0) node_super_[lvl + 1][v] = cluster_of_[lvl][s];
    }
    cluster_of_.emplace_back();
    pos_of_.emplace_back();
    levels_.push_back(std::move(next));
    return lvl + 1;
}

// Budget exhausted: resolve each component of the remaining multigraph in
// one sweep. A component with a cycle orients it and hangs trees off it; a
// tree component exits through some reserve (the resource invariant
// guarantees one) and points everything at its holder.
void SinklessOrientation::finisher(int lvl) {
    Level& L = levels_[lvl];
    const std::vector<HEdge>& E = L.edges;
    const long long M = L.m_unit, T = L.t_base;
    const int ns = L.nsupers;

    IterationStats is;
    is.iteration = lvl;
    is.nodes_before = ns;
    is.nodes_removed = ns;
    is.edges_before = static_cast<int64_t>(E.size());
    is.edges_removed = is.edges_before;

    std::vector<std::vector<int>> inc(ns);
    for (int i = 0; i < static_cast<int>(E.size()); ++i) {
        inc[E[i].a].push_back(i);
        if (E[i].b != E[i].a) inc[E[i].b].push_back(i);
    }

    std::vector<char> seen(ns, 0);
    for (int s0 = 0; s0 < ns; ++s0) {
        if (seen[s0]) continue;
        std::vector<int> comp;
        std::vector<int> cedges;
        std::vector<char> eseen(E.size(), 0);
        comp.push_back(s0);
        seen[s0] = 1;
        for (size_t h = 0; h < comp.size(); ++h) {
            int u = comp[h];
            for (int ei : inc[u]) {
                if (!eseen[ei]) {
                    eseen[ei] = 1;
                    cedges.push_back(ei);
                }
                int w = E[ei].a == u ? E[ei].b : E[ei].a;
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        std::sort(cedges.begin(), cedges.end(),
                  [&](int i, int j) { return E[i].orig < E[j].orig; });

        std::vector<int> cyc_e, cyc_s;
        if (cedges.size() >= comp.size()) {
            int loop = -1;
            for (int ei : cedges)
                if (E[ei].a == E[ei].b) { loop = ei; break; }
            if (loop >= 0) {
                cyc_e = {loop};
                cyc_s = {E[loop].a};
            } else {
                std::map<std::pair<int, int>, int> first_pair;
                for (int ei : cedges) {
                    auto key = std::minmax(E[ei].a, E[ei].b);
                    auto [it, fresh_pair] = first_pair.try_emplace({key.first, key.second}, ei);
                    if (!fresh_pair) {
                        cyc_e = {it->second, ei};
                        cyc_s = {E[it->second].a, E[it->second].b};
                        break;
                    }
                }
            }
            if (cyc_e.empty()) {
                // spanning tree from the smallest super, smallest leftover edge closes a cycle
                std::map<int, int> par_e, dep;
                std::vector<char> tflag(E.size(), 0);
                std::vector<int> bq{comp[0]};
                dep[comp[0]] = 0;
                for (size_t h = 0; h < bq.size(); ++h) {
                    int u = bq[h];
                    for (int ei : inc[u]) {
                        int w = E[ei].a == u ? E[ei].b : E[ei].a;
                        if (dep.count(w)) continue;
                        dep[w] = dep[u] + 1;
                        par_e[w] = ei;
                        tflag[ei] = 1;
                        bq.push_back(w);
                    }
                }
                int closer = -1;
                for (int ei : cedges)
                    if (!tflag[ei]) { closer = ei; break; }
                if (closer < 0) throw contract_error("component promised a cycle it does not have");
                int a = E[closer].a, b = E[closer].b;
                std::vector<int> pa_s{a}, pa_e, pb_s{b}, pb_e;
                for (int u = a; par_e.count(u);) {
                    int ei = par_e[u];
                    pa_e.push_back(ei);
                    u = E[ei].a == u ? E[ei].b : E[ei].a;
                    pa_s.push_back(u);
                }
                for (int u = b; par_e.count(u);) {
                    int ei = par_e[u];
                    pb_e.push_back(ei);
                    u = E[ei].a == u ? E[ei].b : E[ei].a;
                    pb_s.push_back(u);
                }
                // both paths end at the BFS root; trim the shared suffix so
                // they end at the lowest common ancestor instead
                while (pa_s.size() > 1 && pb_s.size() > 1 &&
                       pa_s[pa_s.size() - 2] == pb_s[pb_s.size() - 2]) {
                    pa_s.pop_back(); pa_e.pop_back();
                    pb_s.pop_back(); pb_e.pop_back();
                }
                // walk a -> lca -> b, then close with the extra edge
                cyc_s.assign(pa_s.begin(), pa_s.end());
                cyc_e.assign(pa_e.begin(), pa_e.end());
                for (size_t j = pb_s.size() - 1; j-- > 0;) {
                    cyc_s.push_back(pb_s[j]);
                    cyc_e.push_back(pb_e[j]);
                }
                cyc_e.push_back(closer);
            }
        }

        // structure first, commits after: depth determines the offsets
        std::vector<char> on_cyc(E.size(), 0);
        for (int ei : cyc_e) on_cyc[ei] = 1;
        std::map<int, long long> depf;
        std::map<int, int> parf;
        std::vector<int> bq;
        int root = -1;
        ReserveRec exit_rr{};
        if (!cyc_e.empty()) {
            for (int s : cyc_s)
                if (!depf.count(s)) { depf[s] = 0; bq.push_back(s); }
        } else {
            for (int s : comp) {
                for (const ReserveRec& rr : L.reserves[s]) {
                    if (edge_done_[rr.orig]) continue;
                    if (root < 0 || rr.orig < exit_rr.orig) { root = s; exit_rr = rr; }
                }
            }
            if (root < 0) throw contract_error("stranded component holds no reserve to exit through");
            depf[root] = 0;
            bq.push_back(root);
        }
        long long maxd = 0;
        for (size_t h = 0; h < bq.size(); ++h) {
            int u = bq[h];
            for (int ei : inc[u]) {
                if (on_cyc[ei] || E[ei].a == E[ei].b) continue;
                int w = E[ei].a == u ? E[ei].b : E[ei].a;
                if (depf.count(w)) continue;
                depf[w] = depf[u] + 1;
                parf[w] = ei;
                maxd = std::max(maxd, depf[w]);
                bq.push_back(w);
            }
        }
        const long long t0 = T + (maxd + 2) * M;

        const int k = static_cast<int>(cyc_e.size());
        for (int j = 0; j < k; ++j) {
            const HEdge& rec = E[cyc_e[j]];
            NodeId hd, tl;
            if (k == 1) {
                hd = std::max(rec.x, rec.y);
                tl = std::min(rec.x, rec.y);
            } else {
                int nxt = cyc_s[(j + 1) % k];
                hd = rec.a == nxt ? rec.x : rec.y;
                tl = rec.a == nxt ? rec.y : rec.x;
            }
            commit_must(rec.orig, t0, hd);
            satisfy(lvl, cyc_s[j], maxd + 2, t0, tl);
        }
        if (k == 0) {
            commit_must(exit_rr.orig, t0, exit_rr.outer);
            satisfy(lvl, root, maxd + 2, t0, exit_rr.inner);
        }
        for (int u : bq) {
            if (!parf.count(u)) continue;
            const HEdge& rec = E[parf[u]];
            NodeId inner = rec.a == u ? rec.x : rec.y;
            NodeId outer = rec.a == u ? rec.y : rec.x;
            long long tc = t0 + depf[u] * M;
            commit_must(rec.orig, tc, outer);
            satisfy(lvl, u, maxd + 2 + depf[u], tc, inner);
        }
        for (int ei : cedges)
            if (!edge_done_[E[ei].orig])
                commit_must(E[ei].orig, t0, std::max(E[ei].x, E[ei].y));
    }
    stats_.push_back(is);
}

void SinklessOrientation::build_schedule(const Graph& g, uint64_t) {
    g_ = &g;
    levels_.clear();
    node_super_.clear();
    cluster_of_.clear();
    pos_of_.clear();
    node_reserves_.assign(g.n, {});
    edge_done_.assign(g.m(), 0);
    head_.assign(g.m(), -1);

    if (g.n == 0) return;
    if (g.min_degree() < 3) throw input_error("sinkless orientation needs minimum degree 3");

    Level base;
    base.nsupers = g.n;
    base.satisfied.assign(g.n, 0);
    base.sat_unit.assign(g.n, -1);
    base.reserves.resize(g.n);
    for (EdgeId e = 0; e < g.m(); ++e)
        base.edges.push_back({e, g.edges[e].first, g.edges[e].second,
                              g.edges[e].first, g.edges[e].second});
    levels_.push_back(std::move(base));
    node_super_.emplace_back(g.n);
    for (NodeId v = 0; v < g.n; ++v) node_super_[0][v] = v;
    cluster_of_.emplace_back();
    pos_of_.emplace_back();

    const int budget = std::max(1, log2_ceil(static_cast<uint64_t>(
                                     log2_ceil(static_cast<uint64_t>(std::max<NodeId>(g.n, 2))))));
    for (int lvl = 0;; ++lvl) {
        if (lvl == budget) {
            finisher(lvl);
            break;
        }
        if (run_level(lvl) < 0) break;
    }

    for (EdgeId e = 0; e < g.m(); ++e)
        if (!edge_done_[e]) throw contract_error("orientation left an edge uncommitted");
    for (NodeId v = 0; v < g.n; ++v) {
        bool out = false;
        for (EdgeId e : g.incident(v))
            if (head_[e] != v) { out = true; break; }
        if (!out) throw contract_error("orientation left a sink");
    }
}

}  // namespace
}  // namespace locavg

namespace locavg::detail {

std::unique_ptr<Algorithm> sinkless_orientation_with_cap(int r, int max_cycle_len) {
    return std::make_unique<SinklessOrientation>(r, max_cycle_len);
}

}  // namespace locavg::detail

namespace locavg {

std::unique_ptr<Algorithm> sinkless_orientation(int r) {
    if (r < 3) throw input_error("sinkless orientation needs r >= 3");
    return detail::sinkless_orientation_with_cap(r, 6 * r);
}

}  // namespace locavg
