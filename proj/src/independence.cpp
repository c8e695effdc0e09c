#include "locavg/independence.hpp"

#include <algorithm>
#include <bit>

namespace locavg {

namespace {

struct Searcher {
    // adjacency over the compacted subset, as bitsets
    int n = 0;
    int words = 0;
    std::vector<uint64_t> adj;   // n * words
    int64_t budget = 0;
    int64_t explored = 0;
    int best = 0;
    bool exhausted = false;

    const uint64_t* row(int v) const { return adj.data() + static_cast<size_t>(v) * words; }

    int count(const std::vector<uint64_t>& set) const {
        int c = 0;
        for (uint64_t w : set) c += std::popcount(w);
        return c;
    }

    // greedy clique cover of `set`: each clique can hold at most one
    // independent node, so the number of cliques bounds alpha(set)
    int clique_cover_bound(const std::vector<uint64_t>& set) const {
        std::vector<uint64_t> rest = set;
        std::vector<uint64_t> clique(words);
        int cliques = 0;
        for (int v = 0; v < n; ++v) {
            if (!(rest[v >> 6] >> (v & 63) & 1)) continue;
            // start a clique at v, absorb remaining common neighbors greedily
            for (int w = 0; w < words; ++w) clique[w] = rest[w] & row(v)[w];
            rest[v >> 6] &= ~(1ULL << (v & 63));
            ++cliques;
            for (int u = v + 1; u < n; ++u) {
                if (!(clique[u >> 6] >> (u & 63) & 1)) continue;
                rest[u >> 6] &= ~(1ULL << (u & 63));
                for (int w = 0; w < words; ++w) clique[w] &= row(u)[w];
            }
        }
        return cliques;
    }

    void search(std::vector<uint64_t>& set, int picked) {
        if (exhausted) return;
        if (++explored > budget) {
            exhausted = true;
            return;
        }
        int remaining = count(set);
        if (remaining == 0) {
            best = std::max(best, picked);
            return;
        }
        if (picked + remaining <= best) return;
        if (picked + clique_cover_bound(set) <= best) return;

        // branch on a max-degree vertex within the set
        int pick = -1, pick_deg = -1;
        std::vector<uint64_t> tmp(words);
        for (int v = 0; v < n; ++v) {
            if (!(set[v >> 6] >> (v & 63) & 1)) continue;
            int d = 0;
            for (int w = 0; w < words; ++w) d += std::popcount(set[w] & row(v)[w]);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick_deg == 0) {
            // set is independent
            best = std::max(best, picked + remaining);
            return;
        }
        // include pick
        std::vector<uint64_t> inc(words);
        for (int w = 0; w < words; ++w) inc[w] = set[w] & ~row(pick)[w];
        inc[pick >> 6] &= ~(1ULL << (pick & 63));
        search(inc, picked + 1);
        // exclude pick
        std::vector<uint64_t> exc = set;
        exc[pick >> 6] &= ~(1ULL << (pick & 63));
        search(exc, picked);
    }
};

}  // namespace

IndependenceResult independence_number_exact(const Graph& g, std::span<const NodeId> subset,
                                             int64_t node_budget) {
    std::vector<NodeId> nodes(subset.begin(), subset.end());
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (NodeId v : nodes)
        if (v < 0 || v >= g.n) throw input_error("subset node out of range");

    Searcher s;
    s.n = static_cast<int>(nodes.size());
    s.words = (s.n + 63) / 64;
    s.budget = node_budget;
    if (s.n == 0) return {true, 0, 0};

    std::vector<int> local(g.n, -1);
    for (int i = 0; i < s.n; ++i) local[nodes[i]] = i;
    s.adj.assign(static_cast<size_t>(s.n) * s.words, 0);
    for (int i = 0; i < s.n; ++i)
        for (NodeId u : g.neighbors(nodes[i]))
            if (local[u] >= 0) s.adj[static_cast<size_t>(i) * s.words + (local[u] >> 6)] |=
                1ULL << (local[u] & 63);

    std::vector<uint64_t> all(s.words, 0);
    for (int i = 0; i < s.n; ++i) all[i >> 6] |= 1ULL << (i & 63);
    s.search(all, 0);

    IndependenceResult r;
    r.exact = !s.exhausted;
    r.alpha = s.best;
    r.nodes_explored = s.explored;
    return r;
}

}  // namespace locavg
