#include <algorithm>
#include <string>
#include <vector>

#include "locavg/algorithms.hpp"

namespace locavg {

bool is_independent_set(const Graph& g, const std::vector<char>& in_set) {
    if (static_cast<NodeId>(in_set.size()) != g.n) return false;
    for (auto [u, v] : g.edges)
        if (in_set[u] && in_set[v]) return false;
    return true;
}

bool is_maximal_independent_set(const Graph& g, const std::vector<char>& in_set) {
    if (!is_independent_set(g, in_set)) return false;
    for (NodeId v = 0; v < g.n; ++v) {
        if (in_set[v]) continue;
        bool dominated = false;
        for (NodeId u : g.neighbors(v))
            if (in_set[u]) { dominated = true; break; }
        if (!dominated) return false;
    }
    return true;
}

RulingCheck check_ruling_set(const Graph& g, const std::vector<char>& in_set) {
    RulingCheck rc;
    rc.independent = is_independent_set(g, in_set);
    std::vector<int> dist(g.n, -1);
    std::vector<NodeId> q;
    for (NodeId v = 0; v < g.n; ++v)
        if (v < static_cast<NodeId>(in_set.size()) && in_set[v]) {
            dist[v] = 0;
            q.push_back(v);
        }
    for (size_t h = 0; h < q.size(); ++h) {
        NodeId u = q[h];
        for (NodeId w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    rc.domination_radius = 0;
    for (NodeId v = 0; v < g.n; ++v) {
        if (dist[v] < 0) { rc.domination_radius = -1; return rc; }
        rc.domination_radius = std::max(rc.domination_radius, dist[v]);
    }
    return rc;
}

bool is_matching(const Graph& g, const std::vector<char>& in_matching) {
    if (static_cast<EdgeId>(in_matching.size()) != g.m()) return false;
    std::vector<char> used(g.n, 0);
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!in_matching[e]) continue;
        auto [u, v] = g.edges[e];
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

bool is_maximal_matching(const Graph& g, const std::vector<char>& in_matching) {
    if (!is_matching(g, in_matching)) return false;
    std::vector<char> used(g.n, 0);
    for (EdgeId e = 0; e < g.m(); ++e)
        if (in_matching[e]) {
            used[g.edges[e].first] = 1;
            used[g.edges[e].second] = 1;
        }
    for (EdgeId e = 0; e < g.m(); ++e)
        if (!used[g.edges[e].first] && !used[g.edges[e].second]) return false;
    return true;
}

bool is_sinkless_orientation(const Graph& g, const std::vector<int64_t>& edge_head) {
    if (static_cast<EdgeId>(edge_head.size()) != g.m()) return false;
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        if (edge_head[e] != u && edge_head[e] != v) return false;
    }
    for (NodeId v = 0; v < g.n; ++v) {
        bool out = false;
        for (EdgeId e : g.incident(v))
            if (edge_head[e] != v) { out = true; break; }
        if (!out) return false;
    }
    return true;
}

namespace {

std::vector<char> node_set_from(const ExecutionTrace& t, int64_t member_value) {
    std::vector<char> s(t.node_output.size(), 0);
    for (size_t v = 0; v < t.node_output.size(); ++v)
        s[v] = t.node_output[v] == member_value;
    return s;
}

bool outputs_in(const std::vector<int64_t>& out, int64_t lo, int64_t hi) {
    for (int64_t x : out)
        if (x < lo || x > hi) return false;
    return true;
}

// Our deterministic ruling sets emit, for every node outside S, the neighbor
// it was dominated through; chasing those pointers must reach S within the
// advertised radius.
bool check_pointer_chains(const Graph& g, const ExecutionTrace& t, int radius) {
    for (NodeId v = 0; v < g.n; ++v) {
        NodeId cur = v;
        int hops = 0;
        while (t.node_output[cur] != -1) {
            if (++hops > radius) return false;
            int64_t nxt = t.node_output[cur];
            if (nxt < 0 || nxt >= g.n || !g.has_edge(cur, static_cast<NodeId>(nxt))) return false;
            cur = static_cast<NodeId>(nxt);
        }
    }
    return true;
}

}  // namespace

bool validate_trace(const std::string& algorithm, const Graph& g, const ExecutionTrace& trace) {
    if (trace.timed_out || !trace.complete()) return false;

    if (algorithm == "luby_mis" || algorithm == "linial_mis" || algorithm == "greedy_mis") {
        return outputs_in(trace.node_output, 0, 1) &&
               is_maximal_independent_set(g, node_set_from(trace, 1));
    }
    if (algorithm == "ruling_set_22") {
        if (!outputs_in(trace.node_output, 0, 1)) return false;
        RulingCheck rc = check_ruling_set(g, node_set_from(trace, 1));
        return rc.independent && rc.domination_radius >= 0 && rc.domination_radius <= 2;
    }
    if (algorithm == "det_ruling_logdelta" || algorithm == "det_ruling_loglogn") {
        RulingMode mode = algorithm == "det_ruling_logdelta" ? RulingMode::log_delta
                                                             : RulingMode::log_log_n;
        int radius = det_ruling_iterations(mode, g.n, g.n ? g.max_degree() : 0) + 1;
        RulingCheck rc = check_ruling_set(g, node_set_from(trace, -1));
        return rc.independent && rc.domination_radius >= 0 && rc.domination_radius <= radius &&
               check_pointer_chains(g, trace, radius);
    }
    if (algorithm == "rand_mm" || algorithm == "det_mm") {
        if (!outputs_in(trace.edge_output, 0, 1)) return false;
        std::vector<char> matched(trace.edge_output.size(), 0);
        for (size_t e = 0; e < trace.edge_output.size(); ++e)
            matched[e] = trace.edge_output[e] == 1;
        return is_maximal_matching(g, matched);
    }
    if (algorithm.rfind("sinkless", 0) == 0) {
        return is_sinkless_orientation(g, trace.edge_output);
    }
    throw input_error("no validator for algorithm '" + algorithm + "'");
}

// ---- averaged-case structure predicates ---------------------------------

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    while (b) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

int64_t count_good_nodes_ruling(const Graph& g) {
    constexpr __int128 kDenLimit = static_cast<__int128>(1000000000000000000LL) * 1000000000000LL;
    int64_t good = 0;
    std::vector<int> mark(g.n, -1);
    std::vector<NodeId> ball;
    std::vector<int> degs;
    for (NodeId v = 0; v < g.n; ++v) {
        // inclusive distance-2 ball around v
        ball.clear();
        ball.push_back(v);
        mark[v] = v;
        for (NodeId u : g.neighbors(v))
            if (mark[u] != v) { mark[u] = v; ball.push_back(u); }
        size_t layer1 = ball.size();
        for (size_t i = 1; i < layer1; ++i)
            for (NodeId w : g.neighbors(ball[i]))
                if (mark[w] != v) { mark[w] = v; ball.push_back(w); }

        degs.clear();
        int maxd = 0;
        for (NodeId u : ball) {
            degs.push_back(g.degree(u));
            maxd = std::max(maxd, degs.back());
        }
        // every term is at least 1/(maxd+1), so a big enough ball is good outright
        if (2 * static_cast<int64_t>(degs.size()) >= maxd + 1) {
            ++good;
            continue;
        }
        std::sort(degs.begin(), degs.end());

        // exact running sum of 1/(d+1), grouped by degree so the denominator
        // stays an lcm of the few distinct values; stop once >= 1/2
        __int128 num = 0, den = 1;
        for (size_t i = 0; i < degs.size();) {
            size_t j = i;
            while (j < degs.size() && degs[j] == degs[i]) ++j;
            __int128 q = degs[i] + 1;
            __int128 cnt = static_cast<__int128>(j - i);
            __int128 shared = gcd128(den, q);
            __int128 mult = q / shared;
            if (den > kDenLimit / mult)
                throw contract_error("degree mix too diverse for exact ball arithmetic");
            num = num * mult + (den * mult / q) * cnt;
            den *= mult;
            __int128 r = gcd128(num, den);
            if (r > 1) { num /= r; den /= r; }
            if (num * 2 >= den) { ++good; break; }
            i = j;
        }
    }
    return good;
}

bool is_good_node_matching(const Graph& g, NodeId v) {
    int d = g.degree(v);
    if (d == 0) return false;
    int small = 0;
    for (NodeId u : g.neighbors(v))
        if (g.degree(u) <= d) ++small;
    return 3 * small >= d;
}

int64_t count_good_edges_matching(const Graph& g) {
    std::vector<char> good(g.n, 0);
    for (NodeId v = 0; v < g.n; ++v) good[v] = is_good_node_matching(g, v);
    int64_t c = 0;
    for (auto [u, v] : g.edges)
        if (good[u] || good[v]) ++c;
    return c;
}

}  // namespace locavg
