#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg {

Rat rand_mm_mark_prob(int du, int dv) {
    if (du < 1 || dv < 1) throw input_error("mark probability needs live endpoints");
    return Rat(1, 4ll * (du + dv));
}

namespace {

class RandMaximalMatching : public detail::ScheduledAlgorithm {
  public:
    RandMaximalMatching() : ScheduledAlgorithm("rand_mm", ProblemKind::edge_labeled) {}

  protected:
    void build_schedule(const Graph& g, uint64_t seed) override {
        const NodeId n = g.n;
        const EdgeId m = g.m();
        std::vector<StreamRng> st;
        st.reserve(n);
        for (NodeId v = 0; v < n; ++v) st.emplace_back(node_stream_seed(seed, v));

        std::vector<char> edge_alive(m, 1);
        std::vector<int> deg(n);
        for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
        int64_t live_edges = m;

        std::vector<char> marked(m, 0);
        const int cap = 1000 + 200 * log2_ceil(static_cast<uint64_t>(n) + 4);
        for (int iter = 0; live_edges > 0; ++iter) {
            if (iter > cap) throw contract_error("rand_mm: iteration cap exceeded");
            IterationStats is;
            is.iteration = iter;
            is.edges_before = live_edges;

            // the smaller endpoint draws each coin, edges in id order; an
            // edge with no surviving adjacent edge marks without a coin
            for (EdgeId e = 0; e < m; ++e) {
                if (!edge_alive[e]) {
                    marked[e] = 0;
                    continue;
                }
                auto [u, v] = g.edges[e];
                if (deg[u] == 1 && deg[v] == 1) {
                    marked[e] = 1;
                } else {
                    marked[e] = st[u].chance(1, 4ull * (deg[u] + deg[v]));
                }
            }

            // a marked edge joins unless an adjacent marked edge has a
            // smaller id
            int64_t removed_edges = 0;
            for (EdgeId e = 0; e < m; ++e) {
                if (!marked[e]) continue;
                auto [u, v] = g.edges[e];
                bool wins = true;
                for (EdgeId f : g.incident(u)) {
                    if (f != e && edge_alive[f] && marked[f] && f < e) {
                        wins = false;
                        break;
                    }
                }
                if (wins) {
                    for (EdgeId f : g.incident(v)) {
                        if (f != e && edge_alive[f] && marked[f] && f < e) {
                            wins = false;
                            break;
                        }
                    }
                }
                if (!wins) continue;
                commit_edge_at(e, iter, 1);
                edge_alive[e] = 0;
                --live_edges;
                ++removed_edges;
                is.matched_weight += deg[u] + deg[v];
                // both endpoints leave; their other edges are removed
                for (NodeId x : {u, v}) {
                    for (EdgeId f : g.incident(x)) {
                        if (!edge_alive[f]) continue;
                        commit_edge_at(f, iter, 0);
                        edge_alive[f] = 0;
                        marked[f] = 0;
                        --live_edges;
                        ++removed_edges;
                        NodeId y = g.other_end(f, x);
                        --deg[y];
                    }
                    deg[x] = 0;
                }
            }

            is.edges_removed = removed_edges;
            stats_.push_back(is);
        }
    }
};

}  // namespace

std::unique_ptr<Algorithm> rand_maximal_matching() { return std::make_unique<RandMaximalMatching>(); }

}  // namespace locavg
