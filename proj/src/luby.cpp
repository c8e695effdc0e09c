#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg {

namespace {

class LubyMis : public detail::ScheduledAlgorithm {
  public:
    LubyMis() : ScheduledAlgorithm("luby_mis", ProblemKind::node_labeled) {}

  protected:
    void build_schedule(const Graph& g, uint64_t seed) override {
        const NodeId n = g.n;
        std::vector<StreamRng> st;
        st.reserve(n);
        for (NodeId v = 0; v < n; ++v) st.emplace_back(node_stream_seed(seed, v));

        std::vector<char> alive(n, 1);
        std::vector<int> deg(n);
        int64_t live_nodes = n;
        int64_t live_edges = g.m();
        for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);

        std::vector<char> marked(n, 0);
        std::vector<char> dying(n, 0);
        std::vector<NodeId> removed;
        const int cap = 1000 + 200 * log2_ceil(static_cast<uint64_t>(n) + 4);
        for (int iter = 0; live_nodes > 0; ++iter) {
            if (iter > cap) throw contract_error("luby_mis: iteration cap exceeded");
            IterationStats is;
            is.iteration = iter;
            is.nodes_before = live_nodes;
            is.edges_before = live_edges;

            removed.clear();
            // nodes with no surviving neighbor join outright, without a coin
            for (NodeId v = 0; v < n; ++v) {
                if (alive[v] && deg[v] == 0) {
                    commit_node_at(v, iter, 1);
                    alive[v] = 0;
                    removed.push_back(v);
                }
            }
            for (NodeId v = 0; v < n; ++v)
                marked[v] = alive[v] && st[v].chance(1, 2ull * deg[v]);

            // a marked node wins unless a marked surviving neighbor beats it
            // on (degree, id)
            for (NodeId v = 0; v < n; ++v) {
                if (!marked[v]) continue;
                bool wins = true;
                for (int64_t a = g.off[v]; a < g.off[v + 1]; ++a) {
                    NodeId u = g.adj[a];
                    if (!marked[u]) continue;
                    if (deg[u] > deg[v] || (deg[u] == deg[v] && u > v)) {
                        wins = false;
                        break;
                    }
                }
                if (wins) {
                    commit_node_at(v, iter, 1);
                    alive[v] = 0;
                    removed.push_back(v);
                    for (NodeId u : g.neighbors(v)) {
                        if (alive[u]) {
                            commit_node_at(u, iter, 0);
                            alive[u] = 0;
                            removed.push_back(u);
                        }
                    }
                }
            }
            for (NodeId x : removed) dying[x] = 1;
            for (NodeId x : removed) {
                for (NodeId y : g.neighbors(x)) {
                    if (alive[y]) {
                        --deg[y];
                        --live_edges;
                    } else if (dying[y] && x < y) {
                        --live_edges;  // both ends died this iteration
                    }
                }
                marked[x] = 0;
            }
            for (NodeId x : removed) dying[x] = 0;
            live_nodes -= static_cast<int64_t>(removed.size());

            is.nodes_removed = static_cast<int64_t>(removed.size());
            is.edges_removed = is.edges_before - live_edges;
            stats_.push_back(is);
        }
    }
};

}  // namespace

std::unique_ptr<Algorithm> luby_mis() { return std::make_unique<LubyMis>(); }

}  // namespace locavg
