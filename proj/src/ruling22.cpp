#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg {

namespace {

class RulingSet22 : public detail::ScheduledAlgorithm {
  public:
    RulingSet22() : ScheduledAlgorithm("ruling_set_22", ProblemKind::node_labeled) {}

  protected:
    void build_schedule(const Graph& g, uint64_t seed) override {
        const NodeId n = g.n;
        std::vector<StreamRng> st;
        st.reserve(n);
        for (NodeId v = 0; v < n; ++v) st.emplace_back(node_stream_seed(seed, v));

        std::vector<char> alive(n, 1);
        std::vector<char> alive0(n, 1);  // surviving graph at iteration start
        std::vector<int> deg(n);
        for (NodeId v = 0; v < n; ++v) deg[v] = g.degree(v);
        int64_t live_nodes = n;
        int64_t live_edges = g.m();

        std::vector<char> marked(n, 0);
        std::vector<char> dying(n, 0);
        std::vector<NodeId> winners, removed;
        const int cap = 1000 + 200 * log2_ceil(static_cast<uint64_t>(n) + 4);
        for (int iter = 0; live_nodes > 0; ++iter) {
            if (iter > cap) throw contract_error("ruling_set_22: iteration cap exceeded");
            IterationStats is;
            is.iteration = iter;
            is.nodes_before = live_nodes;
            is.edges_before = live_edges;
            alive0 = alive;

            // marking probability 1/(deg + 1) on the surviving graph; a node
            // with no surviving neighbor marks with probability 1
            for (NodeId v = 0; v < n; ++v)
                marked[v] = alive[v] && st[v].chance(1, 1ull + deg[v]);

            // all locally (degree, id)-maximal marked nodes join the set at
            // once; they are pairwise non-adjacent
            winners.clear();
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
                if (wins) winners.push_back(v);
            }

            removed.clear();
            for (NodeId v : winners) {
                commit_node_at(v, iter, 1);
                alive[v] = 0;
                removed.push_back(v);
            }
            // everything within distance 2 of a winner in the surviving graph
            // is dominated and leaves
            for (NodeId v : winners) {
                for (NodeId u : g.neighbors(v)) {
                    if (!alive0[u]) continue;
                    if (alive[u]) {
                        commit_node_at(u, iter, 0);
                        alive[u] = 0;
                        removed.push_back(u);
                    }
                    for (NodeId w : g.neighbors(u)) {
                        if (!alive[w]) continue;
                        commit_node_at(w, iter, 0);
                        alive[w] = 0;
                        removed.push_back(w);
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
                        --live_edges;
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

std::unique_ptr<Algorithm> ruling_set_22() { return std::make_unique<RulingSet22>(); }

}  // namespace locavg
