#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg {

namespace {

// greedy on weight d_u + d_v (surviving degrees), ties by edge id; the result
// is maximal on the surviving graph, so the whole graph resolves in one
// iteration
std::vector<EdgeId> greedy_weight_rounder(const Graph& g, const std::vector<char>& edge_alive,
                                          const std::vector<int>& degree) {
    std::vector<EdgeId> order;
    for (EdgeId e = 0; e < g.m(); ++e)
        if (edge_alive[e]) order.push_back(e);
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        int wa = degree[g.edges[a].first] + degree[g.edges[a].second];
        int wb = degree[g.edges[b].first] + degree[g.edges[b].second];
        if (wa != wb) return wa > wb;
        return a < b;
    });
    std::vector<char> used(g.n, 0);
    std::vector<EdgeId> matching;
    for (EdgeId e : order) {
        auto [u, v] = g.edges[e];
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        matching.push_back(e);
    }
    return matching;
}

class DetMaximalMatching : public detail::ScheduledAlgorithm {
  public:
    explicit DetMaximalMatching(Rounder rounder)
        : ScheduledAlgorithm("det_mm", ProblemKind::edge_labeled),
          rounder_(rounder ? std::move(rounder) : greedy_weight_rounder) {}

  protected:
    void build_schedule(const Graph& g, uint64_t) override {
        const EdgeId m = g.m();
        std::vector<char> edge_alive(m, 1);
        std::vector<int> deg(g.n);
        for (NodeId v = 0; v < g.n; ++v) deg[v] = g.degree(v);
        int64_t live_edges = m;

        const int cap = static_cast<int>(m) + 1;
        for (int iter = 0; live_edges > 0; ++iter) {
            if (iter > cap) throw contract_error("det_mm: iteration cap exceeded");
            IterationStats is;
            is.iteration = iter;
            is.edges_before = live_edges;

            std::vector<EdgeId> matching = rounder_(g, edge_alive, deg);

            // rounder contract: a matching of surviving edges whose
            // (d_u + d_v) weight covers at least a tenth of the live edges
            std::vector<char> touched(g.n, 0);
            int64_t weight = 0;
            for (EdgeId e : matching) {
                if (e < 0 || e >= m || !edge_alive[e])
                    throw contract_error("det_mm: rounder returned a dead edge");
                auto [u, v] = g.edges[e];
                if (touched[u] || touched[v])
                    throw contract_error("det_mm: rounder returned a non-matching");
                touched[u] = touched[v] = 1;
                weight += deg[u] + deg[v];
            }
            if (10 * weight < live_edges)
                throw contract_error("det_mm: rounded matching weight below a tenth of the live edges");
            is.matched_weight = weight;

            int64_t removed_edges = 0;
            for (EdgeId e : matching) {
                auto [u, v] = g.edges[e];
                commit_edge_at(e, iter, 1);
                edge_alive[e] = 0;
                --live_edges;
                ++removed_edges;
                for (NodeId x : {u, v}) {
                    for (EdgeId f : g.incident(x)) {
                        if (!edge_alive[f]) continue;
                        commit_edge_at(f, iter, 0);
                        edge_alive[f] = 0;
                        --live_edges;
                        ++removed_edges;
                        --deg[g.other_end(f, x)];
                    }
                    deg[x] = 0;
                }
            }
            is.edges_removed = removed_edges;
            if (removed_edges < (is.edges_before + 39) / 40)
                throw contract_error("det_mm: iteration removed fewer than a fortieth of the live edges");
            stats_.push_back(is);
        }
    }

  private:
    Rounder rounder_;
};

}  // namespace

std::unique_ptr<Algorithm> det_maximal_matching(Rounder rounder) {
    return std::make_unique<DetMaximalMatching>(std::move(rounder));
}

}  // namespace locavg
