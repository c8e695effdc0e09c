#include <algorithm>

#include "coloring.hpp"
#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg {

int det_ruling_iterations(RulingMode mode, NodeId n, int max_degree) {
    if (mode == RulingMode::log_delta) return log2_ceil(static_cast<uint64_t>(std::max(max_degree, 1)));
    return 2 * log2_ceil(static_cast<uint64_t>(log2_ceil(static_cast<uint64_t>(std::max<NodeId>(n, 2)))));
}

namespace {

// 3-colors the rooted pseudo-forest given by parent[] (-1 at roots, every
// root has at least one child). Bit-trick color reduction to 6 colors, then
// shift-down plus one class elimination per color 5, 4, 3.
std::vector<int64_t> forest_three_coloring(const std::vector<NodeId>& nodes,
                                           const std::vector<NodeId>& parent,
                                           const std::vector<std::vector<NodeId>>& kids) {
    std::vector<int64_t> col(parent.size(), 0);
    for (NodeId v : nodes) col[v] = v;

    auto parent_color = [&](NodeId v) -> int64_t {
        if (parent[v] >= 0) return col[parent[v]];
        return col[v] == 0 ? 1 : 0;  // root pretends a differing parent
    };

    int64_t maxc = 1;
    for (NodeId v : nodes) maxc = std::max(maxc, col[v]);
    std::vector<int64_t> nc(parent.size(), 0);
    int guard = 0;
    while (maxc > 5) {
        if (++guard > 80) throw contract_error("forest coloring did not converge");
        for (NodeId v : nodes) {
            int64_t cv = col[v], cp = parent_color(v);
            int b = 0;
            while (((cv >> b) & 1) == ((cp >> b) & 1)) ++b;
            nc[v] = 2 * b + ((cv >> b) & 1);
        }
        maxc = 1;
        for (NodeId v : nodes) {
            col[v] = nc[v];
            maxc = std::max(maxc, col[v]);
        }
    }

    for (int kill = 5; kill >= 3; --kill) {
        // shift down: nodes adopt the parent color, roots pick a fresh one
        for (NodeId v : nodes)
            nc[v] = parent[v] >= 0 ? col[parent[v]]
                                   : (col[v] == 0 ? 1 : 0);
        for (NodeId v : nodes) col[v] = nc[v];
        // recolor class `kill` from {0,1,2}: parent color plus the shared
        // child color leave a free slot
        for (NodeId v : nodes) {
            if (col[v] != kill) continue;
            int64_t pc = parent[v] >= 0 ? col[parent[v]] : -1;
            int64_t cc = kids[v].empty() ? -1 : col[kids[v][0]];
            for (int64_t c = 0; c < 3; ++c) {
                if (c != pc && c != cc) {
                    col[v] = c;
                    break;
                }
            }
        }
    }
    return col;
}

class DetRulingSet : public detail::ScheduledAlgorithm {
  public:
    explicit DetRulingSet(RulingMode mode)
        : ScheduledAlgorithm(mode == RulingMode::log_delta ? "det_ruling_logdelta"
                                                           : "det_ruling_loglogn",
                             ProblemKind::node_labeled),
          mode_(mode) {}

  protected:
    void build_schedule(const Graph& g, uint64_t) override {
        const NodeId n = g.n;
        const int budget = det_ruling_iterations(mode_, n, g.n ? g.max_degree() : 0);

        std::vector<char> active(n, 1);
        std::vector<NodeId> ptr(n, -1);     // min-id active neighbor
        std::vector<NodeId> parent(n, -1);
        std::vector<std::vector<NodeId>> kids(n);
        int64_t active_count = n;

        int iters_run = 0;
        for (int it = 0; it < budget; ++it) {
            IterationStats is;
            is.iteration = it;
            is.nodes_before = active_count;

            std::vector<NodeId> forest;
            for (NodeId v = 0; v < n; ++v) {
                ptr[v] = -1;
                if (!active[v]) continue;
                for (NodeId u : g.neighbors(v)) {
                    if (active[u]) {
                        ptr[v] = u;  // adjacency is sorted, first hit is minimal
                        break;
                    }
                }
                if (ptr[v] >= 0) forest.push_back(v);
            }
            if (forest.empty()) break;  // only isolated survivors remain
            ++iters_run;

            // pointer cycles are exactly mutual pairs; the smaller id roots
            for (NodeId v : forest) {
                kids[v].clear();
                parent[v] = (ptr[ptr[v]] == v && v < ptr[v]) ? -1 : ptr[v];
            }
            for (NodeId v : forest)
                if (parent[v] >= 0) kids[parent[v]].push_back(v);

            std::vector<int64_t> col = forest_three_coloring(forest, parent, kids);

            // greedy MIS over the forest by color class
            std::vector<char> in_mis(n, 0), settled(n, 0);
            auto forest_neighbors = [&](NodeId v, auto&& f) {
                if (parent[v] >= 0) f(parent[v]);
                for (NodeId u : kids[v]) f(u);
            };
            for (int64_t c = 0; c < 3; ++c) {
                for (NodeId v : forest) {
                    if (col[v] != c || settled[v]) continue;
                    in_mis[v] = 1;
                    settled[v] = 1;
                    forest_neighbors(v, [&](NodeId u) { settled[u] = 1; });
                }
            }

            // the smaller of the set and its complement keeps going; both
            // dominate the forest at radius one
            int64_t mis_size = 0;
            for (NodeId v : forest) mis_size += in_mis[v];
            bool keep_mis = 2 * mis_size <= static_cast<int64_t>(forest.size());

            int64_t dropped = 0;
            for (NodeId v : forest) {
                if (in_mis[v] == (keep_mis ? 1 : 0)) continue;  // v stays active
                NodeId via = -1;
                forest_neighbors(v, [&](NodeId u) {
                    if (in_mis[u] == (keep_mis ? 1 : 0) && (via < 0 || u < via)) via = u;
                });
                if (via < 0) throw contract_error("halving dropped a node with no kept neighbor");
                commit_node_at(v, it, via);
                active[v] = 0;
                ++dropped;
            }
            active_count -= dropped;
            is.nodes_removed = dropped;
            stats_.push_back(is);
        }

        // survivors run the deterministic coloring MIS among themselves
        detail::GreedyMisSchedule s = detail::linial_greedy_schedule(g, active);
        for (NodeId v = 0; v < n; ++v) {
            if (!active[v]) continue;
            if (s.in_mis[v])
                commit_node_at(v, iters_run + s.decide_round[v], -1);
            else
                commit_node_at(v, iters_run + s.decide_round[v], s.dominator[v]);
        }
    }

  private:
    RulingMode mode_;
};

}  // namespace

std::unique_ptr<Algorithm> det_ruling_set(RulingMode mode) {
    return std::make_unique<DetRulingSet>(mode);
}

}  // namespace locavg
