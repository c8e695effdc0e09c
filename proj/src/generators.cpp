#include "locavg/generators.hpp"

#include <algorithm>
#include <cmath>

namespace locavg {

Graph path_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(e));
}

Graph cycle_graph(NodeId n) {
    if (n < 3) throw input_error("cycle needs >= 3 nodes");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, std::move(e));
}

Graph complete_graph(NodeId n) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(NodeId a, NodeId b) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId u = 0; u < a; ++u)
        for (NodeId v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, std::move(e));
}

Graph star_graph(NodeId leaves) {
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return Graph::from_edges(leaves + 1, std::move(e));
}

Graph prism_graph(NodeId len) {
    if (len < 3) throw input_error("prism needs cycle length >= 3");
    std::vector<std::pair<NodeId, NodeId>> e;
    for (NodeId v = 0; v < len; ++v) {
        e.emplace_back(v, (v + 1) % len);
        e.emplace_back(len + v, len + (v + 1) % len);
        e.emplace_back(v, len + v);
    }
    return Graph::from_edges(2 * len, std::move(e));
}

Graph gnp_graph(NodeId n, double p, uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw input_error("bad gnp parameters");
    std::vector<std::pair<NodeId, NodeId>> e;
    Rng rng(splitmix64(seed) ^ 0x67e9a1b2c3d4e5f6ULL);
    if (p >= 1.0) return complete_graph(n);
    if (p > 0.0) {
        // geometric skips within each row u < v
        double logq = std::log1p(-p);
        for (NodeId u = 0; u + 1 < n; ++u) {
            int64_t v = u;
            for (;;) {
                double skip = std::floor(std::log1p(-rng.unit()) / logq);
                v += 1 + static_cast<int64_t>(std::min(skip, 4.0e18));
                if (v >= n) break;
                e.emplace_back(u, static_cast<NodeId>(v));
            }
        }
    }
    return Graph::from_edges(n, std::move(e));
}

Graph random_regular_graph(NodeId n, int d, uint64_t seed) {
    if (n <= d || (static_cast<int64_t>(n) * d) % 2 != 0)
        throw input_error("regular graph needs n > d and n*d even");
    Rng rng(splitmix64(seed) ^ 0x7e97a1b2c3d4e5f6ULL);
    std::vector<NodeId> stubs(static_cast<size_t>(n) * d);
    for (NodeId v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;

    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (size_t i = stubs.size() - 1; i > 0; --i) {
            size_t j = rng.below(i + 1);
            std::swap(stubs[i], stubs[j]);
        }
        std::vector<std::pair<NodeId, NodeId>> e;
        e.reserve(stubs.size() / 2);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            NodeId u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            e.emplace_back(u, v);
        }
        if (!ok) continue;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
        return Graph::from_edges(n, std::move(e));
    }
    throw contract_error("pairing model failed to produce a simple graph");
}

}  // namespace locavg
