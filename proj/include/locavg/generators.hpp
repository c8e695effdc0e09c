#pragma once

#include "locavg/graph.hpp"

namespace locavg {

Graph path_graph(NodeId n);
Graph cycle_graph(NodeId n);
Graph complete_graph(NodeId n);
Graph complete_bipartite(NodeId a, NodeId b);
Graph star_graph(NodeId leaves);

// C_len x K_2, 3-regular, girth 4 (for len >= 5)
Graph prism_graph(NodeId len);

// Erdos-Renyi G(n, p), sampled with geometric skips; deterministic per seed.
Graph gnp_graph(NodeId n, double p, uint64_t seed);

// Random d-regular simple graph via the pairing model with full retries.
Graph random_regular_graph(NodeId n, int d, uint64_t seed);

}  // namespace locavg
