#pragma once

#include <span>

#include "locavg/graph.hpp"

namespace locavg {

struct IndependenceResult {
    bool exact = false;        // false when the node budget was exhausted
    int64_t alpha = 0;         // exact independence number when exact
    int64_t nodes_explored = 0;
};

// Exact independence number of the subgraph induced by `subset`, computed by
// branch and bound with a greedy clique-cover upper bound. `node_budget`
// limits search-tree nodes; on exhaustion the result carries exact = false.
IndependenceResult independence_number_exact(const Graph& g, std::span<const NodeId> subset,
                                             int64_t node_budget);

}  // namespace locavg
