#pragma once

#include <vector>

#include "locavg/graph.hpp"

namespace locavg::detail {

struct GreedyMisSchedule {
    std::vector<int> decide_round;   // per node, -1 where inactive
    std::vector<char> in_mis;
    std::vector<NodeId> dominator;   // set neighbor that settled an out-node, -1 otherwise
    int rounds = 0;                  // reduction rounds + sweep rounds
};

// Deterministic MIS of the subgraph induced by `active`: iterated polynomial
// color reduction from ids down to a fixed palette, then greedy sweeps over
// the color classes in ascending order. Nodes out of the set decide in the
// round their first set neighbor joined.
GreedyMisSchedule linial_greedy_schedule(const Graph& g, const std::vector<char>& active);

}  // namespace locavg::detail
