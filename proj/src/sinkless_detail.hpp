#pragma once

#include <memory>

#include "locavg/algorithms.hpp"

namespace locavg::detail {

// Test hook: sinkless orientation with the phase-one cycle length cap chosen
// independently of r. The production factory uses cap = 6r; a small cap
// starves phase one and forces the pick/cession/cluster machinery to run.
std::unique_ptr<Algorithm> sinkless_orientation_with_cap(int r, int max_cycle_len);

}  // namespace locavg::detail
