#pragma once

#include <functional>

#include <boost/rational.hpp>

#include "locavg/engine.hpp"

namespace locavg {

using Rat = boost::rational<long long>;

// Iterated randomized MIS: undecided nodes mark with probability 1/(2 deg) on
// the surviving graph, a marked node joins unless a marked neighbor has
// higher (degree, id) priority; joiners and their neighbors leave. Nodes with
// no surviving neighbor join outright. Node outputs: 1 in MIS, 0 out.
std::unique_ptr<Algorithm> luby_mis();

// Iterated randomized (2,2)-ruling set: marking probability 1/(deg+1) on the
// surviving graph, same priority rule; everything within distance 2 of a new
// set node is deleted. Node outputs: 1 in S, 0 dominated.
std::unique_ptr<Algorithm> ruling_set_22();

enum class RulingMode {
    log_delta,    // ceil(log2 max-degree) halving iterations -> (2, O(log Delta))
    log_log_n,    // 2 ceil(log2 ceil(log2 n)) halving iterations -> (2, O(log log n))
};

// Deterministic ruling set via dominating-set halving: active nodes point at
// their minimum-id active neighbor, a 3-coloring of the resulting
// pseudo-forest yields an MIS, and the smaller of (MIS, complement) becomes
// the dominating set the others commit a pointer into. Survivors after the
// iteration budget run the deterministic coloring MIS. Output: -1 in S, else
// the id of the neighbor the node was dominated through.
std::unique_ptr<Algorithm> det_ruling_set(RulingMode mode);

// Iteration budget used by det_ruling_set and its validator.
int det_ruling_iterations(RulingMode mode, NodeId n, int max_degree);

// Iterated randomized maximal matching; edge {u,v} is marked with probability
// 1/(4(d_u+d_v)) drawn by the smaller-id endpoint, isolated marks join.
// Edge outputs: 1 matched, 0 removed.
std::unique_ptr<Algorithm> rand_maximal_matching();

Rat rand_mm_mark_prob(int du, int dv);

// Rounder contract: given the surviving subgraph (edge_alive, degrees on the
// surviving graph), return a matching whose weight sum of (d_u + d_v) is at
// least |E_alive| / 10.
using Rounder = std::function<std::vector<EdgeId>(const Graph& g, const std::vector<char>& edge_alive,
                                                  const std::vector<int>& degree)>;

// Iterated fractional-matching rounding; the default rounder picks surviving
// edges greedily by weight d_u + d_v (ties by edge id). Each iteration must
// remove at least |E|/40 edges. Edge outputs: 1 matched, 0 removed.
std::unique_ptr<Algorithm> det_maximal_matching(Rounder rounder = nullptr);

// Sinkless orientation, r >= 3. Short cycles (length <= 6r) orient phase one;
// leftover nodes pick 3 edges, single picks become guaranteed out-arcs, and
// the rest is clustered around them, contracted, and recursed with round
// costs scaled by 4r+4 per level; after ceil(log2 log2 n) levels a
// per-component finisher charges its diameter. Edge outputs: head node id.
// Requires min degree >= 3.
std::unique_ptr<Algorithm> sinkless_orientation(int r);

// Deterministic coloring MIS utility: iterated polynomial color reduction to
// O(max-degree^2) colors, then greedy sweeps color class by color class.
std::unique_ptr<Algorithm> linial_greedy_mis();

// ---- problem validators ------------------------------------------------

bool is_independent_set(const Graph& g, const std::vector<char>& in_set);
bool is_maximal_independent_set(const Graph& g, const std::vector<char>& in_set);

struct RulingCheck {
    bool independent = false;
    int domination_radius = -1;   // max distance from any node to the set; -1 if a node is unreachable
};
RulingCheck check_ruling_set(const Graph& g, const std::vector<char>& in_set);

bool is_matching(const Graph& g, const std::vector<char>& in_matching);
bool is_maximal_matching(const Graph& g, const std::vector<char>& in_matching);

// Every node must have at least one outgoing edge; edge_head[e] names the
// node the edge points at.
bool is_sinkless_orientation(const Graph& g, const std::vector<int64_t>& edge_head);

// Validates a finished trace against the algorithm's problem type.
bool validate_trace(const std::string& algorithm, const Graph& g, const ExecutionTrace& trace);

// ---- averaged-case structure predicates ---------------------------------

// Nodes whose inclusive distance-2 ball carries total ruling-set marking
// probability at least 1/2 (exact rational arithmetic).
int64_t count_good_nodes_ruling(const Graph& g);

// Matching-good nodes: at least d_v/3 neighbors of degree <= d_v. An edge is
// good when either endpoint is.
bool is_good_node_matching(const Graph& g, NodeId v);
int64_t count_good_edges_matching(const Graph& g);

}  // namespace locavg
