#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "locavg/graph.hpp"

namespace locavg {

enum class ProblemKind {
    node_labeled,    // every node commits its own output
    edge_labeled,    // every edge commits an output (either endpoint may emit it)
    orientation,     // edge outputs are head node ids
};

struct Message {
    int32_t tag = 0;
    int64_t a = 0;
    int64_t b = 0;
    int64_t c = 0;
};

struct PortMessage {
    int port = 0;    // index into the receiving node's adjacency
    Message msg;
};

struct NodeInit {
    NodeId node = -1;
    int degree = 0;
    std::span<const NodeId> neighbors;      // sorted, port order
    std::span<const EdgeId> incident_edges; // parallel to neighbors
    uint64_t stream_seed = 0;               // per-node randomness
    NodeId n = 0;                           // global knowledge: size,
    EdgeId m = 0;                           // edge count,
    int max_degree = 0;                     // and max degree
};

class Engine;

// Per-step sink for one node: outgoing messages and commits. Commits are
// timestamped with the round of the step that produced them; a commit from
// step 0 precedes any message exchange.
class StepIo {
  public:
    void send(int port, const Message& msg);
    void commit_node(int64_t value);
    void commit_edge(int port, int64_t value);

  private:
    friend class Engine;
    Engine* eng_ = nullptr;
    NodeId node_ = -1;
};

// One instance per node. step() runs every round starting at round 0; the
// round-0 inbox is empty, and messages sent in round r arrive in round r + 1.
class NodeProgram {
  public:
    virtual ~NodeProgram() = default;
    virtual void init(const NodeInit& ctx) = 0;
    virtual void step(int round, std::span<const PortMessage> inbox, StepIo& io) = 0;

    // Earliest round after `round` at which this program might send or commit
    // on an empty inbox. The engine skips rounds nobody can act in, which
    // keeps runs with sparse commit schedules cheap; INT_MAX means inert.
    virtual int next_action_round(int round) const { return round + 1; }
};

struct IterationStats {
    int iteration = 0;
    int64_t nodes_before = 0;
    int64_t nodes_removed = 0;
    int64_t edges_before = 0;
    int64_t edges_removed = 0;
    int64_t matched_weight = 0;   // fractional-rounding algorithms only
};

class Algorithm {
  public:
    virtual ~Algorithm() = default;
    virtual std::string name() const = 0;
    virtual ProblemKind kind() const = 0;

    // Called once per run before any program is created. Algorithms whose
    // synchronous process is simulated globally build their commit schedule
    // here; per-node randomness must still come from node_stream_seed.
    virtual void plan(const Graph& g, uint64_t seed) { (void)g; (void)seed; }

    virtual std::unique_ptr<NodeProgram> make_program(NodeId v) = 0;

    // Per-iteration bookkeeping of the preceding run, when the algorithm
    // tracks it (matching/ruling iterations).
    virtual const std::vector<IterationStats>* last_iteration_stats() const { return nullptr; }
};

struct ExecutionTrace {
    ProblemKind problem_kind = ProblemKind::node_labeled;
    uint64_t seed = 0;
    int rounds_elapsed = 0;
    bool timed_out = false;
    std::vector<int> node_commit_round;     // -1 while uncommitted
    std::vector<int64_t> node_output;
    std::vector<int> edge_commit_round;
    std::vector<int64_t> edge_output;

    bool complete() const;
};

// Synchronous execution until every required entity committed or max_rounds
// steps ran. Node processing order inside a round is observationally
// irrelevant; `node_order` exists so tests can assert that.
ExecutionTrace run(Algorithm& alg, const Graph& g, uint64_t seed, int max_rounds,
                   std::span<const NodeId> node_order = {});

struct CompletionTimes {
    std::vector<int> t_node;
    std::vector<int> t_edge;
};

// Node completion waits for the node and all incident edges; edge completion
// waits for the edge and both endpoints. Entities without outputs contribute
// nothing: for node-labeled problems t_edge is the max over endpoint commits,
// for edge-labeled problems t_node is the max over incident edge commits.
CompletionTimes completion_times(const ExecutionTrace& trace, const Graph& g);

}  // namespace locavg
