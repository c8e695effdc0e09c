#pragma once

#include <algorithm>
#include <climits>

#include "locavg/engine.hpp"

namespace locavg::detail {

// Base for algorithms whose synchronous process is simulated by a global
// planner inside plan(); the per-node programs replay the resulting commit
// schedule. One planned iteration costs one engine round. Edge commits are
// announced by the smaller-id endpoint.
class ScheduledAlgorithm : public Algorithm {
  public:
    ScheduledAlgorithm(std::string name, ProblemKind kind)
        : name_(std::move(name)), kind_(kind) {}

    std::string name() const override { return name_; }
    ProblemKind kind() const override { return kind_; }

    void plan(const Graph& g, uint64_t seed) override {
        node_round_.assign(g.n, -1);
        node_value_.assign(g.n, 0);
        edge_round_.assign(g.m(), -1);
        edge_value_.assign(g.m(), 0);
        stats_.clear();
        build_schedule(g, seed);
    }

    std::unique_ptr<NodeProgram> make_program(NodeId v) override;

    const std::vector<IterationStats>* last_iteration_stats() const override {
        return stats_.empty() ? nullptr : &stats_;
    }

  protected:
    virtual void build_schedule(const Graph& g, uint64_t seed) = 0;

    void commit_node_at(NodeId v, int round, int64_t value) {
        node_round_[v] = round;
        node_value_[v] = value;
    }

    void commit_edge_at(EdgeId e, int round, int64_t value) {
        edge_round_[e] = round;
        edge_value_[e] = value;
    }

    std::vector<IterationStats> stats_;

  private:
    friend class ScheduledProgram;
    std::string name_;
    ProblemKind kind_;
    std::vector<int> node_round_;
    std::vector<int64_t> node_value_;
    std::vector<int> edge_round_;
    std::vector<int64_t> edge_value_;
};

class ScheduledProgram : public NodeProgram {
  public:
    ScheduledProgram(const ScheduledAlgorithm* owner, NodeId v) : owner_(owner), v_(v) {}

    void init(const NodeInit& ctx) override {
        due_.clear();
        cursor_ = 0;
        if (owner_->node_round_[v_] >= 0)
            due_.push_back({owner_->node_round_[v_], -1, owner_->node_value_[v_]});
        for (int p = 0; p < ctx.degree; ++p) {
            if (ctx.neighbors[p] < v_) continue;  // smaller endpoint announces
            EdgeId e = ctx.incident_edges[p];
            if (owner_->edge_round_[e] >= 0)
                due_.push_back({owner_->edge_round_[e], p, owner_->edge_value_[e]});
        }
        std::sort(due_.begin(), due_.end(),
                  [](const Due& a, const Due& b) { return a.round < b.round; });
    }

    void step(int round, std::span<const PortMessage>, StepIo& io) override {
        while (cursor_ < due_.size() && due_[cursor_].round <= round) {
            const Due& d = due_[cursor_++];
            if (d.port < 0)
                io.commit_node(d.value);
            else
                io.commit_edge(d.port, d.value);
        }
    }

    int next_action_round(int round) const override {
        size_t c = cursor_;
        while (c < due_.size() && due_[c].round <= round) ++c;
        return c < due_.size() ? due_[c].round : INT_MAX;
    }

  private:
    struct Due {
        int round;
        int port;  // -1 for the node's own commit
        int64_t value;
    };
    const ScheduledAlgorithm* owner_;
    NodeId v_;
    std::vector<Due> due_;
    size_t cursor_ = 0;
};

inline std::unique_ptr<NodeProgram> ScheduledAlgorithm::make_program(NodeId v) {
    return std::make_unique<ScheduledProgram>(this, v);
}

}  // namespace locavg::detail
