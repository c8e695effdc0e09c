#include "locavg/engine.hpp"

#include <algorithm>

namespace locavg {

class Engine {
  public:
    Engine(Algorithm& alg, const Graph& g, uint64_t seed) : alg_(alg), g_(g) {
        trace_.problem_kind = alg.kind();
        trace_.seed = seed;
        trace_.node_commit_round.assign(g.n, -1);
        trace_.node_output.assign(g.n, 0);
        trace_.edge_commit_round.assign(g.m(), -1);
        trace_.edge_output.assign(g.m(), 0);

        // reverse port of every directed arc, so a message sent on port i of v
        // lands on the port that points back at v
        rev_port_.resize(g.adj.size());
        for (NodeId v = 0; v < g.n; ++v) {
            for (int64_t a = g.off[v]; a < g.off[v + 1]; ++a) {
                NodeId u = g.adj[a];
                auto nb = g.neighbors(u);
                auto it = std::lower_bound(nb.begin(), nb.end(), v);
                rev_port_[a] = static_cast<int>(it - nb.begin());
            }
        }
        inbox_cur_.resize(g.n);
        inbox_next_.resize(g.n);
    }

    ExecutionTrace run(uint64_t seed, int max_rounds, std::span<const NodeId> node_order) {
        std::vector<NodeId> order;
        if (node_order.empty()) {
            order.resize(g_.n);
            for (NodeId v = 0; v < g_.n; ++v) order[v] = v;
        } else {
            order.assign(node_order.begin(), node_order.end());
            std::vector<char> seen(g_.n, 0);
            if (static_cast<NodeId>(order.size()) != g_.n)
                throw input_error("node_order is not a permutation");
            for (NodeId v : order) {
                if (v < 0 || v >= g_.n || seen[v]) throw input_error("node_order is not a permutation");
                seen[v] = 1;
            }
        }

        alg_.plan(g_, seed);
        programs_.clear();
        programs_.reserve(g_.n);
        int maxdeg = g_.max_degree();
        for (NodeId v = 0; v < g_.n; ++v) {
            programs_.push_back(alg_.make_program(v));
            NodeInit ctx;
            ctx.node = v;
            ctx.degree = g_.degree(v);
            ctx.neighbors = g_.neighbors(v);
            ctx.incident_edges = g_.incident(v);
            ctx.stream_seed = node_stream_seed(seed, v);
            ctx.n = g_.n;
            ctx.m = g_.m();
            ctx.max_degree = maxdeg;
            programs_.back()->init(ctx);
        }

        pending_ = required_count();
        for (int r = 0;; ++r) {
            if (r > max_rounds) {
                trace_.timed_out = true;
                trace_.rounds_elapsed = max_rounds;
                break;
            }
            round_ = r;
            StepIo io;
            io.eng_ = this;
            for (NodeId v : order) {
                io.node_ = v;
                auto& in = inbox_cur_[v];
                std::stable_sort(in.begin(), in.end(),
                                 [](const PortMessage& a, const PortMessage& b) { return a.port < b.port; });
                programs_[v]->step(r, in, io);
            }
            for (NodeId v = 0; v < g_.n; ++v) inbox_cur_[v].clear();
            std::swap(inbox_cur_, inbox_next_);
            cur_msgs_ = next_msgs_;
            next_msgs_ = 0;
            if (pending_ == 0) {
                trace_.rounds_elapsed = r;
                break;
            }
            // fast-forward over rounds in which no program can act
            if (cur_msgs_ == 0) {
                int64_t nxt = INT32_MAX;
                for (NodeId v = 0; v < g_.n; ++v)
                    nxt = std::min<int64_t>(nxt, programs_[v]->next_action_round(r));
                if (nxt >= INT32_MAX || nxt > max_rounds) {
                    trace_.timed_out = true;
                    trace_.rounds_elapsed = max_rounds;
                    break;
                }
                if (nxt > r + 1) r = static_cast<int>(nxt) - 1;
            }
        }
        return std::move(trace_);
    }

  private:
    friend class StepIo;

    int64_t required_count() const {
        return trace_.problem_kind == ProblemKind::node_labeled ? g_.n : g_.m();
    }

    void send(NodeId from, int port, const Message& msg) {
        if (port < 0 || port >= g_.degree(from)) throw contract_error("send: port out of range");
        int64_t arc = g_.off[from] + port;
        inbox_next_[g_.adj[arc]].push_back({rev_port_[arc], msg});
        ++next_msgs_;
    }

    void commit_node(NodeId v, int64_t value) {
        int& cr = trace_.node_commit_round[v];
        if (cr >= 0) {
            if (trace_.node_output[v] != value)
                throw contract_error("node " + std::to_string(v) + " re-committed with a different value");
            return;
        }
        cr = round_;
        trace_.node_output[v] = value;
        if (trace_.problem_kind == ProblemKind::node_labeled) --pending_;
    }

    void commit_edge(NodeId from, int port, int64_t value) {
        if (port < 0 || port >= g_.degree(from)) throw contract_error("commit_edge: port out of range");
        EdgeId e = g_.adj_edge[g_.off[from] + port];
        int& cr = trace_.edge_commit_round[e];
        if (cr >= 0) {
            if (trace_.edge_output[e] != value)
                throw contract_error("edge " + std::to_string(e) + " re-committed with a different value");
            return;
        }
        cr = round_;
        trace_.edge_output[e] = value;
        if (trace_.problem_kind != ProblemKind::node_labeled) --pending_;
    }

    Algorithm& alg_;
    const Graph& g_;
    ExecutionTrace trace_;
    std::vector<int> rev_port_;
    std::vector<std::unique_ptr<NodeProgram>> programs_;
    std::vector<std::vector<PortMessage>> inbox_cur_, inbox_next_;
    int round_ = 0;
    int64_t pending_ = 0;
    int64_t cur_msgs_ = 0;
    int64_t next_msgs_ = 0;
};

void StepIo::send(int port, const Message& msg) { eng_->send(node_, port, msg); }
void StepIo::commit_node(int64_t value) { eng_->commit_node(node_, value); }
void StepIo::commit_edge(int port, int64_t value) { eng_->commit_edge(node_, port, value); }

bool ExecutionTrace::complete() const {
    if (problem_kind == ProblemKind::node_labeled) {
        for (int c : node_commit_round)
            if (c < 0) return false;
        return true;
    }
    for (int c : edge_commit_round)
        if (c < 0) return false;
    return true;
}

ExecutionTrace run(Algorithm& alg, const Graph& g, uint64_t seed, int max_rounds,
                   std::span<const NodeId> node_order) {
    if (max_rounds < 0) throw input_error("max_rounds must be nonnegative");
    Engine eng(alg, g, seed);
    return eng.run(seed, max_rounds, node_order);
}

CompletionTimes completion_times(const ExecutionTrace& trace, const Graph& g) {
    if (static_cast<NodeId>(trace.node_commit_round.size()) != g.n ||
        static_cast<EdgeId>(trace.edge_commit_round.size()) != g.m())
        throw input_error("completion_times: trace does not match graph");
    bool node_problem = trace.problem_kind == ProblemKind::node_labeled;
    // a required entity that never committed counts as busy through the whole
    // run; commits of the other entity type participate only if present
    auto node_commit = [&](NodeId v) -> int {
        int c = trace.node_commit_round[v];
        if (c < 0) return node_problem ? trace.rounds_elapsed : -1;
        return c;
    };
    auto edge_commit = [&](EdgeId e) -> int {
        int c = trace.edge_commit_round[e];
        if (c < 0) return node_problem ? -1 : trace.rounds_elapsed;
        return c;
    };
    CompletionTimes ct;
    ct.t_node.assign(g.n, 0);
    ct.t_edge.assign(g.m(), 0);
    for (NodeId v = 0; v < g.n; ++v) {
        int t = std::max(0, node_commit(v));
        for (EdgeId e : g.incident(v)) t = std::max(t, edge_commit(e));
        ct.t_node[v] = t;
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        int t = std::max({0, edge_commit(e), node_commit(u), node_commit(v)});
        ct.t_edge[e] = t;
    }
    return ct;
}

}  // namespace locavg
