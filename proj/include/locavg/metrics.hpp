#pragma once

#include <boost/rational.hpp>

#include "locavg/engine.hpp"

namespace locavg {

using Rat = boost::rational<long long>;

struct TrialRow {
    uint64_t seed = 0;
    Rat avg_v;          // (sum_v T_v) / n for this trial
    Rat avg_e;          // (sum_e T_e) / m, 0 when m = 0
    int rounds = 0;
    bool timed_out = false;
};

// Exact rational summary of a set of traces of one algorithm on one graph.
struct ComplexityReport {
    int trials = 0;
    Rat avg_v;                 // mean over trials of per-trial avg_v
    Rat avg_e;
    Rat weighted_avg_v;        // with the weights passed in (uniform when none)
    std::vector<Rat> exp_node; // per node, mean commit-completion over trials
    Rat exp_v_max;             // max over nodes of exp_node
    int worst = 0;             // max rounds_elapsed over trials
    std::vector<TrialRow> rows;
};

ComplexityReport make_report(std::span<const ExecutionTrace> traces, const Graph& g,
                             const std::vector<Rat>* node_weights = nullptr);

// Incremental variant so traces can be discarded as they are produced.
class ReportBuilder {
  public:
    explicit ReportBuilder(const Graph& g, const std::vector<Rat>* node_weights = nullptr);
    void add(const ExecutionTrace& trace);
    ComplexityReport finish() const;

  private:
    const Graph& g_;
    const std::vector<Rat>* weights_;
    std::vector<long long> node_total_;
    long long sum_avg_v_num_ = 0;
    long long sum_avg_e_num_ = 0;
    int worst_ = 0;
    std::vector<TrialRow> rows_;
};

// Fixed-point decimal rendering (round half away from zero).
std::string format_rat_decimal(const Rat& r, int digits = 9);

}  // namespace locavg
