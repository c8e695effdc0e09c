#include "locavg/metrics.hpp"

#include <algorithm>

namespace locavg {

ReportBuilder::ReportBuilder(const Graph& g, const std::vector<Rat>* node_weights)
    : g_(g), weights_(node_weights), node_total_(g.n, 0) {
    if (weights_ && static_cast<NodeId>(weights_->size()) != g.n)
        throw input_error("report: weight vector size mismatch");
}

void ReportBuilder::add(const ExecutionTrace& tr) {
    const long long n = g_.n;
    const long long m = g_.m();
    if (static_cast<long long>(tr.node_commit_round.size()) != n)
        throw input_error("report: trace does not match graph");
    // integer accumulation first, rationals only at the end; keeps the
    // intermediate products small enough for long long
    CompletionTimes ct = completion_times(tr, g_);
    long long sv = 0, se = 0;
    for (long long v = 0; v < n; ++v) {
        sv += ct.t_node[v];
        node_total_[v] += ct.t_node[v];
    }
    for (long long e = 0; e < m; ++e) se += ct.t_edge[e];
    sum_avg_v_num_ += sv;
    sum_avg_e_num_ += se;
    TrialRow row;
    row.seed = tr.seed;
    row.avg_v = n ? Rat(sv, n) : Rat(0);
    row.avg_e = m ? Rat(se, m) : Rat(0);
    row.rounds = tr.rounds_elapsed;
    row.timed_out = tr.timed_out;
    rows_.push_back(row);
    worst_ = std::max(worst_, tr.rounds_elapsed);
}

ComplexityReport ReportBuilder::finish() const {
    const long long n = g_.n;
    const long long m = g_.m();
    const long long t = static_cast<long long>(rows_.size());
    if (t == 0) throw input_error("report: no traces");
    ComplexityReport rep;
    rep.trials = static_cast<int>(t);
    rep.rows = rows_;
    rep.worst = worst_;
    rep.avg_v = n ? Rat(sum_avg_v_num_, n * t) : Rat(0);
    rep.avg_e = m ? Rat(sum_avg_e_num_, m * t) : Rat(0);

    rep.exp_node.resize(n);
    rep.exp_v_max = Rat(0);
    for (long long v = 0; v < n; ++v) {
        rep.exp_node[v] = Rat(node_total_[v], t);
        rep.exp_v_max = std::max(rep.exp_v_max, rep.exp_node[v]);
    }

    if (weights_) {
        Rat wsum(0), acc(0);
        for (long long v = 0; v < n; ++v) {
            const Rat& w = (*weights_)[v];
            if (w < Rat(0)) throw input_error("report: negative node weight");
            wsum += w;
            acc += w * rep.exp_node[v];
        }
        if (wsum == Rat(0)) throw input_error("report: zero total weight");
        rep.weighted_avg_v = acc / wsum;
    } else {
        rep.weighted_avg_v = rep.avg_v;
    }
    return rep;
}

ComplexityReport make_report(std::span<const ExecutionTrace> traces, const Graph& g,
                             const std::vector<Rat>* node_weights) {
    ReportBuilder b(g, node_weights);
    for (const ExecutionTrace& tr : traces) b.add(tr);
    return b.finish();
}

std::string format_rat_decimal(const Rat& r, int digits) {
    if (digits < 0 || digits > 18) throw input_error("format_rat_decimal: bad digit count");
    using I = __int128;
    I num = r.numerator();
    I den = r.denominator();
    bool neg = num < 0;
    if (neg) num = -num;
    I scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    I val = num * scale;
    I q = val / den;
    I rem = val % den;
    if (2 * rem >= den) ++q;  // round half away from zero
    I ip = q / scale;
    I fp = q % scale;
    std::string out;
    if (neg && q != 0) out += '-';
    // int128 to string by hand
    std::string ips;
    if (ip == 0) ips = "0";
    while (ip > 0) {
        ips += static_cast<char>('0' + static_cast<int>(ip % 10));
        ip /= 10;
    }
    std::reverse(ips.begin(), ips.end());
    out += ips;
    if (digits > 0) {
        std::string fps(digits, '0');
        for (int i = digits - 1; i >= 0; --i) {
            fps[i] = static_cast<char>('0' + static_cast<int>(fp % 10));
            fp /= 10;
        }
        out += '.';
        out += fps;
    }
    return out;
}

}  // namespace locavg
