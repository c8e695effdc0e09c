#include <algorithm>
#include <map>

#include "coloring.hpp"
#include "locavg/algorithms.hpp"
#include "scheduled.hpp"

namespace locavg::detail {

namespace {

bool is_prime(int64_t x) {
    if (x < 2) return false;
    for (int64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

int64_t next_prime(int64_t x) {
    while (!is_prime(x)) ++x;
    return x;
}

int64_t pow_clamped(int64_t b, int e, int64_t limit) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > limit / b) return limit;
        r *= b;
    }
    return r;
}

// smallest prime q and degree d with q^(d+1) >= palette and q >= maxdeg*d + 2,
// so that a degree-d polynomial disagreement point always exists
std::pair<int64_t, int> reduction_params(int64_t palette, int maxdeg) {
    for (int64_t q = next_prime(std::max<int64_t>(2 * maxdeg + 2, 3));; q = next_prime(q + 1)) {
        int d = 1;
        while (pow_clamped(q, d + 1, palette) < palette) ++d;
        if (q >= static_cast<int64_t>(maxdeg) * d + 2) return {q, d};
    }
}

}  // namespace

GreedyMisSchedule linial_greedy_schedule(const Graph& g, const std::vector<char>& active) {
    const NodeId n = g.n;
    GreedyMisSchedule out;
    out.decide_round.assign(n, -1);
    out.in_mis.assign(n, 0);
    out.dominator.assign(n, -1);

    std::vector<NodeId> nodes;
    for (NodeId v = 0; v < n; ++v)
        if (active[v]) nodes.push_back(v);
    if (nodes.empty()) return out;

    int maxdeg = 0;
    for (NodeId v : nodes) {
        int d = 0;
        for (NodeId u : g.neighbors(v)) d += active[u] ? 1 : 0;
        maxdeg = std::max(maxdeg, d);
    }
    if (maxdeg == 0) {
        for (NodeId v : nodes) {
            out.in_mis[v] = 1;
            out.decide_round[v] = 0;
        }
        out.rounds = 1;
        return out;
    }

    std::vector<int64_t> col(n, 0);
    for (NodeId v : nodes) col[v] = v;
    int64_t palette = n;

    int reduction_rounds = 0;
    std::vector<int64_t> digits, ndigits;
    std::vector<int64_t> ncol(n, 0);
    for (;;) {
        auto [q, d] = reduction_params(palette, maxdeg);
        if (q * q >= palette) break;
        // colors as degree-d polynomials over F_q; each node finds a point
        // where it disagrees with every active neighbor and takes (x, p(x))
        auto eval = [&](int64_t c, int64_t x) {
            digits.clear();
            int64_t t = c;
            for (int i = 0; i <= d; ++i) {
                digits.push_back(t % q);
                t /= q;
            }
            int64_t r = 0;
            for (int i = d; i >= 0; --i) r = (r * x + digits[i]) % q;
            return r;
        };
        for (NodeId v : nodes) {
            int64_t chosen = -1;
            for (int64_t x = 0; x < q && chosen < 0; ++x) {
                int64_t pv = eval(col[v], x);
                bool ok = true;
                for (NodeId u : g.neighbors(v)) {
                    if (!active[u]) continue;
                    if (eval(col[u], x) == pv) {
                        ok = false;
                        break;
                    }
                }
                if (ok) chosen = x * q + pv;
            }
            if (chosen < 0) throw contract_error("color reduction found no disagreement point");
            ncol[v] = chosen;
        }
        for (NodeId v : nodes) col[v] = ncol[v];
        palette = q * q;
        ++reduction_rounds;
    }

    // greedy sweeps, one nonempty color class per round in ascending order
    std::map<int64_t, std::vector<NodeId>> classes;
    for (NodeId v : nodes) classes[col[v]].push_back(v);
    int sweep = 0;
    for (auto& [c, members] : classes) {
        int round = reduction_rounds + sweep;
        for (NodeId v : members) {
            if (out.decide_round[v] >= 0) continue;  // already settled by a set neighbor
            out.in_mis[v] = 1;
            out.decide_round[v] = round;
            for (NodeId u : g.neighbors(v)) {
                if (!active[u] || out.decide_round[u] >= 0) continue;
                if (col[u] == c) throw contract_error("color reduction left an improper coloring");
                out.decide_round[u] = round;
                out.dominator[u] = v;
            }
        }
        ++sweep;
    }
    out.rounds = reduction_rounds + sweep;
    return out;
}

}  // namespace locavg::detail

namespace locavg {

namespace {

class LinialMis : public detail::ScheduledAlgorithm {
  public:
    LinialMis() : ScheduledAlgorithm("linial_mis", ProblemKind::node_labeled) {}

  protected:
    void build_schedule(const Graph& g, uint64_t) override {
        std::vector<char> active(g.n, 1);
        detail::GreedyMisSchedule s = detail::linial_greedy_schedule(g, active);
        for (NodeId v = 0; v < g.n; ++v)
            commit_node_at(v, s.decide_round[v], s.in_mis[v] ? 1 : 0);
    }
};

}  // namespace

std::unique_ptr<Algorithm> linial_greedy_mis() { return std::make_unique<LinialMis>(); }

}  // namespace locavg
