#include "locavg/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

namespace locavg {

void write_graph(std::ostream& out, const Graph& g) {
    out << "graph v1\n";
    out << "nodes " << g.n << "\n";
    out << "edges " << g.m() << "\n";
    for (auto [u, v] : g.edges) out << "e " << u << " " << v << "\n";
}

void write_graph(std::ostream& out, const ClusterGraph& g) {
    out << "graph v1\n";
    out << "nodes " << g.graph.n << "\n";
    out << "edges " << g.graph.m() << "\n";
    for (EdgeId e = 0; e < g.graph.m(); ++e) {
        auto [u, v] = g.graph.edges[e];
        const EdgeLabel& l = g.edge_labels[e];
        out << "e " << u << " " << v << " " << l.exp_lo << " " << l.exp_hi << " "
            << (l.self ? 1 : 0) << "\n";
    }
    for (NodeId v = 0; v < g.graph.n; ++v) out << "cluster " << v << " " << g.cluster_of[v] << "\n";
    const ClusterTreeSkeleton& s = *g.skeleton;
    out << "skeleton begin\n";
    out << "k " << s.k << "\n";
    out << "beta " << s.beta << "\n";
    for (const SkeletonNode& nd : s.nodes)
        out << "snode " << nd.id << " " << (nd.internal ? 1 : 0) << " " << nd.parent << " "
            << nd.psi << " " << nd.depth << "\n";
    for (const SkeletonEdge& se : s.edges)
        out << "sedge " << se.from << " " << se.to << " " << se.coeff << " " << se.exp << "\n";
    out << "skeleton end\n";
    out << "lift " << g.lift_order << "\n";
}

namespace {

struct RawEdge {
    NodeId u, v;
    EdgeLabel label;
};

[[noreturn]] void bad(int lineno, const std::string& what) {
    throw input_error("graph file line " + std::to_string(lineno) + ": " + what);
}

}  // namespace

LoadedGraph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::istringstream& ls) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            ls.clear();
            ls.str(line);
            return true;
        }
        return false;
    };

    std::istringstream ls;
    if (!next_line(ls)) throw input_error("empty graph file");
    std::string word, version;
    ls >> word >> version;
    if (word != "graph" || version != "v1") bad(lineno, "expected 'graph v1' header");

    NodeId n = -1;
    int64_t m = -1;
    std::vector<RawEdge> raw;
    bool any_label = false, any_plain = false;
    std::vector<int32_t> cluster_of;
    int64_t cluster_lines = 0;
    bool have_skeleton = false;
    ClusterTreeSkeleton skel;
    bool have_k = false, have_beta = false;
    int64_t lift_order = 1;

    while (next_line(ls)) {
        ls >> word;
        if (word == "nodes") {
            if (!(ls >> n) || n < 0) bad(lineno, "bad node count");
            cluster_of.assign(n, -1);
        } else if (word == "edges") {
            if (!(ls >> m) || m < 0) bad(lineno, "bad edge count");
        } else if (word == "e") {
            RawEdge r;
            if (!(ls >> r.u >> r.v)) bad(lineno, "bad edge endpoints");
            int lo, hi, self;
            if (ls >> lo >> hi >> self) {
                if (self != 0 && self != 1) bad(lineno, "self flag must be 0 or 1");
                r.label = {static_cast<int16_t>(lo), static_cast<int16_t>(hi), self == 1};
                any_label = true;
            } else {
                r.label = {};
                any_plain = true;
            }
            raw.push_back(r);
        } else if (word == "cluster") {
            NodeId v;
            int32_t c;
            if (!(ls >> v >> c)) bad(lineno, "bad cluster line");
            if (n < 0 || v < 0 || v >= n) bad(lineno, "cluster node out of range");
            if (cluster_of[v] >= 0) bad(lineno, "duplicate cluster assignment");
            cluster_of[v] = c;
            ++cluster_lines;
        } else if (word == "skeleton") {
            std::string tag;
            ls >> tag;
            if (tag != "begin") bad(lineno, "expected 'skeleton begin'");
            if (have_skeleton) bad(lineno, "duplicate skeleton block");
            bool closed = false;
            while (next_line(ls)) {
                ls >> word;
                if (word == "skeleton") {
                    ls >> tag;
                    if (tag != "end") bad(lineno, "expected 'skeleton end'");
                    closed = true;
                    break;
                } else if (word == "k") {
                    if (!(ls >> skel.k)) bad(lineno, "bad skeleton depth");
                    have_k = true;
                } else if (word == "beta") {
                    if (!(ls >> skel.beta)) bad(lineno, "bad skeleton beta");
                    have_beta = true;
                } else if (word == "snode") {
                    SkeletonNode nd;
                    int internal;
                    if (!(ls >> nd.id >> internal >> nd.parent >> nd.psi >> nd.depth))
                        bad(lineno, "bad snode line");
                    nd.internal = internal == 1;
                    skel.nodes.push_back(nd);
                } else if (word == "sedge") {
                    SkeletonEdge se;
                    if (!(ls >> se.from >> se.to >> se.coeff >> se.exp)) bad(lineno, "bad sedge line");
                    skel.edges.push_back(se);
                } else {
                    bad(lineno, "unknown skeleton line '" + word + "'");
                }
            }
            if (!closed) throw input_error("unterminated skeleton block");
            if (!have_k || !have_beta) throw input_error("skeleton block missing k or beta");
            have_skeleton = true;
        } else if (word == "lift") {
            if (!(ls >> lift_order) || lift_order < 1) bad(lineno, "bad lift order");
        } else {
            bad(lineno, "unknown directive '" + word + "'");
        }
    }

    if (n < 0) throw input_error("graph file missing 'nodes' line");
    if (m < 0) throw input_error("graph file missing 'edges' line");
    if (static_cast<int64_t>(raw.size()) != m)
        throw input_error("edge count mismatch: header says " + std::to_string(m) + ", found " +
                          std::to_string(raw.size()));
    if (any_label && any_plain) throw input_error("mixed labeled and unlabeled edge lines");

    const bool clustered = any_label || cluster_lines > 0 || have_skeleton;
    if (clustered) {
        if (!any_label && m > 0) throw input_error("cluster data requires labeled edges");
        if (cluster_lines != n) throw input_error("cluster data must cover every node");
        if (!have_skeleton) throw input_error("cluster data requires a skeleton block");
    }

    std::vector<std::pair<NodeId, NodeId>> edge_list;
    edge_list.reserve(raw.size());
    for (const RawEdge& r : raw) edge_list.emplace_back(r.u, r.v);
    Graph g = Graph::from_edges(n, std::move(edge_list));

    LoadedGraph out;
    if (!clustered) {
        out.graph = std::move(g);
        return out;
    }

    ClusterGraph cg;
    cg.graph = std::move(g);
    cg.skeleton = std::make_shared<ClusterTreeSkeleton>(std::move(skel));
    cg.cluster_of = std::move(cluster_of);
    cg.lift_order = lift_order;
    cg.edge_labels.assign(cg.graph.m(), {});
    for (const RawEdge& r : raw) {
        EdgeId e = cg.graph.edge_id(r.u, r.v);
        // from_edges may have swapped the endpoints into u < v order; the
        // lo/hi label sides are tied to the sorted order, so swap with them
        EdgeLabel l = r.label;
        if (r.u > r.v) std::swap(l.exp_lo, l.exp_hi);
        cg.edge_labels[e] = l;
    }
    for (NodeId v = 0; v < cg.graph.n; ++v) {
        if (cg.cluster_of[v] < 0 ||
            cg.cluster_of[v] >= static_cast<int32_t>(cg.skeleton->nodes.size()))
            throw input_error("cluster id out of skeleton range");
    }
    out.cluster = std::move(cg);
    return out;
}

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file '" + path + "'");
    return read_graph(in);
}

void save_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write graph file '" + path + "'");
    write_graph(out, g);
}

void save_graph_file(const std::string& path, const ClusterGraph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write graph file '" + path + "'");
    write_graph(out, g);
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> row;
        size_t start = 0;
        for (;;) {
            size_t comma = line.find(',', start);
            if (comma == std::string::npos) {
                row.push_back(line.substr(start));
                break;
            }
            row.push_back(line.substr(start, comma - start));
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace locavg
