#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "locavg/cluster_tree.hpp"

namespace locavg {

// Plain-text graph container. Layout:
//   graph v1
//   nodes <n>
//   edges <m>
//   e <u> <v> [<exp-lo> <exp-hi> <self 0|1>]     (one line per edge, u < v, sorted)
//   cluster <node> <skeleton-id>                 (optional, one per node)
//   skeleton begin / k,beta,snode,sedge lines / skeleton end   (optional)
//   lift <order>                                 (optional)
struct LoadedGraph {
    Graph graph;
    std::optional<ClusterGraph> cluster;   // present when the file carries cluster data

    const Graph& plain() const { return cluster ? cluster->graph : graph; }
};

void write_graph(std::ostream& out, const Graph& g);
void write_graph(std::ostream& out, const ClusterGraph& g);

LoadedGraph read_graph(std::istream& in);

LoadedGraph load_graph_file(const std::string& path);
void save_graph_file(const std::string& path, const Graph& g);
void save_graph_file(const std::string& path, const ClusterGraph& g);

// CSV quoting is unnecessary for our fields; values are written verbatim and
// parsed by splitting on commas.
std::vector<std::vector<std::string>> read_csv(std::istream& in);

}  // namespace locavg
