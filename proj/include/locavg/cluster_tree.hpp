#pragma once

#include <memory>
#include <optional>
#include <string>

#include "locavg/graph.hpp"
#include "locavg/view.hpp"

namespace locavg {

// Skeleton of the recursive cluster-tree construction. Nodes are numbered in
// construction order (root = 0, its first child = 1). Directed edges carry a
// label coeff * beta^exp with coeff in {1, 2}; self edges model intra-cluster
// degrees.
struct SkeletonNode {
    int id = 0;
    bool internal = false;
    int parent = -1;    // -1 for the root
    int psi = -1;       // self-loop exponent; -1 for the root (no self edge)
    int depth = 0;
};

struct SkeletonEdge {
    int from = 0;
    int to = 0;
    int coeff = 1;      // 1 or 2
    int exp = 0;        // label is coeff * beta^exp
};

struct ClusterTreeSkeleton {
    int k = 0;
    int64_t beta = 0;
    std::vector<SkeletonNode> nodes;
    std::vector<SkeletonEdge> edges;

    int64_t label_value(const SkeletonEdge& e) const;

    // Directed lookup; nullopt when the skeleton has no (from, to) edge.
    std::optional<SkeletonEdge> edge_between(int from, int to) const;

    std::vector<int> children(int v) const;

    // Prescribed cluster size 2 beta^(k+1) (beta/2)^(k+1-depth).
    int64_t cluster_size(int v) const;

    int64_t total_nodes() const;
};

// beta must be even and >= 4; construction additionally requires
// 2 (k+1) / beta < 1/2 so the independence bounds hold.
ClusterTreeSkeleton build_skeleton(int k, int64_t beta);

// Per-edge label of a realized cluster graph as seen from each endpoint.
struct EdgeLabel {
    int16_t exp_lo = -1;   // exponent of the arc lower-endpoint -> higher-endpoint
    int16_t exp_hi = -1;   // exponent of the arc higher-endpoint -> lower-endpoint
    bool self = false;     // both endpoints in the same cluster
};

struct ClusterGraph {
    Graph graph;
    std::shared_ptr<const ClusterTreeSkeleton> skeleton;
    std::vector<int32_t> cluster_of;      // node -> skeleton id
    std::vector<EdgeLabel> edge_labels;   // by edge id
    int64_t lift_order = 1;

    // Label exponent of the arc from -> (other endpoint of e).
    int arc_exp(NodeId from, EdgeId e) const;

    bool edge_self(EdgeId e) const { return edge_labels[e].self; }

    std::vector<std::vector<NodeId>> cluster_members() const;
};

// Deterministic base realization: root cluster independent, other clusters
// split into beta^psi cliques with a pairing of clique halves, parent/child
// clusters joined by complete bipartite blocks on aligned groups.
ClusterGraph build_base_graph(const ClusterTreeSkeleton& skel);

// Order-q random lift: q copies per node, an independent uniform perfect
// matching between the fibers of every base edge. Labels and cluster
// assignment are inherited. Reproducible bit-for-bit per seed.
ClusterGraph random_lift(const ClusterGraph& base, int64_t q, uint64_t seed);

// Plain-graph lift utility (same matching scheme, no labels).
Graph lift_graph(const Graph& base, int64_t q, uint64_t seed);

struct FamilyViolation {
    std::string kind;      // "count" | "extra-edge" | "label" | "degree-profile"
    NodeId node = -1;
    int skel_from = -1;
    int skel_to = -1;
    int64_t expected = 0;
    int64_t actual = 0;
};

struct FamilyReport {
    std::vector<FamilyViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks membership in the graph family induced by the skeleton: exact
// neighbor counts per skeleton edge, no edges outside skeleton pairs, label
// consistency, and the outgoing-degree profile (internal clusters see every
// exponent 0..k, leaf clusters exactly one).
FamilyReport validate_family(const ClusterGraph& g);

// Labeled radius view (labels from the cluster graph).
ViewTree radius_view(const ClusterGraph& g, NodeId v, int k);

}  // namespace locavg
