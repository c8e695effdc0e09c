#pragma once

#include <optional>

#include "locavg/graph.hpp"

namespace locavg {

// Optional per-view-edge labeling (filled when the view is taken from a
// labeled cluster graph): label exponent as seen from each endpoint plus a
// same-cluster flag.
struct ViewEdgeLabel {
    int16_t exp_a = -1;   // exponent of the arc a -> b
    int16_t exp_b = -1;   // exponent of the arc b -> a
    bool self = false;
};

// The radius-k view of a node: all nodes at distance <= k, and all edges
// between them except edges joining two nodes both at distance exactly k.
struct ViewTree {
    NodeId root = -1;
    int radius = 0;
    std::vector<NodeId> vertices;                 // original ids, vertices[0] == root, BFS order
    std::vector<int> dist;                        // parallel to vertices
    std::vector<std::pair<int, int>> view_edges;  // indices into vertices, a < b
    std::vector<ViewEdgeLabel> labels;            // empty, or parallel to view_edges

    bool is_tree() const {
        return view_edges.size() + 1 == vertices.size();
    }
};

ViewTree radius_view(const Graph& g, NodeId v, int k);

// True when the radius-k view contains no cycle.
bool is_tree_like(const Graph& g, NodeId v, int k);

// Length of the shortest cycle through v if it is <= ell, otherwise nullopt.
std::optional<int> node_in_short_cycle(const Graph& g, NodeId v, int ell);

// Fraction of nodes lying on a cycle of length <= ell.
double cycle_fraction(const Graph& g, int ell);

// Order-independent digest of a rooted view. Node identities do not enter the
// digest; edge labels do when present. Isomorphic labeled rooted views always
// collide; the digest is additionally collision-free across tree views of
// bounded depth up to 64-bit mixing.
uint64_t canonical_view_hash(const ViewTree& view);

}  // namespace locavg
