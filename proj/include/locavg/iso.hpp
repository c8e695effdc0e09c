#pragma once

#include <optional>
#include <unordered_map>
#include <utility>

#include "locavg/cluster_tree.hpp"

namespace locavg {

struct IsoMapping {
    NodeId v0 = -1;       // in the root cluster
    NodeId v1 = -1;       // in cluster 1
    int k = 0;
    std::unordered_map<NodeId, NodeId> phi;
};

// Bucket-walk isomorphism between the radius-k views of v0 (root cluster) and
// v1 (cluster 1). Preconditions: both views tree-like, v0/v1 in the right
// clusters. Neighbors are bucketed by the arc label exponent seen from the
// current node, self-labeled arcs first, then ascending node id. Equal-length
// buckets are zipped; a single off-by-one bucket pair per step is patched by
// mapping the two surplus tail nodes to each other. Any other mismatch throws
// contract_error.
IsoMapping find_isomorphism(const ClusterGraph& g, int k, NodeId v0, NodeId v1);

// Checks phi is a bijection between the two radius-k view vertex sets that
// preserves view adjacency in both directions.
bool verify_isomorphism(const ClusterGraph& g, int k, const IsoMapping& m);

// Seeded scan over (root cluster) x (cluster 1) in shuffled order for a pair
// of nodes whose radius-k views are both tree-like.
std::optional<std::pair<NodeId, NodeId>> find_treelike_pair(const ClusterGraph& g, int k,
                                                            uint64_t seed);

}  // namespace locavg
