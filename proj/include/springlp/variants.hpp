#pragma once

#include <vector>

#include "springlp/graph.hpp"
#include "springlp/layout.hpp"
#include "springlp/sfdp.hpp"

namespace springlp {

/// Bi-SFDP: repulsion only between the two sides of a bipartite graph.
RepulsionMask bipartite_repulsion_mask(const Graph& g);

/// Where each node of a directed graph went in its split bipartite form.
/// Entries are kNoNode for split-nodes that were dropped (see `restricted`).
struct SplitNodeMap {
    std::vector<NodeId> out_index;  // u -> u_out (left side)
    std::vector<NodeId> in_index;   // u -> u_in (right side)

    /// Re-targets the map onto a subgraph; `kept[new] = old` as produced by
    /// largest_connected_component. Dropped split-nodes become kNoNode.
    SplitNodeMap restricted(const std::vector<NodeId>& kept) const;
};

struct SplitGraph {
    Graph graph;  // bipartite, 2n nodes: u_out = u, u_in = n + u
    SplitNodeMap map;
};

/// Di-SFDP transform: every arc u->v becomes the edge (u_out, v_in).
/// Labels are "<label>__out" and "<label>__in".
SplitGraph directed_to_bipartite(const Graph& g);

/// Score of the ordered pair (u, v) from a layout of the split graph: the
/// negated distance between u_out and v_in, or the fallback when either
/// split-node is absent from the layout.
double di_score(const Layout& layout, const SplitNodeMap& map, NodeId u, NodeId v);

/// -(1 + largest pairwise distance in the layout); below every in-layout score.
double fallback_score(const Layout& layout);

/// Orients each edge from lower to higher degree; equal degrees go from the
/// smaller to the larger node index.
Graph orient_by_degree(const Graph& g);

}  // namespace springlp
