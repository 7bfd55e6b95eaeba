#include "springlp/variants.hpp"

#include <algorithm>
#include <cmath>

#include "springlp/errors.hpp"

namespace springlp {

RepulsionMask bipartite_repulsion_mask(const Graph& g) {
    if (!g.is_bipartite()) throw StructuralError("Bi-SFDP repulsion mask needs a bipartite graph");
    std::vector<std::uint32_t> group(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) group[u] = g.side(u) == Side::left ? 0 : 1;
    return RepulsionMask::between_groups(std::move(group));
}

SplitNodeMap SplitNodeMap::restricted(const std::vector<NodeId>& kept) const {
    // The split graph has one node per entry of the two index arrays.
    std::vector<NodeId> renumber(out_index.size() + in_index.size(), kNoNode);
    for (NodeId i = 0; i < kept.size(); ++i) renumber.at(kept[i]) = i;

    auto apply = [&](NodeId x) { return x == kNoNode || x >= renumber.size() ? kNoNode : renumber[x]; };
    SplitNodeMap result;
    result.out_index.reserve(out_index.size());
    result.in_index.reserve(in_index.size());
    for (NodeId x : out_index) result.out_index.push_back(apply(x));
    for (NodeId x : in_index) result.in_index.push_back(apply(x));
    return result;
}

SplitGraph directed_to_bipartite(const Graph& g) {
    if (!g.is_directed()) throw StructuralError("Di-SFDP transform needs a directed graph");
    const auto n = static_cast<NodeId>(g.node_count());
    std::vector<std::string> labels;
    std::vector<Side> partition;
    labels.reserve(2 * n);
    partition.reserve(2 * n);
    SplitGraph split;
    split.map.out_index.resize(n);
    split.map.in_index.resize(n);
    for (NodeId u = 0; u < n; ++u) {
        labels.push_back(g.label(u) + "__out");
        partition.push_back(Side::left);
        split.map.out_index[u] = u;
    }
    for (NodeId u = 0; u < n; ++u) {
        labels.push_back(g.label(u) + "__in");
        partition.push_back(Side::right);
        split.map.in_index[u] = n + u;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edge_count());
    for (const auto& e : g.edges()) edges.push_back({e.u, n + e.v});
    split.graph = Graph::build(GraphKind::bipartite, std::move(labels), std::move(edges), std::move(partition));
    return split;
}

double fallback_score(const Layout& layout) {
    double widest = 0;
    for (std::size_t i = 0; i < layout.size(); ++i)
        for (std::size_t j = i + 1; j < layout.size(); ++j) widest = std::max(widest, distance(layout[i], layout[j]));
    return -(1.0 + widest);
}

double di_score(const Layout& layout, const SplitNodeMap& map, NodeId u, NodeId v) {
    if (u == v) throw ParameterError("di_score needs two distinct nodes");
    const NodeId a = map.out_index.at(u);
    const NodeId b = map.in_index.at(v);
    if (a == kNoNode || b == kNoNode) return fallback_score(layout);
    return distance_score(layout, a, b);
}

Graph orient_by_degree(const Graph& g) {
    if (g.kind() != GraphKind::undirected) throw StructuralError("orient_by_degree needs an undirected graph");
    std::vector<Edge> arcs;
    arcs.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        // Stored with e.u < e.v, so a tie keeps the index order.
        if (g.degree(e.v) < g.degree(e.u))
            arcs.push_back({e.v, e.u});
        else
            arcs.push_back(e);
    }
    std::vector<std::string> labels(g.labels().begin(), g.labels().end());
    return Graph::build(GraphKind::directed, std::move(labels), std::move(arcs));
}

}  // namespace springlp
