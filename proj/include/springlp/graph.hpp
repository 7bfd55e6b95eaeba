#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace springlp {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

enum class GraphKind { undirected, directed, bipartite };
enum class Side : std::uint8_t { left, right };
enum class Direction { all, in, out };

std::string_view to_string(GraphKind kind);
GraphKind parse_graph_kind(std::string_view name);

struct Edge {
    NodeId u;
    NodeId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A pair of distinct nodes. Unordered pairs are kept with u < v.
struct NodePair {
    NodeId u = 0;
    NodeId v = 0;
    bool ordered = false;

    NodePair() = default;
    NodePair(NodeId a, NodeId b, bool is_ordered);

    static NodePair unordered(NodeId a, NodeId b) { return {a, b, false}; }
    static NodePair directed(NodeId a, NodeId b) { return {a, b, true}; }

    friend bool operator==(const NodePair&, const NodePair&) = default;
    friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct NodePairHash {
    std::size_t operator()(const NodePair& p) const noexcept {
        std::uint64_t h = (std::uint64_t{p.u} << 32) ^ p.v ^ (p.ordered ? 0x9e3779b97f4a7c15ULL : 0);
        h ^= h >> 33;
        h *= 0xff51afd7ed558ccdULL;
        h ^= h >> 33;
        return static_cast<std::size_t>(h);
    }
};

/// Immutable simple graph with dense node indices and external string labels.
///
/// Undirected edges are stored as (u, v) with u < v, bipartite edges as
/// (left, right), directed edges as (source, target). The edge list is sorted.
/// Adjacency is kept in CSR form; `neighbors` is the undirected projection for
/// every kind, `out_neighbors` / `in_neighbors` are meaningful for directed graphs.
class Graph {
public:
    Graph() = default;

    /// Validates invariants (no loops, no duplicates, bipartite edges cross)
    /// and throws StructuralError on violation. Edges are canonicalized.
    static Graph build(GraphKind kind, std::vector<std::string> labels, std::vector<Edge> edges,
                       std::vector<Side> partition = {});

    /// Same as `build` with labels "0", "1", ...
    static Graph from_edges(GraphKind kind, std::size_t node_count, std::vector<Edge> edges,
                            std::vector<Side> partition = {});

    GraphKind kind() const noexcept { return kind_; }
    bool is_directed() const noexcept { return kind_ == GraphKind::directed; }
    bool is_bipartite() const noexcept { return kind_ == GraphKind::bipartite; }
    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    const std::string& label(NodeId u) const { return labels_.at(u); }
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::optional<NodeId> find(std::string_view label) const;

    /// Empty unless bipartite.
    std::span<const Side> partition() const noexcept { return partition_; }
    Side side(NodeId u) const { return partition_.at(u); }

    /// Sorted, duplicate-free neighbors in the undirected projection.
    std::span<const NodeId> neighbors(NodeId u) const;
    std::span<const NodeId> out_neighbors(NodeId u) const;
    std::span<const NodeId> in_neighbors(NodeId u) const;

    /// `all` counts incident edges (in + out for directed graphs).
    std::size_t degree(NodeId u, Direction direction = Direction::all) const;

    /// Ordered test for directed graphs, unordered otherwise.
    bool has_edge(NodeId u, NodeId v) const;
    bool has_pair(const NodePair& p) const { return has_edge(p.u, p.v); }

    /// Canonical pair for this graph's kind.
    NodePair make_pair(NodeId u, NodeId v) const { return NodePair(u, v, is_directed()); }

    /// Same nodes, labels and partition with a different edge set.
    Graph with_edges(std::vector<Edge> edges) const;

    /// Undirected graph on the same nodes; reciprocal directed edges merge.
    Graph undirected_projection() const;

private:
    struct Csr {
        std::vector<std::size_t> offsets;
        std::vector<NodeId> targets;
        std::span<const NodeId> row(NodeId u) const {
            return {targets.data() + offsets[u], offsets[u + 1] - offsets[u]};
        }
    };
    static Csr make_csr(std::size_t n, const std::vector<Edge>& arcs);

    GraphKind kind_ = GraphKind::undirected;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::vector<Side> partition_;
    Csr adjacency_;
    Csr out_;
    Csr in_;
};

struct ParsedGraph {
    Graph graph;
    std::size_t duplicate_edges = 0;
    std::size_t self_loops = 0;
};

/// Reads a whitespace-separated edge list. '#' and '%' start comment lines,
/// tokens after the second are ignored. Nodes are numbered by first appearance.
/// For bipartite graphs the first column is the left side, the second the right.
ParsedGraph parse_edge_list(std::istream& in, GraphKind kind);
ParsedGraph parse_edge_list(std::string_view text, GraphKind kind);

/// Writes "label_u label_v\n" per edge, sorted by label. Undirected edges put
/// the smaller label first, so parse then write is a fixed point.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Writes "label_u label_v\n" for each pair.
void write_pairs(std::ostream& out, const Graph& g, std::span<const NodePair> pairs);

/// Induced subgraph on the largest (weakly) connected component. Ties go to the
/// component holding the smallest node index. Relative node order is preserved.
/// If `kept` is given it receives, for every new index, the original index.
Graph largest_connected_component(const Graph& g, std::vector<NodeId>* kept = nullptr);

/// Weak connectivity; true for graphs with at most one node.
bool is_connected(const Graph& g);

/// 1-skeleton of an icosahedron subdivided `subdivisions` times (0..7).
Graph generate_icosphere_graph(int subdivisions);

}  // namespace springlp
