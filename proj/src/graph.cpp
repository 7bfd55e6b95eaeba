#include "springlp/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>

#include "springlp/errors.hpp"
#include "springlp/union_find.hpp"

namespace springlp {

std::string_view to_string(GraphKind kind) {
    switch (kind) {
        case GraphKind::undirected: return "undirected";
        case GraphKind::directed: return "directed";
        case GraphKind::bipartite: return "bipartite";
    }
    return "undirected";
}

GraphKind parse_graph_kind(std::string_view name) {
    if (name == "undirected") return GraphKind::undirected;
    if (name == "directed") return GraphKind::directed;
    if (name == "bipartite") return GraphKind::bipartite;
    throw ParameterError("unknown graph kind '" + std::string(name) + "'");
}

NodePair::NodePair(NodeId a, NodeId b, bool is_ordered) : u(a), v(b), ordered(is_ordered) {
    if (a == b) throw ParameterError("node pair needs two distinct nodes");
    if (!ordered && u > v) std::swap(u, v);
}

Graph::Csr Graph::make_csr(std::size_t n, const std::vector<Edge>& arcs) {
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const auto& a : arcs) ++csr.offsets[a.u + 1];
    for (std::size_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.resize(arcs.size());
    std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
    for (const auto& a : arcs) csr.targets[cursor[a.u]++] = a.v;
    for (std::size_t i = 0; i < n; ++i) {
        auto first = csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[i]);
        auto last = csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[i + 1]);
        std::sort(first, last);
    }
    return csr;
}

Graph Graph::build(GraphKind kind, std::vector<std::string> labels, std::vector<Edge> edges,
                   std::vector<Side> partition) {
    Graph g;
    g.kind_ = kind;
    g.labels_ = std::move(labels);
    const std::size_t n = g.labels_.size();
    if (n >= kNoNode) throw StructuralError("too many nodes");

    g.index_.reserve(n);
    for (NodeId i = 0; i < n; ++i) {
        if (!g.index_.emplace(g.labels_[i], i).second)
            throw StructuralError("duplicate node label '" + g.labels_[i] + "'");
    }

    if (kind == GraphKind::bipartite) {
        if (partition.size() != n) throw StructuralError("bipartite graph needs a side for every node");
        g.partition_ = std::move(partition);
    } else if (!partition.empty()) {
        throw StructuralError("only bipartite graphs carry a partition");
    }

    for (auto& e : edges) {
        if (e.u >= n || e.v >= n) throw StructuralError("edge endpoint out of range");
        if (e.u == e.v) throw StructuralError("self-loop on node '" + g.labels_[e.u] + "'");
        if (kind == GraphKind::undirected && e.u > e.v) std::swap(e.u, e.v);
        if (kind == GraphKind::bipartite) {
            if (g.partition_[e.u] == g.partition_[e.v])
                throw StructuralError("edge " + g.labels_[e.u] + " " + g.labels_[e.v] +
                                      " does not cross the partition");
            if (g.partition_[e.u] == Side::right) std::swap(e.u, e.v);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw StructuralError("duplicate edge");
    g.edges_ = std::move(edges);

    std::vector<Edge> arcs;
    arcs.reserve(2 * g.edges_.size());
    for (const auto& e : g.edges_) {
        arcs.push_back(e);
        arcs.push_back({e.v, e.u});
    }
    if (kind == GraphKind::directed) {
        // Reciprocal arcs collapse to one neighbor in the projection.
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    }
    g.adjacency_ = make_csr(n, arcs);
    if (kind == GraphKind::directed) {

        g.out_ = make_csr(n, g.edges_);
        std::vector<Edge> reversed;
        reversed.reserve(g.edges_.size());
        for (const auto& e : g.edges_) reversed.push_back({e.v, e.u});
        g.in_ = make_csr(n, reversed);
    }
    return g;
}

Graph Graph::from_edges(GraphKind kind, std::size_t node_count, std::vector<Edge> edges,
                        std::vector<Side> partition) {
    std::vector<std::string> labels;
    labels.reserve(node_count);
    for (std::size_t i = 0; i < node_count; ++i) labels.push_back(std::to_string(i));
    return build(kind, std::move(labels), std::move(edges), std::move(partition));
}

std::optional<NodeId> Graph::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::span<const NodeId> Graph::neighbors(NodeId u) const { return adjacency_.row(u); }

std::span<const NodeId> Graph::out_neighbors(NodeId u) const {
    return is_directed() ? out_.row(u) : adjacency_.row(u);
}

std::span<const NodeId> Graph::in_neighbors(NodeId u) const {
    return is_directed() ? in_.row(u) : adjacency_.row(u);
}

std::size_t Graph::degree(NodeId u, Direction direction) const {
    if (u >= node_count()) throw ParameterError("node index out of range");
    if (direction != Direction::all && !is_directed())
        throw ParameterError("in/out degree requires a directed graph");
    switch (direction) {
        case Direction::in: return in_.row(u).size();
        case Direction::out: return out_.row(u).size();
        case Direction::all: break;
    }
    return is_directed() ? in_.row(u).size() + out_.row(u).size() : adjacency_.row(u).size();
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (u >= node_count() || v >= node_count()) return false;
    auto row = is_directed() ? out_.row(u) : adjacency_.row(u);
    return std::binary_search(row.begin(), row.end(), v);
}

Graph Graph::with_edges(std::vector<Edge> edges) const {
    return build(kind_, labels_, std::move(edges), partition_);
}

Graph Graph::undirected_projection() const {
    if (!is_directed()) return build(GraphKind::undirected, labels_, edges_);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) edges.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return build(GraphKind::undirected, labels_, std::move(edges));
}

// ---------------------------------------------------------------------------

ParsedGraph parse_edge_list(std::istream& in, GraphKind kind) {
    std::vector<std::string> labels;
    std::vector<Side> partition;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Edge> edges;
    ParsedGraph result;

    auto intern = [&](const std::string& token, Side side, std::size_t lineno) -> NodeId {
        auto [it, inserted] = index.emplace(token, static_cast<NodeId>(labels.size()));
        if (inserted) {
            labels.push_back(token);
            if (kind == GraphKind::bipartite) partition.push_back(side);
        } else if (kind == GraphKind::bipartite && partition[it->second] != side) {
            throw StructuralError("line " + std::to_string(lineno) + ": node '" + token +
                                  "' appears on both sides of a bipartite edge list");
        }
        return it->second;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        std::istringstream fields(line);
        std::string a, b;
        if (!(fields >> a >> b)) throw ParseError("expected two node identifiers", lineno);
        NodeId u = intern(a, Side::left, lineno);
        NodeId v = intern(b, Side::right, lineno);
        if (u == v) {
            ++result.self_loops;
            continue;
        }
        if (kind == GraphKind::undirected && u > v) std::swap(u, v);
        edges.push_back({u, v});
    }

    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    result.duplicate_edges = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());

    result.graph = Graph::build(kind, std::move(labels), std::move(edges), std::move(partition));
    return result;
}

ParsedGraph parse_edge_list(std::string_view text, GraphKind kind) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in, kind);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    std::vector<std::pair<std::string_view, std::string_view>> rows;
    rows.reserve(g.edge_count());
    for (const auto& e : g.edges()) {
        std::string_view a = g.label(e.u), b = g.label(e.v);
        if (g.kind() == GraphKind::undirected && b < a) std::swap(a, b);
        rows.emplace_back(a, b);
    }
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, b] : rows) out << a << ' ' << b << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

void write_pairs(std::ostream& out, const Graph& g, std::span<const NodePair> pairs) {
    for (const auto& p : pairs) out << g.label(p.u) << ' ' << g.label(p.v) << '\n';
}

// ---------------------------------------------------------------------------

Graph largest_connected_component(const Graph& g, std::vector<NodeId>* kept) {
    const std::size_t n = g.node_count();
    UnionFind uf(n);
    for (const auto& e : g.edges()) uf.unite(e.u, e.v);

    // Scanning in index order makes the first root seen for a size the one
    // holding the smallest node index.
    std::size_t best_root = 0;
    std::size_t best_size = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t s = uf.set_size(i);
        if (s > best_size) {
            best_size = s;
            best_root = uf.find(i);
        }
    }

    std::vector<NodeId> remap(n, kNoNode);
    std::vector<NodeId> original;
    std::vector<std::string> labels;
    std::vector<Side> partition;
    for (std::size_t i = 0; i < n; ++i) {
        if (uf.find(i) != best_root) continue;
        remap[i] = static_cast<NodeId>(original.size());
        original.push_back(static_cast<NodeId>(i));
        labels.push_back(g.label(static_cast<NodeId>(i)));
        if (g.is_bipartite()) partition.push_back(g.side(static_cast<NodeId>(i)));
    }

    std::vector<Edge> edges;
    for (const auto& e : g.edges()) {
        if (remap[e.u] != kNoNode) edges.push_back({remap[e.u], remap[e.v]});
    }
    if (kept) *kept = std::move(original);
    return Graph::build(g.kind(), std::move(labels), std::move(edges), std::move(partition));
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<NodeId> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        NodeId u = frontier.front();
        frontier.pop();
        for (NodeId v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                frontier.push(v);
            }
        }
    }
    return reached == n;
}

// ---------------------------------------------------------------------------

Graph generate_icosphere_graph(int subdivisions) {
    if (subdivisions < 0 || subdivisions > 7)
        throw ParameterError("icosphere subdivisions must be in [0, 7]");

    // Vertex positions are tracked so the construction matches the geometric
    // subdivision; only the combinatorics end up in the graph.
    using Vec3 = std::array<double, 3>;
    const double t = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Vec3> vertices = {{-1, t, 0}, {1, t, 0},   {-1, -t, 0}, {1, -t, 0},
                                  {0, -1, t}, {0, 1, t},   {0, -1, -t}, {0, 1, -t},
                                  {t, 0, -1}, {t, 0, 1},   {-t, 0, -1}, {-t, 0, 1}};
    using Tri = std::array<NodeId, 3>;
    std::vector<Tri> faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                              {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                              {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                              {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    auto project = [](Vec3 p) {
        double r = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        return Vec3{p[0] / r, p[1] / r, p[2] / r};
    };
    for (auto& v : vertices) v = project(v);

    for (int level = 0; level < subdivisions; ++level) {
        std::map<std::pair<NodeId, NodeId>, NodeId> midpoint;
        auto mid = [&](NodeId a, NodeId b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3& p = vertices[a];
            const Vec3& q = vertices[b];
            vertices.push_back(project({(p[0] + q[0]) / 2, (p[1] + q[1]) / 2, (p[2] + q[2]) / 2}));
            auto id = static_cast<NodeId>(vertices.size() - 1);
            midpoint.emplace(key, id);
            return id;
        };
        std::vector<Tri> next;
        next.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            NodeId ab = mid(f[0], f[1]);
            NodeId bc = mid(f[1], f[2]);
            NodeId ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        faces = std::move(next);
    }

    std::vector<Edge> edges;
    edges.reserve(faces.size() * 3);
    for (const auto& f : faces) {
        for (int k = 0; k < 3; ++k) {
            NodeId a = f[k], b = f[(k + 1) % 3];
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph::from_edges(GraphKind::undirected, vertices.size(), std::move(edges));
}

}  // namespace springlp
