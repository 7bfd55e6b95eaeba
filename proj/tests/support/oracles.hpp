#pragma once

// Reference implementations used as test oracles. Deliberately naive and
// independent of the library code paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "springlp/graph.hpp"
#include "springlp/layout.hpp"

namespace oracle {

using springlp::Edge;
using springlp::Graph;
using springlp::Layout;
using springlp::NodeId;

inline double brute_force_auc(const std::vector<double>& pos, const std::vector<double>& neg, bool half_ties) {
    double wins = 0;
    for (double a : pos)
        for (double b : neg) {
            if (a > b)
                wins += 1;
            else if (a == b && half_ties)
                wins += 0.5;
        }
    return wins / (static_cast<double>(pos.size()) * static_cast<double>(neg.size()));
}

/// BFS over an undirected edge list.
inline bool connected(std::size_t n, const std::vector<Edge>& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<NodeId>> adj(n);
    for (auto e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n, 0);
    std::queue<NodeId> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        NodeId u = q.front();
        q.pop();
        for (NodeId v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

inline std::set<NodeId> neighbor_set(std::size_t n, const std::vector<Edge>& edges, NodeId u) {
    std::set<NodeId> out;
    for (auto e : edges) {
        if (e.u == u) out.insert(e.v);
        if (e.v == u) out.insert(e.u);
    }
    (void)n;
    return out;
}

inline double dist(const Layout& x, NodeId a, NodeId b) {
    double s = 0;
    for (int k = 0; k < x.dim(); ++k) {
        const double d = x[a][k] - x[b][k];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Energy straight from the formula, ordered loops over i < j.
inline double energy(const std::vector<Edge>& edges, const Layout& x, double C, double K, double p,
                     const std::vector<int>* groups = nullptr) {
    double e = 0;
    for (auto ed : edges) e += std::pow(dist(x, ed.u, ed.v), 3) / (3 * K);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            if (groups && (*groups)[i] == (*groups)[j]) continue;
            e += C * std::pow(K, 1 + p) / ((p - 1) * std::pow(dist(x, i, j), p - 1));
        }
    return e;
}

/// Connected random graph: a random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<std::pair<NodeId, NodeId>> edges;
    for (NodeId v = 1; v < n; ++v) {
        NodeId u = std::uniform_int_distribution<NodeId>(0, v - 1)(rng);
        edges.insert({u, v});
    }
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    for (std::size_t tries = 0; edges.size() < n - 1 + extra && tries < 100 * (extra + 1); ++tries) {
        NodeId a = pick(rng), b = pick(rng);
        if (a == b) continue;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<Edge> list;
    for (auto [a, b] : edges) list.push_back({a, b});
    return Graph::from_edges(springlp::GraphKind::undirected, n, list);
}

inline Layout random_layout(std::size_t n, int dim, std::uint64_t seed, double scale = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, scale);
    Layout x(n, dim);
    for (auto& c : x.data()) c = u(rng);
    return x;
}

}  // namespace oracle
