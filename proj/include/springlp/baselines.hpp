#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "springlp/graph.hpp"

namespace springlp {

// Local similarity indices. They read `g.neighbors`, which is the undirected
// projection for directed graphs.

std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v);

enum class AdamicAdarWeight {
    inverse_degree,  // 1/|N(z)|
    inverse_log,     // 1/log|N(z)|
};

double adamic_adar(const Graph& g, NodeId u, NodeId v, AdamicAdarWeight weight = AdamicAdarWeight::inverse_degree);

std::size_t preferential_attachment(const Graph& g, NodeId u, NodeId v);

/// Externally computed scores; higher means more likely linked.
class ScoreTable {
public:
    /// Returns false if the pair was already present (the value is replaced).
    bool set(const NodePair& pair, double score);
    std::optional<double> get(const NodePair& pair) const;
    bool contains(const NodePair& pair) const { return scores_.count(pair) != 0; }
    std::size_t size() const noexcept { return scores_.size(); }
    bool empty() const noexcept { return scores_.empty(); }

private:
    std::unordered_map<NodePair, double, NodePairHash> scores_;
};

struct LoadedScores {
    ScoreTable table;
    std::vector<std::string> warnings;
};

/// Reads "label_u label_v score" lines ('#'/'%' comments). Pairs are ordered
/// for directed graphs and canonical otherwise. A repeated pair keeps the last
/// value and adds a warning.
LoadedScores load_external_scores(std::istream& in, const Graph& g);

}  // namespace springlp
