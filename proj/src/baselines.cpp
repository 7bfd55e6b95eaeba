#include "springlp/baselines.hpp"

#include <cmath>
#include <istream>
#include <sstream>

#include "springlp/errors.hpp"

namespace springlp {

namespace {

/// Calls fn(z) for every z in N(u) ∩ N(v) via a sorted merge.
template <class Fn>
void for_each_common(const Graph& g, NodeId u, NodeId v, Fn&& fn) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            fn(a[i]);
            ++i;
            ++j;
        }
    }
}

void check_pair(const Graph& g, NodeId u, NodeId v) {
    if (u == v) throw ParameterError("similarity index needs two distinct nodes");
    if (u >= g.node_count() || v >= g.node_count()) throw ParameterError("node index out of range");
}

}  // namespace

std::size_t common_neighbors(const Graph& g, NodeId u, NodeId v) {
    check_pair(g, u, v);
    std::size_t count = 0;
    for_each_common(g, u, v, [&](NodeId) { ++count; });
    return count;
}

double adamic_adar(const Graph& g, NodeId u, NodeId v, AdamicAdarWeight weight) {
    check_pair(g, u, v);
    double sum = 0;
    for_each_common(g, u, v, [&](NodeId z) {
        const auto degree = static_cast<double>(g.neighbors(z).size());
        sum += weight == AdamicAdarWeight::inverse_degree ? 1.0 / degree : 1.0 / std::log(degree);
    });
    return sum;
}

std::size_t preferential_attachment(const Graph& g, NodeId u, NodeId v) {
    check_pair(g, u, v);
    return g.neighbors(u).size() * g.neighbors(v).size();
}

bool ScoreTable::set(const NodePair& pair, double score) {
    auto [it, inserted] = scores_.insert_or_assign(pair, score);
    (void)it;
    return inserted;
}

std::optional<double> ScoreTable::get(const NodePair& pair) const {
    auto it = scores_.find(pair);
    if (it == scores_.end()) return std::nullopt;
    return it->second;
}

LoadedScores load_external_scores(std::istream& in, const Graph& g) {
    LoadedScores result;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#' || line[start] == '%') continue;
        std::istringstream fields(line);
        std::string a, b, value;
        if (!(fields >> a >> b >> value)) throw ParseError("expected 'label_u label_v score'", lineno);
        auto u = g.find(a);
        if (!u) throw ParseError("unknown node label '" + a + "'", lineno);
        auto v = g.find(b);
        if (!v) throw ParseError("unknown node label '" + b + "'", lineno);
        if (*u == *v) throw ParseError("score for a node paired with itself", lineno);
        double score = 0;
        try {
            std::size_t used = 0;
            score = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw ParseError("score '" + value + "' is not a number", lineno);
        }
        if (!std::isfinite(score)) throw ParseError("score must be finite", lineno);
        if (!result.table.set(g.make_pair(*u, *v), score))
            result.warnings.push_back("line " + std::to_string(lineno) + ": duplicate pair " + a + " " + b +
                                      ", keeping the last score");
    }
    return result;
}

}  // namespace springlp
