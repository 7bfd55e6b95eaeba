#include "springlp/eval.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "springlp/errors.hpp"
#include "springlp/union_find.hpp"

namespace springlp {

std::string_view to_string(NegativeRegime regime) {
    switch (regime) {
        case NegativeRegime::uniform: return "uniform";
        case NegativeRegime::bipartite_weighted: return "bipartite_weighted";
        case NegativeRegime::directed_difficult: return "directed_difficult";
    }
    return "uniform";
}

NegativeRegime parse_negative_regime(std::string_view name) {
    if (name == "uniform") return NegativeRegime::uniform;
    if (name == "bipartite_weighted") return NegativeRegime::bipartite_weighted;
    if (name == "directed_difficult") return NegativeRegime::directed_difficult;
    throw ParameterError("unknown negative sampling regime '" + std::string(name) + "'");
}

std::string_view to_string(TiePolicy policy) { return policy == TiePolicy::strict ? "strict" : "half"; }

TiePolicy parse_tie_policy(std::string_view name) {
    if (name == "strict") return TiePolicy::strict;
    if (name == "half") return TiePolicy::half;
    throw ParameterError("unknown tie policy '" + std::string(name) + "'");
}

EvalSplit split_edges(const Graph& g, double fraction, Rng& rng) {
    if (!(fraction > 0 && fraction < 1)) throw ParameterError("hidden fraction must lie in (0, 1)");
    if (!is_connected(g)) throw StructuralError("edge hiding needs a connected graph; take the LCC first");

    auto edges = g.edges();
    EvalSplit split;
    split.fraction = fraction;
    split.requested_positives = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(edges.size())));

    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);

    UnionFind retained(g.node_count());
    std::vector<char> hidden(edges.size(), 0);
    std::size_t hidden_count = 0;
    for (std::size_t idx : order) {
        const auto& e = edges[idx];
        if (hidden_count < split.requested_positives && retained.connected(e.u, e.v)) {
            hidden[idx] = 1;
            ++hidden_count;
        } else {
            retained.unite(e.u, e.v);
        }
    }

    for (std::size_t idx : order)
        if (hidden[idx]) split.positives.push_back(g.make_pair(edges[idx].u, edges[idx].v));
    for (std::size_t idx = 0; idx < edges.size(); ++idx)
        if (!hidden[idx]) split.train_edges.push_back(edges[idx]);

    if (split.shortfall())
        split.warnings.push_back("only " + std::to_string(split.positives.size()) + " of " +
                                 std::to_string(split.requested_positives) +
                                 " edges could be hidden without disconnecting the graph");
    return split;
}

Graph train_graph(const Graph& g, const EvalSplit& split) { return g.with_edges(split.train_edges); }

namespace {

/// Number of candidate pairs in the sampling universe.
double universe_size(const Graph& g) {
    const auto n = static_cast<double>(g.node_count());
    if (g.is_bipartite()) {
        double left = 0;
        for (Side s : g.partition()) left += s == Side::left ? 1 : 0;
        return left * (n - left);
    }
    return g.is_directed() ? n * (n - 1) : n * (n - 1) / 2;
}

class PairSampler {
public:
    PairSampler(const Graph& g, Rng& rng, std::size_t budget) : g_(g), rng_(rng), budget_(budget) {
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (g.is_bipartite() && g.side(u) == Side::right)
                right_.push_back(u);
            else
                left_.push_back(u);
        }
        if (!g.is_bipartite()) right_ = left_;
    }

    bool accept(NodeId u, NodeId v) {
        if (u == v || g_.has_edge(u, v)) return false;
        return chosen_.insert(g_.make_pair(u, v)).second;
    }

    void take(NodeId u, NodeId v) { chosen_.insert(g_.make_pair(u, v)); }

    bool draw(std::vector<NodePair>& out, const std::function<std::pair<NodeId, NodeId>()>& propose) {
        while (attempts_ < budget_) {
            ++attempts_;
            auto [u, v] = propose();
            if (accept(u, v)) {
                out.push_back(g_.make_pair(u, v));
                return true;
            }
        }
        return false;
    }

    std::pair<NodeId, NodeId> uniform() {
        std::uniform_int_distribution<std::size_t> a(0, left_.size() - 1);
        std::uniform_int_distribution<std::size_t> b(0, right_.size() - 1);
        NodeId u = left_[a(rng_)];
        NodeId v = right_[b(rng_)];
        // Bipartite universe is L x R; for directed graphs the draw is ordered already.
        return {u, v};
    }

    std::span<const NodeId> left() const { return left_; }
    std::span<const NodeId> right() const { return right_; }

private:
    const Graph& g_;
    Rng& rng_;
    std::size_t budget_;
    std::size_t attempts_ = 0;
    std::vector<NodeId> left_;
    std::vector<NodeId> right_;
    std::unordered_set<NodePair, NodePairHash> chosen_;
};

}  // namespace

std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count, NegativeRegime regime, Rng& rng,
                                       std::vector<std::string>* warnings, const Graph* degree_source) {
    if (count == 0) return {};
    if (regime == NegativeRegime::directed_difficult && !g.is_directed())
        throw ParameterError("directed_difficult sampling needs a directed graph");
    if (universe_size(g) - static_cast<double>(g.edge_count()) < static_cast<double>(count))
        throw StructuralError("not enough non-edges to sample " + std::to_string(count) + " negatives");
    if (!degree_source) degree_source = &g;
    if (degree_source->node_count() != g.node_count())
        throw ParameterError("degree source must have the same nodes as the graph");

    auto warn = [&](std::string message) {
        if (warnings) warnings->push_back(std::move(message));
    };

    PairSampler sampler(g, rng, 100 * count);
    std::vector<NodePair> negatives;
    negatives.reserve(count);

    if (regime == NegativeRegime::directed_difficult) {
        std::vector<NodePair> difficult;
        for (const auto& e : g.edges())
            if (!g.has_edge(e.v, e.u)) difficult.push_back(NodePair::directed(e.v, e.u));
        const std::size_t want = count / 2;
        if (difficult.empty()) {
            warn("no difficult pairs exist; sampling all negatives uniformly");
        } else {
            if (difficult.size() < want)
                warn("only " + std::to_string(difficult.size()) + " difficult pairs exist; filling with uniform pairs");
            const std::size_t take = std::min(want, difficult.size());
            // Partial Fisher-Yates for a uniform subset.
            for (std::size_t i = 0; i < take; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, difficult.size() - 1);
                std::swap(difficult[i], difficult[pick(rng)]);
                sampler.take(difficult[i].u, difficult[i].v);
                negatives.push_back(difficult[i]);
            }
        }
    } else if (regime == NegativeRegime::bipartite_weighted) {
        const std::size_t want = count / 2;
        auto weights = [&](std::span<const NodeId> nodes) {
            std::vector<double> w;
            w.reserve(nodes.size());
            for (NodeId u : nodes) w.push_back(static_cast<double>(degree_source->neighbors(u).size()));
            return w;
        };
        auto wl = weights(sampler.left());
        auto wr = weights(sampler.right());
        const bool usable = std::accumulate(wl.begin(), wl.end(), 0.0) > 0 && std::accumulate(wr.begin(), wr.end(), 0.0) > 0;
        if (!usable) {
            warn("all degrees are zero; sampling all negatives uniformly");
        } else {
            std::discrete_distribution<std::size_t> pick_left(wl.begin(), wl.end());
            std::discrete_distribution<std::size_t> pick_right(wr.begin(), wr.end());
            auto left = sampler.left();
            auto right = sampler.right();
            auto propose = [&]() -> std::pair<NodeId, NodeId> {
                return {left[pick_left(rng)], right[pick_right(rng)]};
            };
            while (negatives.size() < want) {
                if (!sampler.draw(negatives, propose))
                    throw StructuralError("degree-weighted negative sampling exhausted its attempt budget");
            }
        }
    }

    auto uniform = [&]() { return sampler.uniform(); };
    while (negatives.size() < count) {
        if (!sampler.draw(negatives, uniform))
            throw StructuralError("negative sampling exhausted its attempt budget (" + std::to_string(100 * count) +
                                  " draws)");
    }
    return negatives;
}

double auc(std::span<const double> positives, std::span<const double> negatives, TiePolicy tie_policy) {
    if (positives.empty() || negatives.empty()) throw ParameterError("AUC needs non-empty positive and negative scores");
    auto finite = [](double x) { return !std::isnan(x); };
    if (!std::all_of(positives.begin(), positives.end(), finite) ||
        !std::all_of(negatives.begin(), negatives.end(), finite))
        throw ParameterError("AUC scores must not be NaN");

    std::vector<double> sorted(negatives.begin(), negatives.end());
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t wins = 0;
    std::uint64_t ties = 0;
    for (double s : positives) {
        auto [lo, hi] = std::equal_range(sorted.begin(), sorted.end(), s);
        wins += static_cast<std::uint64_t>(lo - sorted.begin());
        ties += static_cast<std::uint64_t>(hi - lo);
    }
    double numerator = static_cast<double>(wins);
    if (tie_policy == TiePolicy::half) numerator += 0.5 * static_cast<double>(ties);
    return numerator / (static_cast<double>(positives.size()) * static_cast<double>(negatives.size()));
}

TrialStats TrialStats::from_values(std::vector<double> values) {
    TrialStats stats;
    stats.auc_values = std::move(values);
    const auto n = static_cast<double>(stats.auc_values.size());
    if (stats.auc_values.empty()) return stats;
    stats.mean = std::accumulate(stats.auc_values.begin(), stats.auc_values.end(), 0.0) / n;
    if (stats.auc_values.size() > 1) {
        double ss = 0;
        for (double x : stats.auc_values) ss += (x - stats.mean) * (x - stats.mean);
        stats.std = std::sqrt(ss / (n - 1));
    }
    stats.ci95_halfwidth = 1.96 * stats.std / std::sqrt(n);
    return stats;
}

std::vector<double> Scorer::score_pairs(std::span<const NodePair> pairs) const {
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.push_back(score(p.u, p.v));
    return out;
}

EvalSplit make_trial_split(const Graph& g, const TrialOptions& options, std::size_t trial) {
    const std::uint64_t seed = options.base_seed + trial;
    Rng rng(seed);
    EvalSplit split = split_edges(g, options.fraction, rng);
    split.seed = seed;
    split.regime = options.regime;
    if (split.positives.empty()) throw StructuralError("no edge can be hidden without disconnecting the graph");
    std::optional<Graph> train;
    if (options.train_degrees) train = train_graph(g, split);
    split.negatives = sample_negatives(g, split.positives.size(), options.regime, rng, &split.warnings,
                                       train ? &*train : nullptr);
    return split;
}

std::vector<TrialStats> run_trials(const Graph& g, std::span<const ScorerFactory> scorers,
                                   const TrialOptions& options) {
    if (options.trials < 1) throw ParameterError("trials must be at least 1");
    std::vector<std::vector<double>> values(scorers.size());
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const EvalSplit split = make_trial_split(g, options, trial);
        const Graph train = train_graph(g, split);
        for (std::size_t s = 0; s < scorers.size(); ++s) {
            auto scorer = scorers[s]();
            scorer->fit(train);
            auto pos = scorer->score_pairs(split.positives);
            auto neg = scorer->score_pairs(split.negatives);
            values[s].push_back(auc(pos, neg, options.tie_policy));
        }
    }
    std::vector<TrialStats> stats;
    stats.reserve(scorers.size());
    for (auto& v : values) stats.push_back(TrialStats::from_values(std::move(v)));
    return stats;
}

TrialStats run_trials(const Graph& g, const ScorerFactory& scorer, const TrialOptions& options) {
    return run_trials(g, std::span<const ScorerFactory>(&scorer, 1), options).front();
}

void write_split(const std::filesystem::path& directory, const Graph& g, const EvalSplit& split) {
    std::filesystem::create_directories(directory);
    auto open = [&](const char* name) {
        std::ofstream out(directory / name);
        if (!out) throw Error("cannot write " + (directory / name).string());
        return out;
    };
    {
        auto out = open("train.txt");
        for (const auto& e : split.train_edges) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
    }
    {
        auto out = open("positives.txt");
        write_pairs(out, g, split.positives);
    }
    {
        auto out = open("negatives.txt");
        write_pairs(out, g, split.negatives);
    }
    auto out = open("manifest.txt");
    out << "seed=" << split.seed << '\n'
        << "fraction=" << split.fraction << '\n'
        << "regime=" << to_string(split.regime) << '\n'
        << "kind=" << to_string(g.kind()) << '\n'
        << "train_edges=" << split.train_edges.size() << '\n'
        << "positives=" << split.positives.size() << '\n'
        << "negatives=" << split.negatives.size() << '\n'
        << "shortfall=" << (split.shortfall() ? "true" : "false") << '\n';
}

}  // namespace springlp
