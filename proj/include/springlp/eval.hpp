#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "springlp/graph.hpp"
#include "springlp/sfdp.hpp"

namespace springlp {

enum class NegativeRegime { uniform, bipartite_weighted, directed_difficult };
enum class TiePolicy { strict, half };

std::string_view to_string(NegativeRegime regime);
NegativeRegime parse_negative_regime(std::string_view name);
std::string_view to_string(TiePolicy policy);
TiePolicy parse_tie_policy(std::string_view name);

/// Train edges plus the test pairs (hidden edges and sampled non-edges).
struct EvalSplit {
    std::vector<Edge> train_edges;
    std::vector<NodePair> positives;
    std::vector<NodePair> negatives;
    std::uint64_t seed = 0;
    NegativeRegime regime = NegativeRegime::uniform;
    double fraction = 0;
    std::size_t requested_positives = 0;  // ceil(fraction * |E|)
    std::vector<std::string> warnings;

    bool shortfall() const noexcept { return positives.size() < requested_positives; }
};

/// Hides ceil(fraction*|E|) edges without disconnecting the graph: edges are
/// shuffled and scanned once; an edge whose endpoints are already joined by
/// retained edges may be hidden. Fewer are hidden (with a warning) when the
/// graph runs out of such edges.
EvalSplit split_edges(const Graph& g, double fraction, Rng& rng);

/// The training graph: same nodes as `g`, train edges only.
Graph train_graph(const Graph& g, const EvalSplit& split);

/// Samples `count` distinct non-edges of `g`. Pairs are ordered for directed
/// graphs and drawn from L x R for bipartite graphs.
///  - uniform: rejection sampling.
///  - bipartite_weighted: half uniform, half with endpoint probability
///    proportional to degree in `degree_source` (defaults to `g`).
///  - directed_difficult: half drawn from the reversed arcs that are not arcs
///    themselves, the rest uniform.
/// The weighted or difficult pairs come first in the result.
/// Throws StructuralError when fewer than `count` non-edges exist or the
/// rejection budget (100*count draws) runs out.
std::vector<NodePair> sample_negatives(const Graph& g, std::size_t count, NegativeRegime regime, Rng& rng,
                                       std::vector<std::string>* warnings = nullptr,
                                       const Graph* degree_source = nullptr);

/// Fraction of (positive, negative) pairs ranked correctly; `half` counts ties
/// as one half. O((m+n) log(m+n)).
double auc(std::span<const double> positives, std::span<const double> negatives,
           TiePolicy tie_policy = TiePolicy::strict);

struct TrialStats {
    std::vector<double> auc_values;
    double mean = 0;
    double std = 0;  // sample standard deviation (n-1); 0 for a single trial
    double ci95_halfwidth = 0;

    static TrialStats from_values(std::vector<double> values);
};

/// A link predictor. `fit` sees only the training graph.
class Scorer {
public:
    virtual ~Scorer() = default;
    virtual std::string name() const = 0;
    virtual void fit(const Graph& train) = 0;
    /// Higher means more likely linked; (u, v) is ordered for directed graphs.
    virtual double score(NodeId u, NodeId v) const = 0;
    virtual std::vector<double> score_pairs(std::span<const NodePair> pairs) const;
};

using ScorerFactory = std::function<std::unique_ptr<Scorer>()>;

struct TrialOptions {
    double fraction = 0.1;
    std::size_t trials = 10;
    NegativeRegime regime = NegativeRegime::uniform;
    TiePolicy tie_policy = TiePolicy::strict;
    std::uint64_t base_seed = 1;
    /// Degree-weighted sampling uses the training graph instead of the original.
    bool train_degrees = false;
};

/// Split plus negatives for one trial, seeded with base_seed + trial.
EvalSplit make_trial_split(const Graph& g, const TrialOptions& options, std::size_t trial);

TrialStats run_trials(const Graph& g, const ScorerFactory& scorer, const TrialOptions& options);

/// Several scorers evaluated on identical splits; one TrialStats per scorer.
std::vector<TrialStats> run_trials(const Graph& g, std::span<const ScorerFactory> scorers,
                                   const TrialOptions& options);

/// Writes train.txt, positives.txt, negatives.txt (edge-list format, original
/// labels) and manifest.txt (key=value) into `directory`.
void write_split(const std::filesystem::path& directory, const Graph& g, const EvalSplit& split);

}  // namespace springlp
