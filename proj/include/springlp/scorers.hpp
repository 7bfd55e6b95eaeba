#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "springlp/baselines.hpp"
#include "springlp/eval.hpp"
#include "springlp/sfdp.hpp"
#include "springlp/variants.hpp"

namespace springlp {

/// Plain SFDP: multilevel layout of the training graph, negated distance.
class SfdpScorer : public Scorer {
public:
    explicit SfdpScorer(SfdpParams params) : params_(params) {}
    std::string name() const override { return "sfdp"; }
    void fit(const Graph& train) override;
    double score(NodeId u, NodeId v) const override { return distance_score(layout_, u, v); }
    const Layout& layout() const noexcept { return layout_; }
    const MultilevelReport& report() const noexcept { return report_; }

private:
    SfdpParams params_;
    Layout layout_;
    MultilevelReport report_;
};

/// How Bi-SFDP obtains its layout.
enum class BipartiteSolve {
    single_level,  // random start, masked forces only
    multilevel,    // unmasked coarse levels, masked finest level
};

/// Bipartite layout without same-side repulsion. `fit` accepts a possibly
/// disconnected graph only in single-level mode.
Layout bi_sfdp_layout(const Graph& g, const SfdpParams& params, BipartiteSolve solve,
                      MultilevelReport* report = nullptr);

class BiSfdpScorer : public Scorer {
public:
    BiSfdpScorer(SfdpParams params, BipartiteSolve solve) : params_(params), solve_(solve) {}
    std::string name() const override { return "bi-sfdp"; }
    void fit(const Graph& train) override;
    double score(NodeId u, NodeId v) const override { return distance_score(layout_, u, v); }
    const Layout& layout() const noexcept { return layout_; }

private:
    SfdpParams params_;
    BipartiteSolve solve_;
    Layout layout_;
};

/// A fitted Di-SFDP model: layout of the largest component of the split graph.
struct DiSfdpModel {
    Graph split_graph;  // largest component of the split graph
    SplitNodeMap map;   // onto split_graph indices
    Layout layout;
    double fallback = 0;

    double score(NodeId u, NodeId v) const;
};

DiSfdpModel fit_di_sfdp(const Graph& directed, const SfdpParams& params, BipartiteSolve solve,
                        MultilevelReport* report = nullptr);

class DiSfdpScorer : public Scorer {
public:
    DiSfdpScorer(SfdpParams params, BipartiteSolve solve) : params_(params), solve_(solve) {}
    std::string name() const override { return "di-sfdp"; }
    void fit(const Graph& train) override;
    double score(NodeId u, NodeId v) const override { return model_.score(u, v); }
    const DiSfdpModel& model() const noexcept { return model_; }

private:
    SfdpParams params_;
    BipartiteSolve solve_;
    DiSfdpModel model_;
};

/// Di-SFDP on an undirected graph after orienting edges from low to high
/// degree. Test pairs are oriented with the same rule on training degrees.
class OrientedDiSfdpScorer : public Scorer {
public:
    OrientedDiSfdpScorer(SfdpParams params, BipartiteSolve solve) : params_(params), solve_(solve) {}
    std::string name() const override { return "di-sfdp-oriented"; }
    void fit(const Graph& train) override;
    double score(NodeId u, NodeId v) const override;

private:
    SfdpParams params_;
    BipartiteSolve solve_;
    std::vector<std::size_t> degree_;
    DiSfdpModel model_;
};

class CommonNeighborsScorer : public Scorer {
public:
    std::string name() const override { return "cn"; }
    void fit(const Graph& train) override { train_ = train.undirected_projection(); }
    double score(NodeId u, NodeId v) const override { return static_cast<double>(common_neighbors(train_, u, v)); }

private:
    Graph train_;
};

class AdamicAdarScorer : public Scorer {
public:
    explicit AdamicAdarScorer(AdamicAdarWeight weight = AdamicAdarWeight::inverse_degree) : weight_(weight) {}
    std::string name() const override { return weight_ == AdamicAdarWeight::inverse_degree ? "aa" : "aa-log"; }
    void fit(const Graph& train) override { train_ = train.undirected_projection(); }
    double score(NodeId u, NodeId v) const override { return adamic_adar(train_, u, v, weight_); }

private:
    AdamicAdarWeight weight_;
    Graph train_;
};

class PreferentialAttachmentScorer : public Scorer {
public:
    std::string name() const override { return "pa"; }
    void fit(const Graph& train) override { train_ = train.undirected_projection(); }
    double score(NodeId u, NodeId v) const override {
        return static_cast<double>(preferential_attachment(train_, u, v));
    }

private:
    Graph train_;
};

/// Scores looked up in an externally computed table. Missing pairs are an
/// error that lists them.
class ExternalScorer : public Scorer {
public:
    ExternalScorer(std::shared_ptr<const ScoreTable> table, bool directed) : table_(std::move(table)), directed_(directed) {}
    std::string name() const override { return "external"; }
    void fit(const Graph&) override {}
    double score(NodeId u, NodeId v) const override;
    std::vector<double> score_pairs(std::span<const NodePair> pairs) const override;

private:
    std::shared_ptr<const ScoreTable> table_;
    bool directed_;
};

/// Harness check: +1 for edges of the full graph, -1 otherwise.
class OracleScorer : public Scorer {
public:
    explicit OracleScorer(std::shared_ptr<const Graph> full) : full_(std::move(full)) {}
    std::string name() const override { return "oracle"; }
    void fit(const Graph&) override {}
    double score(NodeId u, NodeId v) const override { return full_->has_edge(u, v) ? 1.0 : -1.0; }

private:
    std::shared_ptr<const Graph> full_;
};

struct ScorerConfig {
    std::string name = "sfdp";  // sfdp, bi-sfdp, di-sfdp, di-sfdp-oriented, cn, aa, aa-log, pa, external, oracle
    SfdpParams sfdp;
    BipartiteSolve bipartite_solve = BipartiteSolve::single_level;
    std::string external_path;
};

const std::vector<std::string>& scorer_names();

/// Checks that the scorer can run on a graph of this kind; throws ParameterError
/// with a hint otherwise (e.g. sfdp on a directed graph suggests di-sfdp).
void check_scorer_for_graph(const ScorerConfig& config, const Graph& g);

/// Builds a factory for `config`. External score files are read once here.
ScorerFactory make_scorer_factory(const ScorerConfig& config, const Graph& g);

}  // namespace springlp
