#include "springlp/scorers.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "springlp/errors.hpp"

namespace springlp {

void SfdpScorer::fit(const Graph& train) {
    if (train.is_directed()) throw ParameterError("sfdp scores are symmetric; use di-sfdp for directed graphs");
    layout_ = layout_multilevel(train, params_, RepulsionMask::all_pairs(), &report_);
}

Layout bi_sfdp_layout(const Graph& g, const SfdpParams& params, BipartiteSolve solve, MultilevelReport* report) {
    RepulsionMask mask = bipartite_repulsion_mask(g);
    if (solve == BipartiteSolve::multilevel) return layout_multilevel(g, params, mask, report);
    SolveReport solved;
    Layout layout = layout_single_level(g, random_layout(g.node_count(), params), params, mask, &solved);
    if (report) report->levels = {solved};
    return layout;
}

void BiSfdpScorer::fit(const Graph& train) {
    if (!train.is_bipartite()) throw ParameterError("bi-sfdp needs a bipartite graph");
    layout_ = bi_sfdp_layout(train, params_, solve_);
}

double DiSfdpModel::score(NodeId u, NodeId v) const {
    if (u == v) throw ParameterError("di-sfdp score needs two distinct nodes");
    const NodeId a = map.out_index.at(u);
    const NodeId b = map.in_index.at(v);
    if (a == kNoNode || b == kNoNode) return fallback;
    return distance_score(layout, a, b);
}

DiSfdpModel fit_di_sfdp(const Graph& directed, const SfdpParams& params, BipartiteSolve solve,
                        MultilevelReport* report) {
    SplitGraph split = directed_to_bipartite(directed);
    std::vector<NodeId> kept;
    DiSfdpModel model;
    model.split_graph = largest_connected_component(split.graph, &kept);
    model.map = split.map.restricted(kept);
    model.layout = bi_sfdp_layout(model.split_graph, params, solve, report);
    model.fallback = fallback_score(model.layout);
    return model;
}

void DiSfdpScorer::fit(const Graph& train) {
    if (!train.is_directed()) throw ParameterError("di-sfdp needs a directed graph");
    model_ = fit_di_sfdp(train, params_, solve_);
}

void OrientedDiSfdpScorer::fit(const Graph& train) {
    if (train.kind() != GraphKind::undirected) throw ParameterError("di-sfdp-oriented needs an undirected graph");
    degree_.resize(train.node_count());
    for (NodeId u = 0; u < train.node_count(); ++u) degree_[u] = train.degree(u);
    model_ = fit_di_sfdp(orient_by_degree(train), params_, solve_);
}

double OrientedDiSfdpScorer::score(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    if (degree_.at(v) < degree_.at(u)) std::swap(u, v);
    return model_.score(u, v);
}

double ExternalScorer::score(NodeId u, NodeId v) const {
    auto s = table_->get(NodePair(u, v, directed_));
    if (!s) throw Error("external score file has no entry for pair " + std::to_string(u) + " " + std::to_string(v));
    return *s;
}

std::vector<double> ExternalScorer::score_pairs(std::span<const NodePair> pairs) const {
    std::vector<double> out;
    out.reserve(pairs.size());
    std::vector<NodePair> missing;
    for (const auto& p : pairs) {
        auto s = table_->get(p);
        if (s)
            out.push_back(*s);
        else
            missing.push_back(p);
    }
    if (!missing.empty()) {
        std::ostringstream msg;
        msg << "external score file is missing " << missing.size() << " test pair(s):";
        for (std::size_t i = 0; i < missing.size() && i < 20; ++i) msg << ' ' << missing[i].u << '-' << missing[i].v;
        if (missing.size() > 20) msg << " ...";
        throw Error(msg.str());
    }
    return out;
}

const std::vector<std::string>& scorer_names() {
    static const std::vector<std::string> names = {"sfdp", "bi-sfdp", "di-sfdp", "di-sfdp-oriented", "cn",
                                                   "aa",   "aa-log",  "pa",      "external",         "oracle"};
    return names;
}

void check_scorer_for_graph(const ScorerConfig& config, const Graph& g) {
    const auto& name = config.name;
    if (std::find(scorer_names().begin(), scorer_names().end(), name) == scorer_names().end())
        throw ParameterError("unknown scorer '" + name + "'");
    if (name == "sfdp" && g.is_directed())
        throw ParameterError("scorer sfdp is symmetric and cannot rank directed pairs; use di-sfdp");
    if (name == "bi-sfdp" && !g.is_bipartite()) throw ParameterError("scorer bi-sfdp needs a bipartite graph");
    if (name == "di-sfdp" && !g.is_directed()) throw ParameterError("scorer di-sfdp needs a directed graph");
    if (name == "di-sfdp-oriented" && g.kind() != GraphKind::undirected)
        throw ParameterError("scorer di-sfdp-oriented needs an undirected graph");
    if (name == "external" && config.external_path.empty())
        throw ParameterError("scorer external needs a score file");
}

ScorerFactory make_scorer_factory(const ScorerConfig& config, const Graph& g) {
    check_scorer_for_graph(config, g);
    const auto& name = config.name;
    const SfdpParams params = config.sfdp;
    const BipartiteSolve solve = config.bipartite_solve;
    if (name == "sfdp") return [params] { return std::make_unique<SfdpScorer>(params); };
    if (name == "bi-sfdp") return [params, solve] { return std::make_unique<BiSfdpScorer>(params, solve); };
    if (name == "di-sfdp") return [params, solve] { return std::make_unique<DiSfdpScorer>(params, solve); };
    if (name == "di-sfdp-oriented")
        return [params, solve] { return std::make_unique<OrientedDiSfdpScorer>(params, solve); };
    if (name == "cn") return [] { return std::make_unique<CommonNeighborsScorer>(); };
    if (name == "aa") return [] { return std::make_unique<AdamicAdarScorer>(AdamicAdarWeight::inverse_degree); };
    if (name == "aa-log") return [] { return std::make_unique<AdamicAdarScorer>(AdamicAdarWeight::inverse_log); };
    if (name == "pa") return [] { return std::make_unique<PreferentialAttachmentScorer>(); };
    if (name == "oracle") {
        auto full = std::make_shared<const Graph>(g);
        return [full] { return std::make_unique<OracleScorer>(full); };
    }
    // external
    std::ifstream in(config.external_path);
    if (!in) throw ParameterError("cannot open score file " + config.external_path);
    auto loaded = load_external_scores(in, g);
    auto table = std::make_shared<const ScoreTable>(std::move(loaded.table));
    const bool directed = g.is_directed();
    return [table, directed] { return std::make_unique<ExternalScorer>(table, directed); };
}

}  // namespace springlp
