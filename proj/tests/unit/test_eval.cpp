#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "oracles.hpp"
#include "springlp/errors.hpp"
#include "springlp/eval.hpp"
#include "springlp/scorers.hpp"

using namespace springlp;

namespace {

class ConstantScorer : public Scorer {
public:
    std::string name() const override { return "constant"; }
    void fit(const Graph&) override {}
    double score(NodeId, NodeId) const override { return 1.0; }
};

/// Records the graph it was fitted on.
class SpyScorer : public Scorer {
public:
    explicit SpyScorer(std::vector<Graph>* seen) : seen_(seen) {}
    std::string name() const override { return "spy"; }
    void fit(const Graph& g) override { seen_->push_back(g); }
    double score(NodeId u, NodeId v) const override { return static_cast<double>(u + v); }

private:
    std::vector<Graph>* seen_;
};

void audit_split(const Graph& g, const EvalSplit& split) {
    std::set<NodePair> train, pos, neg;
    for (auto e : split.train_edges) train.insert(g.make_pair(e.u, e.v));
    for (auto p : split.positives) pos.insert(p);
    for (auto p : split.negatives) neg.insert(p);
    CHECK(train.size() == split.train_edges.size());
    CHECK(pos.size() == split.positives.size());
    CHECK(neg.size() == split.negatives.size());
    CHECK(split.negatives.size() == split.positives.size());
    for (auto p : pos) {
        CHECK_FALSE(train.count(p));
        CHECK(g.has_pair(p));
    }
    for (auto p : neg) {
        CHECK_FALSE(g.has_pair(p));  // never an edge of the original graph
        CHECK_FALSE(pos.count(p));
        CHECK(p.u != p.v);
    }
    CHECK(train.size() + pos.size() == g.edge_count());
    CHECK(oracle::connected(g.node_count(), split.train_edges));
}

}  // namespace

TEST_CASE("AUC examples") {
    CHECK(auc(std::vector<double>{0.9, 0.8}, std::vector<double>{0.7, 0.85}) == 0.75);
    CHECK(auc(std::vector<double>{0.9, 0.8}, std::vector<double>{0.7, 0.85}, TiePolicy::half) == 0.75);
    CHECK(auc(std::vector<double>{1, 1}, std::vector<double>{1, 1, 1}) == 0.0);
    CHECK(auc(std::vector<double>{1, 1}, std::vector<double>{1, 1, 1}, TiePolicy::half) == 0.5);
    CHECK(auc(std::vector<double>{5, 6}, std::vector<double>{1, 4.9}) == 1.0);
    CHECK_THROWS_AS(auc(std::vector<double>{}, std::vector<double>{1}), ParameterError);
    CHECK_THROWS_AS(auc(std::vector<double>{1}, std::vector<double>{}), ParameterError);
    CHECK_THROWS_AS(auc(std::vector<double>{NAN}, std::vector<double>{1}), ParameterError);
}

TEST_CASE("AUC matches the double loop exactly") {
    std::mt19937_64 rng(99);
    for (int instance = 0; instance < 300; ++instance) {
        const std::size_t m = 1 + rng() % 200, n = 1 + rng() % 200;
        // Coarse values force plenty of ties.
        std::uniform_int_distribution<int> value(0, instance % 2 ? 10 : 1000000);
        std::vector<double> pos(m), neg(n);
        for (auto& x : pos) x = value(rng) * 0.1;
        for (auto& x : neg) x = value(rng) * 0.1;
        CHECK(auc(pos, neg, TiePolicy::strict) == oracle::brute_force_auc(pos, neg, false));
        CHECK(auc(pos, neg, TiePolicy::half) == oracle::brute_force_auc(pos, neg, true));

        // Invariant under a strictly increasing transform.
        std::vector<double> tp(pos), tn(neg);
        for (auto& x : tp) x = x * 4 - 3;
        for (auto& x : tn) x = x * 4 - 3;
        CHECK(auc(tp, tn, TiePolicy::strict) == auc(pos, neg, TiePolicy::strict));
        CHECK(auc(tp, tn, TiePolicy::half) == auc(pos, neg, TiePolicy::half));
    }
}

TEST_CASE("trial statistics") {
    auto stats = TrialStats::from_values({0.9, 0.8, 0.85, 0.95});
    const double mean = (0.9 + 0.8 + 0.85 + 0.95) / 4;
    double ss = 0;
    for (double x : {0.9, 0.8, 0.85, 0.95}) ss += (x - mean) * (x - mean);
    CHECK(std::abs(stats.mean - mean) < 1e-12);
    CHECK(std::abs(stats.std - std::sqrt(ss / 3)) < 1e-12);
    CHECK(std::abs(stats.ci95_halfwidth - 1.96 * std::sqrt(ss / 3) / 2) < 1e-12);
    auto one = TrialStats::from_values({0.7});
    CHECK(one.std == 0);
    CHECK(one.ci95_halfwidth == 0);
}

TEST_CASE("edge hiding") {
    SUBCASE("triangle") {
        auto g = Graph::from_edges(GraphKind::undirected, 3, {{0, 1}, {1, 2}, {0, 2}});
        Rng rng(1);
        auto split = split_edges(g, 1.0 / 3.0, rng);
        CHECK(split.positives.size() == 1);
        CHECK(split.train_edges.size() == 2);
        CHECK_FALSE(split.shortfall());
        CHECK(oracle::connected(3, split.train_edges));
    }
    SUBCASE("trees cannot lose an edge") {
        auto g = Graph::from_edges(GraphKind::undirected, 5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
        Rng rng(1);
        auto split = split_edges(g, 0.5, rng);
        CHECK(split.positives.empty());
        CHECK(split.shortfall());
        CHECK(split.warnings.size() == 1);
    }
    SUBCASE("connectivity audit on random graphs") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            auto g = oracle::random_connected_graph(30 + seed, 10 + 2 * seed, seed);
            TrialOptions opts;
            opts.fraction = 0.1 + 0.01 * static_cast<double>(seed % 30);
            opts.base_seed = seed;
            auto split = make_trial_split(g, opts, 0);
            audit_split(g, split);
            CHECK(split.positives.size() ==
                  std::min<std::size_t>(split.requested_positives, g.edge_count() - (g.node_count() - 1)));
        }
    }
    SUBCASE("ample cycles reach the target") {
        auto g = generate_icosphere_graph(3);
        Rng rng(5);
        auto split = split_edges(g, 0.1, rng);
        CHECK(split.positives.size() == static_cast<std::size_t>(std::ceil(0.1 * g.edge_count())));
    }
    SUBCASE("errors") {
        Rng rng(1);
        auto apart = Graph::from_edges(GraphKind::undirected, 4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(split_edges(apart, 0.1, rng), StructuralError);
        CHECK_THROWS_AS(split_edges(generate_icosphere_graph(0), 1.0, rng), ParameterError);
    }
}

TEST_CASE("negative sampling") {
    SUBCASE("complete graph has no negatives") {
        std::vector<Edge> edges;
        for (NodeId a = 0; a < 5; ++a)
            for (NodeId b = a + 1; b < 5; ++b) edges.push_back({a, b});
        auto g = Graph::from_edges(GraphKind::undirected, 5, edges);
        Rng rng(1);
        CHECK_THROWS_AS(sample_negatives(g, 1, NegativeRegime::uniform, rng), StructuralError);
    }
    SUBCASE("difficult pairs come from reversed arcs") {
        // A -> B plus an isolated C so that a uniform non-edge exists besides (B, A).
        auto g = Graph::from_edges(GraphKind::directed, 3, {{0, 1}});
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            Rng rng(seed);
            auto neg = sample_negatives(g, 2, NegativeRegime::directed_difficult, rng);
            REQUIRE(neg.size() == 2);
            CHECK(neg[0] == NodePair::directed(1, 0));
            CHECK(neg[1] != NodePair::directed(1, 0));
            CHECK_FALSE(g.has_pair(neg[1]));
        }
    }
    SUBCASE("no difficult pairs warns") {
        auto g = Graph::from_edges(GraphKind::directed, 4, {{0, 1}, {1, 0}});
        Rng rng(2);
        std::vector<std::string> warnings;
        auto neg = sample_negatives(g, 4, NegativeRegime::directed_difficult, rng, &warnings);
        CHECK(neg.size() == 4);
        CHECK(warnings.size() == 1);
    }
    SUBCASE("too few difficult pairs are topped up") {
        auto g = Graph::from_edges(GraphKind::directed, 6, {{0, 1}});
        Rng rng(2);
        std::vector<std::string> warnings;
        auto neg = sample_negatives(g, 6, NegativeRegime::directed_difficult, rng, &warnings);
        CHECK(neg.size() == 6);
        CHECK(neg[0] == NodePair::directed(1, 0));
        CHECK(warnings.size() == 1);
    }
    SUBCASE("degree-weighted half avoids degree-zero nodes") {
        // L = {l1, l2}, R = {r1, r2, r3, r4}; r4 is isolated.
        auto g = parse_edge_list("l1 r1\nl1 r2\nl1 r3\nl2 r1\n", GraphKind::bipartite).graph;
        std::vector<std::string> labels(g.labels().begin(), g.labels().end());
        labels.push_back("r4");
        std::vector<Side> sides(g.partition().begin(), g.partition().end());
        sides.push_back(Side::right);
        auto h = Graph::build(GraphKind::bipartite, labels, {g.edges().begin(), g.edges().end()}, sides);
        const NodeId r4 = *h.find("r4");
        for (std::uint64_t seed = 0; seed < 30; ++seed) {
            Rng rng(seed);
            auto neg = sample_negatives(h, 4, NegativeRegime::bipartite_weighted, rng);
            REQUIRE(neg.size() == 4);
            for (int i = 0; i < 2; ++i) {
                CHECK(neg[i].u != r4);
                CHECK(neg[i].v != r4);
            }
            for (auto p : neg) {
                CHECK(h.side(p.u) != h.side(p.v));
                CHECK_FALSE(h.has_pair(p));
            }
        }
    }
    SUBCASE("uniform negatives are distinct non-edges") {
        auto g = oracle::random_connected_graph(50, 100, 3);
        Rng rng(4);
        auto neg = sample_negatives(g, 300, NegativeRegime::uniform, rng);
        std::set<NodePair> distinct(neg.begin(), neg.end());
        CHECK(distinct.size() == 300);
        for (auto p : neg) CHECK_FALSE(g.has_pair(p));
    }
    SUBCASE("regime must match the graph") {
        Rng rng(1);
        CHECK_THROWS_AS(sample_negatives(generate_icosphere_graph(0), 2, NegativeRegime::directed_difficult, rng),
                        ParameterError);
    }
}

TEST_CASE("run_trials") {
    auto g = generate_icosphere_graph(2);
    TrialOptions opts;
    opts.trials = 4;
    opts.fraction = 0.2;

    SUBCASE("oracle scorer is perfect") {
        ScorerConfig config;
        config.name = "oracle";
        auto stats = run_trials(g, make_scorer_factory(config, g), opts);
        CHECK(stats.mean == 1.0);
        CHECK(stats.std == 0.0);
        CHECK(stats.auc_values.size() == 4);
    }
    SUBCASE("constant scorer") {
        ScorerFactory constant = [] { return std::make_unique<ConstantScorer>(); };
        CHECK(run_trials(g, constant, opts).mean == 0.0);
        opts.tie_policy = TiePolicy::half;
        CHECK(run_trials(g, constant, opts).mean == 0.5);
    }
    SUBCASE("scorers only see the training graph") {
        std::vector<Graph> seen;
        ScorerFactory spy = [&seen] { return std::make_unique<SpyScorer>(&seen); };
        run_trials(g, spy, opts);
        REQUIRE(seen.size() == 4);
        for (std::size_t trial = 0; trial < 4; ++trial) {
            auto split = make_trial_split(g, opts, trial);
            CHECK(seen[trial].edge_count() == split.train_edges.size());
            for (auto p : split.positives) CHECK_FALSE(seen[trial].has_pair(p));
        }
    }
    SUBCASE("deterministic and shared across scorers") {
        ScorerConfig sfdp;
        ScorerConfig cn;
        cn.name = "cn";
        std::vector<ScorerFactory> both = {make_scorer_factory(sfdp, g), make_scorer_factory(cn, g)};
        auto a = run_trials(g, both, opts);
        auto b = run_trials(g, both, opts);
        CHECK(a[0].auc_values == b[0].auc_values);
        CHECK(a[1].auc_values == b[1].auc_values);
        CHECK(run_trials(g, make_scorer_factory(cn, g), opts).auc_values == a[1].auc_values);
        CHECK(a[0].mean > 0.9);
    }
    SUBCASE("trial seeds") {
        opts.base_seed = 10;
        CHECK(make_trial_split(g, opts, 3).seed == 13);
        CHECK(make_trial_split(g, opts, 3).positives == make_trial_split(g, opts, 3).positives);
        CHECK(make_trial_split(g, opts, 3).positives != make_trial_split(g, opts, 4).positives);
    }
}

TEST_CASE("scorer selection") {
    auto directed = Graph::from_edges(GraphKind::directed, 3, {{0, 1}, {1, 2}});
    ScorerConfig config;
    CHECK_THROWS_WITH_AS(check_scorer_for_graph(config, directed), doctest::Contains("di-sfdp"), ParameterError);
    config.name = "nope";
    CHECK_THROWS_AS(check_scorer_for_graph(config, directed), ParameterError);
    config.name = "bi-sfdp";
    CHECK_THROWS_AS(check_scorer_for_graph(config, directed), ParameterError);
}

TEST_CASE("external scorer lists missing pairs") {
    auto g = generate_icosphere_graph(1);
    auto table = std::make_shared<ScoreTable>();
    table->set(NodePair::unordered(0, 1), 0.5);
    ExternalScorer scorer(table, false);
    std::vector<NodePair> pairs = {NodePair::unordered(0, 1), NodePair::unordered(2, 3), NodePair::unordered(4, 5)};
    CHECK_THROWS_WITH(scorer.score_pairs(pairs), doctest::Contains("missing 2 test pair"));
    CHECK(scorer.score_pairs(std::span(pairs).first(1)) == std::vector<double>{0.5});
}

TEST_CASE("split files") {
    auto g = generate_icosphere_graph(1);
    TrialOptions opts;
    auto split = make_trial_split(g, opts, 0);
    auto dir = std::filesystem::temp_directory_path() / "springlp_split_test";
    std::filesystem::remove_all(dir);
    write_split(dir, g, split);
    for (const char* name : {"train.txt", "positives.txt", "negatives.txt", "manifest.txt"})
        CHECK(std::filesystem::exists(dir / name));
    std::ifstream train(dir / "train.txt");
    auto parsed = parse_edge_list(train, GraphKind::undirected).graph;
    CHECK(parsed.edge_count() == split.train_edges.size());
    std::ifstream manifest(dir / "manifest.txt");
    std::string text((std::istreambuf_iterator<char>(manifest)), std::istreambuf_iterator<char>());
    CHECK(text.find("seed=1\n") != std::string::npos);
    CHECK(text.find("regime=uniform\n") != std::string::npos);
    std::filesystem::remove_all(dir);
}
