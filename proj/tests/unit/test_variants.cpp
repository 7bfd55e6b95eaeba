#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "springlp/errors.hpp"
#include "springlp/scorers.hpp"
#include "springlp/variants.hpp"

using namespace springlp;

namespace {

Graph fig6_graph() { return parse_edge_list("A B\nB A\nB C\nC A\n", GraphKind::directed).graph; }

std::string edge_label(const Graph& g, Edge e) { return g.label(e.u) + "-" + g.label(e.v); }

}  // namespace

TEST_CASE("bipartite repulsion mask") {
    auto g = parse_edge_list("u1 m1\nu2 m1\nu2 m2\n", GraphKind::bipartite).graph;
    auto mask = bipartite_repulsion_mask(g);
    const NodeId u1 = *g.find("u1"), u2 = *g.find("u2"), m1 = *g.find("m1"), m2 = *g.find("m2");
    CHECK_FALSE(mask(u1, u2));
    CHECK_FALSE(mask(m1, m2));
    CHECK(mask(u1, m1));
    CHECK(mask(m2, u1));
    CHECK_THROWS_AS(bipartite_repulsion_mask(Graph::from_edges(GraphKind::undirected, 2, {{0, 1}})), StructuralError);
}

TEST_CASE("masked forces are the gradient of the masked energy") {
    // Attraction is untouched by the mask: the force still matches -grad E.
    std::mt19937_64 rng(3);
    std::vector<Side> sides(16);
    for (std::size_t i = 0; i < 16; ++i) sides[i] = i < 7 ? Side::left : Side::right;
    std::vector<Edge> edges;
    for (NodeId l = 0; l < 7; ++l)
        for (NodeId r = 7; r < 16; ++r)
            if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.3) edges.push_back({l, r});
    auto g = Graph::from_edges(GraphKind::bipartite, 16, edges, sides);
    auto mask = bipartite_repulsion_mask(g);
    std::vector<int> groups(16);
    for (std::size_t i = 0; i < 16; ++i) groups[i] = sides[i] == Side::left ? 0 : 1;

    SfdpParams params;
    auto x = oracle::random_layout(16, 2, 12, 2.0);
    CHECK(system_energy(g, x, params, mask) ==
          doctest::Approx(oracle::energy(edges, x, 0.2, 1.0, 2.0, &groups)).epsilon(1e-12));

    auto f = net_forces(g, x, params, mask);
    const double h = 1e-6;
    double err = 0, scale = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        Layout up = x, down = x;
        up.data()[i] += h;
        down.data()[i] -= h;
        const double grad =
            (oracle::energy(edges, up, 0.2, 1, 2, &groups) - oracle::energy(edges, down, 0.2, 1, 2, &groups)) / (2 * h);
        err += (f[i] + grad) * (f[i] + grad);
        scale += f[i] * f[i];
    }
    CHECK(std::sqrt(err / scale) < 1e-5);
}

TEST_CASE("per-group trees agree with the exact masked sum") {
    auto g = parse_edge_list("a x\nb x\nb y\nc y\nc z\na z\n", GraphKind::bipartite).graph;
    auto groups = bipartite_repulsion_mask(g);
    auto predicate = RepulsionMask::predicate([&](NodeId u, NodeId v) { return groups(u, v); });
    SfdpParams params;
    params.theta = 0;
    params.max_iters = 3;
    auto init = oracle::random_layout(g.node_count(), 2, 4, 2.0);
    auto a = layout_single_level(g, init, params, groups);
    auto b = layout_single_level(g, init, params, predicate);
    for (std::size_t i = 0; i < a.data().size(); ++i) CHECK(a.data()[i] == doctest::Approx(b.data()[i]).epsilon(1e-9));
}

TEST_CASE("Bi-SFDP collapses nodes with identical neighborhoods") {
    // A rigid ring of movies and users; users b and c rate the same three
    // movies. Nothing pushes b away from c, so they settle on one point.
    std::string text;
    for (int i = 0; i < 6; ++i) text += "u" + std::to_string(i) + " m" + std::to_string(i) + "\n";
    for (int i = 0; i < 6; ++i) text += "u" + std::to_string((i + 1) % 6) + " m" + std::to_string(i) + "\n";
    for (const char* user : {"b", "c"})
        for (const char* movie : {"m0", "m2", "m4"}) text += std::string(user) + " " + movie + "\n";
    auto g = parse_edge_list(text, GraphKind::bipartite).graph;
    SfdpParams params;
    params.tol = 1e-5;
    params.max_iters = 3000;
    auto x = bi_sfdp_layout(g, params, BipartiteSolve::single_level);
    CHECK(oracle::dist(x, *g.find("b"), *g.find("c")) < 0.05 * params.K);

    // Without the mask b and c repel each other.
    auto plain = layout_single_level(g, random_layout(g.node_count(), params), params);
    CHECK(oracle::dist(plain, *g.find("b"), *g.find("c")) > 0.2 * params.K);
}

TEST_CASE("directed_to_bipartite") {
    SUBCASE("worked example") {
        auto g = fig6_graph();
        auto split = directed_to_bipartite(g);
        CHECK(split.graph.node_count() == 6);
        CHECK(split.graph.is_bipartite());
        std::vector<std::string> got;
        for (auto e : split.graph.edges()) got.push_back(edge_label(split.graph, e));
        std::sort(got.begin(), got.end());
        CHECK(got == std::vector<std::string>{"A__out-B__in", "B__out-A__in", "B__out-C__in", "C__out-A__in"});
        for (NodeId u = 0; u < 3; ++u) {
            CHECK(split.map.out_index[u] == u);
            CHECK(split.map.in_index[u] == 3 + u);
            CHECK(split.graph.side(split.map.out_index[u]) == Side::left);
            CHECK(split.graph.side(split.map.in_index[u]) == Side::right);
        }
    }
    SUBCASE("single arc leaves two isolated split-nodes") {
        auto g = Graph::from_edges(GraphKind::directed, 2, {{0, 1}});
        auto split = directed_to_bipartite(g);
        CHECK(split.graph.node_count() == 4);
        CHECK(split.graph.edge_count() == 1);
        CHECK(split.graph.degree(split.map.in_index[0]) == 0);
        CHECK(split.graph.degree(split.map.out_index[1]) == 0);
    }
    SUBCASE("edge round trip on random digraphs") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            std::mt19937_64 rng(seed);
            std::set<std::pair<NodeId, NodeId>> arcs;
            std::uniform_int_distribution<NodeId> pick(0, 19);
            for (int i = 0; i < 60; ++i) {
                NodeId a = pick(rng), b = pick(rng);
                if (a != b) arcs.insert({a, b});
            }
            std::vector<Edge> edges;
            for (auto [a, b] : arcs) edges.push_back({a, b});
            auto g = Graph::from_edges(GraphKind::directed, 20, edges);
            auto split = directed_to_bipartite(g);
            CHECK(split.graph.edge_count() == g.edge_count());
            // Merge u_out / u_in back into u.
            std::vector<NodeId> merge(split.graph.node_count());
            for (NodeId u = 0; u < 20; ++u) merge[split.map.out_index[u]] = merge[split.map.in_index[u]] = u;
            std::set<std::pair<NodeId, NodeId>> back;
            for (auto e : split.graph.edges()) back.insert({merge[e.u], merge[e.v]});
            CHECK(back == arcs);
        }
    }
    CHECK_THROWS_AS(directed_to_bipartite(Graph::from_edges(GraphKind::undirected, 2, {{0, 1}})), StructuralError);
}

TEST_CASE("split maps restricted to a component") {
    auto g = Graph::from_edges(GraphKind::directed, 3, {{0, 1}, {1, 2}, {0, 2}});
    auto split = directed_to_bipartite(g);
    std::vector<NodeId> kept;
    auto lcc = largest_connected_component(split.graph, &kept);
    auto map = split.map.restricted(kept);
    // 2 has no out-arcs and 0 has no in-arcs.
    CHECK(map.out_index[2] == kNoNode);
    CHECK(map.in_index[0] == kNoNode);
    for (NodeId u = 0; u < 3; ++u) {
        if (map.out_index[u] != kNoNode) CHECK(lcc.label(map.out_index[u]) == g.label(u) + "__out");
        if (map.in_index[u] != kNoNode) CHECK(lcc.label(map.in_index[u]) == g.label(u) + "__in");
    }
}

TEST_CASE("di_score and fallback") {
    Layout x(4, 2);
    x[1][0] = 1;
    x[2][1] = 2;
    x[3][0] = 3;
    SplitNodeMap map;
    map.out_index = {0, 1};
    map.in_index = {kNoNode, 2};
    CHECK(di_score(x, map, 0, 1) == doctest::Approx(-2.0));
    const double fb = fallback_score(x);
    CHECK(fb == doctest::Approx(-(1 + std::sqrt(13.0))));
    CHECK(di_score(x, map, 1, 0) == fb);
    for (NodeId a = 0; a < 4; ++a)
        for (NodeId b = a + 1; b < 4; ++b) CHECK(distance_score(x, a, b) > fb);

    Layout same(2, 2);
    SplitNodeMap tiny{{0, 1}, {1, 0}};
    CHECK(di_score(same, tiny, 0, 1) == 0);
}

TEST_CASE("Di-SFDP ranks true arcs above their reversals") {
    SfdpParams params;
    SUBCASE("3-cycle") {
        auto g = parse_edge_list("A B\nB C\nC A\n", GraphKind::directed).graph;
        auto model = fit_di_sfdp(g, params, BipartiteSolve::single_level);
        double forward = 0, reverse = 0;
        for (auto e : g.edges()) {
            forward += model.score(e.u, e.v);
            reverse += model.score(e.v, e.u);
        }
        CHECK(forward / 3 > reverse / 3);
        CHECK(model.score(0, 1) != model.score(1, 0));
    }
    SUBCASE("one-way groups") {
        // Every arc points from the first 20 nodes to the last 20.
        std::vector<Edge> edges;
        std::mt19937_64 rng(8);
        for (NodeId a = 0; a < 20; ++a)
            for (NodeId b = 20; b < 40; ++b)
                if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.3) edges.push_back({a, b});
        auto g = Graph::from_edges(GraphKind::directed, 40, edges);
        auto model = fit_di_sfdp(g, params, BipartiteSolve::single_level);
        std::size_t correct = 0;
        for (auto e : g.edges()) correct += model.score(e.u, e.v) > model.score(e.v, e.u);
        CHECK(correct == g.edge_count());
        // The symmetric projection cannot tell the directions apart.
        auto sym = layout_multilevel(g.undirected_projection(), params);
        for (auto e : g.edges())
            CHECK(distance_score(sym, e.u, e.v) == distance_score(sym, e.v, e.u));
    }
}

TEST_CASE("orient_by_degree") {
    SUBCASE("star points at the center") {
        auto g = Graph::from_edges(GraphKind::undirected, 4, {{0, 1}, {0, 2}, {0, 3}});
        auto d = orient_by_degree(g);
        CHECK(d.is_directed());
        CHECK(d.edge_count() == 3);
        for (NodeId leaf = 1; leaf <= 3; ++leaf) CHECK(d.has_edge(leaf, 0));
    }
    SUBCASE("equal degrees go from smaller to larger index") {
        auto g = Graph::from_edges(GraphKind::undirected, 3, {{0, 1}, {1, 2}, {0, 2}});
        auto d = orient_by_degree(g);
        CHECK(d.has_edge(0, 1));
        CHECK(d.has_edge(0, 2));
        CHECK(d.has_edge(1, 2));
    }
    SUBCASE("edge count and labels preserved") {
        auto g = oracle::random_connected_graph(50, 60, 2);
        auto d = orient_by_degree(g);
        CHECK(d.edge_count() == g.edge_count());
        for (auto e : d.edges()) {
            CHECK(g.degree(e.u) <= g.degree(e.v));
            CHECK(g.has_edge(e.u, e.v));
        }
    }
    CHECK_THROWS_AS(orient_by_degree(Graph::from_edges(GraphKind::directed, 2, {{0, 1}})), StructuralError);
}

TEST_CASE("SFDP scores are symmetric") {
    auto g = oracle::random_connected_graph(60, 50, 5);
    SfdpScorer scorer(SfdpParams{});
    scorer.fit(g);
    for (NodeId a = 0; a < 60; a += 7)
        for (NodeId b = a + 1; b < 60; b += 5) CHECK(scorer.score(a, b) == scorer.score(b, a));
}
