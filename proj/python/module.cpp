#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "springlp/baselines.hpp"
#include "springlp/errors.hpp"
#include "springlp/eval.hpp"
#include "springlp/graph.hpp"
#include "springlp/scorers.hpp"
#include "springlp/sfdp.hpp"
#include "springlp/variants.hpp"

namespace py = pybind11;
using namespace springlp;

namespace {

py::array_t<double> to_numpy(const Layout& layout) {
    py::array_t<double> out({layout.size(), static_cast<std::size_t>(layout.dim())});
    std::copy(layout.data().begin(), layout.data().end(), out.mutable_data());
    return out;
}

Layout from_numpy(py::array_t<double, py::array::c_style | py::array::forcecast> coords) {
    if (coords.ndim() != 2) throw ParameterError("layout must be a 2-d array (nodes x dim)");
    Layout layout(static_cast<std::size_t>(coords.shape(0)), static_cast<int>(coords.shape(1)));
    std::copy(coords.data(), coords.data() + coords.size(), layout.data().begin());
    return layout;
}

std::vector<Edge> to_edges(const std::vector<std::pair<NodeId, NodeId>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v});
    return edges;
}

std::vector<std::pair<NodeId, NodeId>> to_tuples(std::span<const NodePair> pairs) {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(pairs.size());
    for (const auto& p : pairs) out.emplace_back(p.u, p.v);
    return out;
}

py::dict stats_dict(const TrialStats& stats) {
    py::dict d;
    d["auc_values"] = stats.auc_values;
    d["mean"] = stats.mean;
    d["std"] = stats.std;
    d["ci95"] = stats.ci95_halfwidth;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spring-electrical embeddings for link prediction";

    static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<StructuralError>(m, "StructuralError", error.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<SingularityError>(m, "SingularityError", error.ptr());
    py::register_exception<NumericalError>(m, "NumericalError", error.ptr());

    py::enum_<GraphKind>(m, "GraphKind")
        .value("undirected", GraphKind::undirected)
        .value("directed", GraphKind::directed)
        .value("bipartite", GraphKind::bipartite);

    py::enum_<Side>(m, "Side").value("left", Side::left).value("right", Side::right);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](GraphKind kind, std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
               std::vector<Side> partition) { return Graph::from_edges(kind, n, to_edges(edges), std::move(partition)); },
            py::arg("kind"), py::arg("node_count"), py::arg("edges"), py::arg("partition") = std::vector<Side>{})
        .def_static(
            "parse",
            [](const std::string& text, GraphKind kind) { return parse_edge_list(text, kind).graph; },
            py::arg("text"), py::arg("kind") = GraphKind::undirected,
            "Parse an edge list; duplicates and self-loops are dropped.")
        .def_property_readonly("kind", &Graph::kind)
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("labels", [](const Graph& g) {
            return std::vector<std::string>(g.labels().begin(), g.labels().end());
        })
        .def("edges", [](const Graph& g) {
            std::vector<std::pair<NodeId, NodeId>> out;
            for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
            return out;
        })
        .def("neighbors", [](const Graph& g, NodeId u) {
            auto n = g.neighbors(u);
            return std::vector<NodeId>(n.begin(), n.end());
        })
        .def("degree", [](const Graph& g, NodeId u) { return g.degree(u); })
        .def("has_edge", &Graph::has_edge)
        .def("find", &Graph::find)
        .def("to_edge_list", &to_edge_list)
        .def("__len__", &Graph::node_count)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "<Graph " << to_string(g.kind()) << " nodes=" << g.node_count() << " edges=" << g.edge_count() << ">";
            return s.str();
        });

    m.def("largest_connected_component", [](const Graph& g) { return largest_connected_component(g); });
    m.def("is_connected", &is_connected);
    m.def("icosphere", &generate_icosphere_graph, py::arg("subdivisions"));
    m.def("orient_by_degree", &orient_by_degree);
    m.def("directed_to_bipartite", [](const Graph& g) { return directed_to_bipartite(g).graph; });

    py::class_<SfdpParams>(m, "SfdpParams")
        .def(py::init<>())
        .def(py::init([](double C, double K, double p, int dim, double theta, double step_init, double cooling,
                         double tol, int max_iters, std::size_t coarsen_threshold, std::uint64_t seed) {
                 SfdpParams s{C, K, p, dim, theta, step_init, cooling, tol, max_iters, coarsen_threshold, seed};
                 s.validate();
                 return s;
             }),
             py::kw_only(), py::arg("C") = 0.2, py::arg("K") = 1.0, py::arg("p") = 2.0, py::arg("dim") = 2,
             py::arg("theta") = 1.2, py::arg("step_init") = 1.0, py::arg("cooling") = 0.9, py::arg("tol") = 0.01,
             py::arg("max_iters") = 500, py::arg("coarsen_threshold") = 50, py::arg("seed") = 1)
        .def_readwrite("C", &SfdpParams::C)
        .def_readwrite("K", &SfdpParams::K)
        .def_readwrite("p", &SfdpParams::p)
        .def_readwrite("dim", &SfdpParams::dim)
        .def_readwrite("theta", &SfdpParams::theta)
        .def_readwrite("step_init", &SfdpParams::step_init)
        .def_readwrite("cooling", &SfdpParams::cooling)
        .def_readwrite("tol", &SfdpParams::tol)
        .def_readwrite("max_iters", &SfdpParams::max_iters)
        .def_readwrite("coarsen_threshold", &SfdpParams::coarsen_threshold)
        .def_readwrite("seed", &SfdpParams::seed);

    m.def(
        "embed",
        [](const Graph& g, const SfdpParams& params) {
            py::gil_scoped_release release;
            Layout layout = layout_multilevel(g, params);
            py::gil_scoped_acquire acquire;
            return to_numpy(layout);
        },
        py::arg("graph"), py::arg("params") = SfdpParams{}, "Multilevel SFDP layout as an (n, dim) array.");
    m.def(
        "embed_bipartite",
        [](const Graph& g, const SfdpParams& params, bool multilevel) {
            return to_numpy(bi_sfdp_layout(g, params, multilevel ? BipartiteSolve::multilevel : BipartiteSolve::single_level));
        },
        py::arg("graph"), py::arg("params") = SfdpParams{}, py::arg("multilevel") = false);
    m.def(
        "energy",
        [](const Graph& g, py::array_t<double> coords, const SfdpParams& params) {
            return system_energy(g, from_numpy(coords), params);
        },
        py::arg("graph"), py::arg("layout"), py::arg("params") = SfdpParams{});
    m.def(
        "forces",
        [](const Graph& g, py::array_t<double> coords, const SfdpParams& params) {
            Layout layout = from_numpy(coords);
            auto f = net_forces(g, layout, params);
            py::array_t<double> out({layout.size(), static_cast<std::size_t>(layout.dim())});
            std::copy(f.begin(), f.end(), out.mutable_data());
            return out;
        },
        py::arg("graph"), py::arg("layout"), py::arg("params") = SfdpParams{});

    m.def("common_neighbors", &common_neighbors);
    m.def(
        "adamic_adar",
        [](const Graph& g, NodeId u, NodeId v, bool log_weight) {
            return adamic_adar(g, u, v, log_weight ? AdamicAdarWeight::inverse_log : AdamicAdarWeight::inverse_degree);
        },
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("log_weight") = false);
    m.def("preferential_attachment", &preferential_attachment);

    m.def(
        "auc",
        [](const std::vector<double>& pos, const std::vector<double>& neg, const std::string& tie_policy) {
            return auc(pos, neg, parse_tie_policy(tie_policy));
        },
        py::arg("positives"), py::arg("negatives"), py::arg("tie_policy") = "strict");

    m.def(
        "split",
        [](const Graph& g, double fraction, std::size_t trial, std::uint64_t seed, const std::string& regime) {
            TrialOptions opts;
            opts.fraction = fraction;
            opts.base_seed = seed;
            opts.regime = parse_negative_regime(regime);
            EvalSplit s = make_trial_split(g, opts, trial);
            py::dict d;
            std::vector<std::pair<NodeId, NodeId>> train;
            for (const auto& e : s.train_edges) train.emplace_back(e.u, e.v);
            d["train_edges"] = train;
            d["positives"] = to_tuples(s.positives);
            d["negatives"] = to_tuples(s.negatives);
            d["seed"] = s.seed;
            d["warnings"] = s.warnings;
            return d;
        },
        py::arg("graph"), py::arg("fraction") = 0.1, py::arg("trial") = 0, py::arg("seed") = 1,
        py::arg("regime") = "uniform");

    m.def(
        "evaluate",
        [](const Graph& g, const std::string& scorer, double fraction, std::size_t trials, const std::string& regime,
           const std::string& tie_policy, std::uint64_t seed, const SfdpParams& params) {
            ScorerConfig config;
            config.name = scorer;
            config.sfdp = params;
            TrialOptions opts;
            opts.fraction = fraction;
            opts.trials = trials;
            opts.regime = parse_negative_regime(regime);
            opts.tie_policy = parse_tie_policy(tie_policy);
            opts.base_seed = seed;
            auto factory = make_scorer_factory(config, g);
            TrialStats stats;
            {
                py::gil_scoped_release release;
                stats = run_trials(g, factory, opts);
            }
            return stats_dict(stats);
        },
        py::arg("graph"), py::arg("scorer") = "sfdp", py::arg("fraction") = 0.1, py::arg("trials") = 10,
        py::arg("regime") = "uniform", py::arg("tie_policy") = "strict", py::arg("seed") = 1,
        py::arg("params") = SfdpParams{},
        "Mean AUC over seeded trials. Returns auc_values, mean, std and ci95.");

    m.attr("scorers") = scorer_names();
}
