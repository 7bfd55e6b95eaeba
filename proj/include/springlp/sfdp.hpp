#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <vector>

#include "springlp/graph.hpp"
#include "springlp/layout.hpp"
#include "springlp/spatial_tree.hpp"

namespace springlp {

using Rng = std::mt19937_64;

/// Spring-electrical model and optimizer settings. All defaults live here.
struct SfdpParams {
    double C = 0.2;      // repulsion strength
    double K = 1.0;      // natural spring length
    double p = 2.0;      // repulsive exponent
    int dim = 2;
    double theta = 1.2;  // Barnes-Hut opening criterion (cell width / distance); graphs under 64 nodes are exact
    double step_init = 1.0;
    double cooling = 0.9;
    double tol = 0.01;   // convergence threshold on max displacement, in units of K
    int max_iters = 500; // per level
    std::size_t coarsen_threshold = 50;
    std::uint64_t seed = 1;

    /// Throws ParameterError on a non-positive scale, cooling outside (0,1), ...
    void validate() const;
};

/// Which pairs of nodes repel each other.
class RepulsionMask {
public:
    enum class Mode { all_pairs, between_groups, predicate };

    RepulsionMask() = default;
    static RepulsionMask all_pairs() { return {}; }
    /// Pairs repel iff their group ids differ.
    static RepulsionMask between_groups(std::vector<std::uint32_t> group);
    /// Arbitrary predicate; forces exact O(n^2) repulsion.
    static RepulsionMask predicate(std::function<bool(NodeId, NodeId)> repels);

    Mode mode() const noexcept { return mode_; }
    bool operator()(NodeId u, NodeId v) const;
    std::span<const std::uint32_t> groups() const noexcept { return group_; }

private:
    Mode mode_ = Mode::all_pairs;
    std::vector<std::uint32_t> group_;
    std::function<bool(NodeId, NodeId)> predicate_;
};

// --- force law ------------------------------------------------------------

/// Force on u from the spring to v: magnitude d^2/K, pointing from u to v.
std::vector<double> attractive_force(std::span<const double> x_u, std::span<const double> x_v, double K);

/// Force on u from the charge at v: magnitude C*K^(1+p)/d^p, pointing away from v.
std::vector<double> repulsive_force(std::span<const double> x_u, std::span<const double> x_v, double C,
                                    double K, double p);

/// Spring-electrical energy: edge terms d^3/(3K) plus, over unordered
/// repelling pairs, C*K^(1+p) / ((p-1) d^(p-1)). Exact O(n^2).
double system_energy(const Graph& g, const Layout& layout, const SfdpParams& params,
                     const RepulsionMask& mask = {});

/// Net force per node (attraction over edges plus exact repulsion), flattened n*dim.
std::vector<double> net_forces(const Graph& g, const Layout& layout, const SfdpParams& params,
                               const RepulsionMask& mask = {});

/// Sum of repulsive forces on every node, flattened n*dim. Exact when `tree`
/// is null, Barnes-Hut otherwise. Coincident points are separated by a
/// deterministic 1e-6*K jitter; `jitter_events` counts them.
std::vector<double> repulsion_field(const Layout& layout, const SfdpParams& params,
                                    const SpatialTree* tree = nullptr, std::size_t* jitter_events = nullptr);

// --- multilevel -------------------------------------------------------------

struct CoarseningLevel {
    Graph graph;                             // undirected coarse graph
    std::vector<NodeId> mapping;             // fine node -> coarse node
    std::vector<std::uint32_t> multiplicity; // aligned with graph.edges()
};

/// One round of randomized maximal matching. Requires a connected graph with >= 2 nodes.
CoarseningLevel coarsen(const Graph& g, Rng& rng);
/// Same, carrying edge multiplicities of an already coarsened level forward.
CoarseningLevel coarsen(const CoarseningLevel& level, Rng& rng);

struct SolveReport {
    std::size_t node_count = 0;
    std::size_t iterations = 0;
    double initial_energy = 0;
    double final_energy = 0;  // energy of the returned layout, Barnes-Hut estimate when a tree is used
    bool converged = false;
    std::size_t jitter_events = 0;
};

/// Adaptive-step descent on one level. Returns the lowest-energy layout visited.
Layout layout_single_level(const Graph& g, Layout init, const SfdpParams& params,
                           const RepulsionMask& mask = {}, SolveReport* report = nullptr);

/// Uniform random positions in a box of side K*sqrt(n) per axis.
Layout random_layout(std::size_t node_count, const SfdpParams& params, std::uint64_t stream = 0);

struct MultilevelReport {
    std::vector<SolveReport> levels;  // coarsest first
};

/// Coarsen until node_count <= coarsen_threshold, solve from the coarsest
/// level up, prolonging with 0.01*K jitter. A non-trivial mask is applied on
/// the finest level only. Requires a connected graph.
Layout layout_multilevel(const Graph& g, const SfdpParams& params, const RepulsionMask& mask = {},
                         MultilevelReport* report = nullptr);

/// Negated Euclidean distance: larger means closer.
double distance_score(const Layout& layout, NodeId u, NodeId v);

}  // namespace springlp
