#include "springlp/sfdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "springlp/errors.hpp"
#include "springlp/union_find.hpp"
#include "hashing.hpp"

namespace springlp {

void SfdpParams::validate() const {
    auto positive = [](double x, const char* name) {
        if (!(x > 0) || !std::isfinite(x)) throw ParameterError(std::string(name) + " must be positive and finite");
    };
    positive(C, "C");
    positive(K, "K");
    positive(p, "p");
    if (!(theta >= 0) || !std::isfinite(theta)) throw ParameterError("theta must be non-negative and finite");
    positive(step_init, "step_init");
    positive(tol, "tol");
    if (!(cooling > 0 && cooling < 1)) throw ParameterError("cooling must lie in (0, 1)");
    if (dim < 1) throw ParameterError("dim must be at least 1");
    if (max_iters < 1) throw ParameterError("max_iters must be at least 1");
    if (coarsen_threshold < 1) throw ParameterError("coarsen_threshold must be at least 1");
}

RepulsionMask RepulsionMask::between_groups(std::vector<std::uint32_t> group) {
    RepulsionMask mask;
    mask.mode_ = Mode::between_groups;
    mask.group_ = std::move(group);
    return mask;
}

RepulsionMask RepulsionMask::predicate(std::function<bool(NodeId, NodeId)> repels) {
    RepulsionMask mask;
    mask.mode_ = Mode::predicate;
    mask.predicate_ = std::move(repels);
    return mask;
}

bool RepulsionMask::operator()(NodeId u, NodeId v) const {
    switch (mode_) {
        case Mode::all_pairs: return u != v;
        case Mode::between_groups: return group_.at(u) != group_.at(v);
        case Mode::predicate: return u != v && predicate_(u, v);
    }
    return true;
}

// ---------------------------------------------------------------------------

std::vector<double> attractive_force(std::span<const double> x_u, std::span<const double> x_v, double K) {
    if (x_u.size() != x_v.size()) throw ParameterError("dimension mismatch");
    double d = distance(x_u, x_v);
    if (d == 0) throw SingularityError("attractive force between coincident points");
    std::vector<double> f(x_u.size());
    const double scale = d / K;  // (d^2/K) / d
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = (x_v[k] - x_u[k]) * scale;
    return f;
}

std::vector<double> repulsive_force(std::span<const double> x_u, std::span<const double> x_v, double C,
                                    double K, double p) {
    if (x_u.size() != x_v.size()) throw ParameterError("dimension mismatch");
    double d = distance(x_u, x_v);
    if (d == 0) throw SingularityError("repulsive force between coincident points");
    std::vector<double> f(x_u.size());
    const double scale = C * std::pow(K, 1 + p) / std::pow(d, p + 1);
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = (x_u[k] - x_v[k]) * scale;
    return f;
}

namespace {

/// Pairwise repulsion kernel with its potential.
struct Repulsion {
    double ckp;  // C * K^(1+p)
    double p;
    double jitter_distance;
    std::uint64_t seed;
    bool p_is_two;
    bool p_is_one;

    Repulsion(const SfdpParams& params)
        : ckp(params.C * std::pow(params.K, 1 + params.p)),
          p(params.p),
          jitter_distance(1e-6 * params.K),
          seed(params.seed),
          p_is_two(params.p == 2.0),
          p_is_one(params.p == 1.0) {}

    /// Force magnitude divided by distance.
    double scale(double d2, double d) const {
        if (p_is_two) return ckp / (d2 * d);
        return ckp / std::pow(d, p + 1);
    }

    double potential(double d) const {
        if (p_is_one) return -ckp * std::log(d);
        if (p_is_two) return ckp / d;
        return ckp / ((p - 1) * std::pow(d, p - 1));
    }

    /// Adds the force on u from a mass at `source` and returns its potential.
    /// `partner` identifies a single point for coincidence jitter, kNoNode for a cell.
    double accumulate(NodeId u, std::span<const double> x, std::span<const double> source, double mass,
                      NodeId partner, std::span<double> force, std::size_t& jitters) const {
        const std::size_t dim = x.size();
        double d2 = 0;
        for (std::size_t k = 0; k < dim; ++k) {
            const double diff = x[k] - source[k];
            d2 += diff * diff;
        }
        const double d = std::sqrt(d2);
        if (d == 0) {
            if (partner == kNoNode) return 0;
            ++jitters;
            // Antisymmetric direction shared by the pair, at distance 1e-6*K.
            NodeId lo = std::min(u, partner), hi = std::max(u, partner);
            std::vector<double> dir(dim);
            detail::unit_vector(detail::mix_keys(seed, 0x6a09e667u, lo, hi), dir);
            const double sign = u == lo ? 1.0 : -1.0;
            const double s = mass * scale(jitter_distance * jitter_distance, jitter_distance) * jitter_distance;
            for (std::size_t k = 0; k < dim; ++k) force[k] += sign * dir[k] * s;
            return mass * potential(jitter_distance);
        }
        const double s = mass * scale(d2, d);
        for (std::size_t k = 0; k < dim; ++k) force[k] += (x[k] - source[k]) * s;
        return mass * potential(d);
    }

    /// Second-order correction for a cell treated as one mass at its center.
    /// With g(r) = ckp * r / |r|^q, q = p+1, and Q the cell's second moments:
    /// force += Q:grad grad g / 2, potential -= Q:grad g / 2.
    double quadrupole(std::span<const double> x, const SpatialTree::Cell& cell, double d2, double d,
                      std::span<double> force) const {
        const std::size_t dim = x.size();
        constexpr std::size_t stride = SpatialTree::kMaxDim;
        std::array<double, SpatialTree::kMaxDim> r{}, qr{};
        for (std::size_t k = 0; k < dim; ++k) r[k] = x[k] - cell.center_of_mass[k];
        double trace = 0, rqr = 0;
        for (std::size_t a = 0; a < dim; ++a) {
            trace += cell.moment[a * stride + a];
            for (std::size_t b = 0; b < dim; ++b) qr[a] += cell.moment[a * stride + b] * r[b];
            rqr += r[a] * qr[a];
        }
        const double q = p + 1;
        const double s = scale(d2, d);  // ckp / |r|^q
        const double s2 = s / d2, s4 = s2 / d2;
        for (std::size_t k = 0; k < dim; ++k)
            force[k] += 0.5 * (-q * s2 * (2 * qr[k] + r[k] * trace) + q * (q + 2) * s4 * r[k] * rqr);
        return -0.5 * (s * trace - q * s2 * rqr);
    }
};

/// Barnes-Hut traversal for one node against one tree; returns summed potential.
double traverse(const SpatialTree& tree, const Layout& layout, NodeId u, double theta, const Repulsion& kernel,
                std::span<double> force, std::size_t& jitters, std::vector<std::int32_t>& stack) {
    auto x = layout[u];
    auto cells = tree.cells();
    double potential = 0;
    stack.clear();
    if (cells.empty() || cells.front().mass == 0) return 0;
    stack.push_back(0);
    const int dim = tree.dim();
    while (!stack.empty()) {
        const auto& cell = cells[static_cast<std::size_t>(stack.back())];
        stack.pop_back();
        if (cell.mass == 0) continue;
        if (cell.is_leaf()) {
            for (NodeId v : cell.points) {
                if (v == u) continue;
                potential += kernel.accumulate(u, x, layout[v], 1.0, v, force, jitters);
            }
            continue;
        }
        double d2 = 0;
        for (int k = 0; k < dim; ++k) {
            double diff = x[k] - cell.center_of_mass[k];
            d2 += diff * diff;
        }
        const double d = std::sqrt(d2);
        if (cell.width < theta * d && !tree.contains(cell, x)) {
            potential += kernel.accumulate(u, x, std::span<const double>(cell.center_of_mass.data(), x.size()),
                                           cell.mass, kNoNode, force, jitters);
            potential += kernel.quadrupole(x, cell, d2, d, force);
        } else {
            for (int i = 0; i < tree.arity(); ++i) stack.push_back(cell.first_child + i);
        }
    }
    return potential;
}

/// Edge list with weights used by the optimizer on every level.
struct WeightedEdges {
    std::span<const Edge> edges;
    std::vector<double> weight;
};

WeightedEdges unit_weights(const Graph& g) {
    return {g.edges(), std::vector<double>(g.edge_count(), 1.0)};
}

/// Below this many nodes the pairwise sum is cheaper than a tree and exact.
constexpr std::size_t kExactRepulsionBelow = 64;

/// Force and energy evaluation on a fixed snapshot.
class ForceModel {
public:
    ForceModel(std::size_t n, const WeightedEdges& edges, const SfdpParams& params, const RepulsionMask& mask)
        : n_(n), edges_(edges), params_(params), mask_(mask), kernel_(params) {
        use_tree_ = n > kExactRepulsionBelow && params.dim <= SpatialTree::kMaxDim &&
                    mask.mode() != RepulsionMask::Mode::predicate;
        if (mask.mode() == RepulsionMask::Mode::between_groups) {
            auto groups = mask.groups();
            if (groups.size() != n) throw ParameterError("repulsion mask size does not match graph");
            std::uint32_t count = 0;
            for (auto grp : groups) count = std::max(count, grp + 1);
            members_.assign(count, {});
            for (NodeId u = 0; u < n; ++u) members_[groups[u]].push_back(u);
        }
    }

    /// Fills `force` (n*dim) and returns the energy.
    double evaluate(const Layout& layout, std::vector<double>& force, std::size_t& jitters) const {
        const std::size_t dim = static_cast<std::size_t>(layout.dim());
        force.assign(n_ * dim, 0.0);
        std::vector<double> potential(n_, 0.0);
        std::vector<std::size_t> jitter_count(n_, 0);

        if (use_tree_) {
            std::vector<SpatialTree> trees;
            std::vector<std::uint32_t> tree_group;
            if (mask_.mode() == RepulsionMask::Mode::all_pairs) {
                trees.push_back(SpatialTree::build(layout));
            } else {
                for (std::uint32_t grp = 0; grp < members_.size(); ++grp) {
                    if (members_[grp].empty()) continue;
                    trees.push_back(SpatialTree::build(layout, members_[grp]));
                    tree_group.push_back(grp);
                }
            }
            const bool grouped = !tree_group.empty();
            auto groups = mask_.groups();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_); ++i) {
                thread_local std::vector<std::int32_t> stack;
                const auto u = static_cast<NodeId>(i);
                std::span<double> f(force.data() + u * dim, dim);
                for (std::size_t t = 0; t < trees.size(); ++t) {
                    if (grouped && tree_group[t] == groups[u]) continue;
                    potential[u] += traverse(trees[t], layout, u, params_.theta, kernel_, f, jitter_count[u], stack);
                }
            }
        } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n_); ++i) {
                const auto u = static_cast<NodeId>(i);
                std::span<double> f(force.data() + u * dim, dim);
                for (NodeId v = 0; v < n_; ++v) {
                    if (v == u || !mask_(u, v)) continue;
                    potential[u] += kernel_.accumulate(u, layout[u], layout[v], 1.0, v, f, jitter_count[u]);
                }
            }
        }

        // Every unordered pair was seen from both ends.
        double energy = 0.5 * std::accumulate(potential.begin(), potential.end(), 0.0);
        jitters += std::accumulate(jitter_count.begin(), jitter_count.end(), std::size_t{0});

        const double K = params_.K;
        for (std::size_t e = 0; e < edges_.edges.size(); ++e) {
            const auto [u, v] = edges_.edges[e];
            const double w = edges_.weight[e];
            auto xu = layout[u];
            auto xv = layout[v];
            const double d = distance(xu, xv);
            energy += w * d * d * d / (3 * K);
            if (d == 0) continue;
            const double s = w * d / K;
            for (std::size_t k = 0; k < dim; ++k) {
                const double fk = (xv[k] - xu[k]) * s;
                force[u * dim + k] += fk;
                force[v * dim + k] -= fk;
            }
        }
        return energy;
    }

private:
    std::size_t n_;
    const WeightedEdges& edges_;
    const SfdpParams& params_;
    const RepulsionMask& mask_;
    Repulsion kernel_;
    bool use_tree_ = true;
    std::vector<std::vector<NodeId>> members_;
};

void check_layout(const Graph& g, const Layout& layout) {
    if (layout.size() != g.node_count()) throw ParameterError("layout size does not match graph");
}

Layout solve_level(std::size_t n, const WeightedEdges& edges, Layout pos, const SfdpParams& params,
                   const RepulsionMask& mask, SolveReport* report) {
    params.validate();
    if (pos.dim() != params.dim) throw ParameterError("initial layout dimension differs from params.dim");
    if (pos.size() != n) throw ParameterError("initial layout size does not match graph");
    if (!pos.all_finite()) throw NumericalError("initial layout has non-finite coordinates");

    ForceModel model(n, edges, params, mask);
    const std::size_t dim = static_cast<std::size_t>(params.dim);
    std::vector<double> force;
    SolveReport local;
    local.node_count = n;

    double step = params.step_init;
    int progress = 0;
    double previous = std::numeric_limits<double>::infinity();
    double best_energy = std::numeric_limits<double>::infinity();
    Layout best = pos;
    bool stop = false;

    for (std::size_t iter = 0;; ++iter) {
        const double energy = model.evaluate(pos, force, local.jitter_events);
        if (!std::isfinite(energy) ||
            !std::all_of(force.begin(), force.end(), [](double f) { return std::isfinite(f); }))
            throw NumericalError("non-finite force or energy at iteration " + std::to_string(iter));
        if (iter == 0) local.initial_energy = energy;
        if (energy < best_energy) {
            best_energy = energy;
            best = pos;
        }
        if (stop || iter >= static_cast<std::size_t>(params.max_iters)) {
            local.iterations = iter;
            break;
        }

        if (iter > 0) {
            if (energy < previous) {
                if (++progress >= 5) {
                    progress = 0;
                    step /= params.cooling;
                }
            } else {
                progress = 0;
                step *= params.cooling;
            }
        }
        previous = energy;

        double max_move = 0;
        for (std::size_t u = 0; u < n; ++u) {
            double* f = force.data() + u * dim;
            double norm = 0;
            for (std::size_t k = 0; k < dim; ++k) norm += f[k] * f[k];
            norm = std::sqrt(norm);
            if (norm == 0) continue;
            const double move = std::min(norm, step);
            auto x = pos[u];
            for (std::size_t k = 0; k < dim; ++k) x[k] += f[k] / norm * move;
            max_move = std::max(max_move, move);
        }
        if (max_move < params.tol * params.K) {
            local.converged = true;
            stop = true;
        }
    }

    local.final_energy = best_energy;
    if (report) *report = local;
    return best;
}

/// Matching on a multigraph given as a simple graph plus multiplicities.
CoarseningLevel coarsen_impl(const Graph& g, std::span<const std::uint32_t> multiplicity, Rng& rng) {
    const std::size_t n = g.node_count();
    if (n < 2) throw StructuralError("coarsening needs at least two nodes");
    if (!is_connected(g)) throw StructuralError("coarsening needs a connected graph");

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::shuffle(order.begin(), order.end(), rng);

    std::vector<NodeId> mate(n, kNoNode);
    std::vector<NodeId> candidates;
    for (NodeId u : order) {
        if (mate[u] != kNoNode) continue;
        candidates.clear();
        for (NodeId v : g.neighbors(u))
            if (mate[v] == kNoNode) candidates.push_back(v);
        if (candidates.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        NodeId v = candidates[pick(rng)];
        mate[u] = v;
        mate[v] = u;
    }

    CoarseningLevel level;
    level.mapping.assign(n, kNoNode);
    NodeId next = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (level.mapping[u] != kNoNode) continue;
        level.mapping[u] = next;
        if (mate[u] != kNoNode) level.mapping[mate[u]] = next;
        ++next;
    }

    std::vector<std::pair<Edge, std::uint32_t>> coarse;
    coarse.reserve(g.edge_count());
    auto edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        NodeId a = level.mapping[edges[e].u], b = level.mapping[edges[e].v];
        if (a == b) continue;
        coarse.push_back({{std::min(a, b), std::max(a, b)}, multiplicity.empty() ? 1u : multiplicity[e]});
    }
    std::sort(coarse.begin(), coarse.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::vector<Edge> merged;
    for (const auto& [edge, m] : coarse) {
        if (!merged.empty() && merged.back() == edge) {
            level.multiplicity.back() += m;
        } else {
            merged.push_back(edge);
            level.multiplicity.push_back(m);
        }
    }
    level.graph = Graph::from_edges(GraphKind::undirected, next, std::move(merged));
    return level;
}

}  // namespace

double system_energy(const Graph& g, const Layout& layout, const SfdpParams& params, const RepulsionMask& mask) {
    check_layout(g, layout);
    if (params.p == 1.0) throw ParameterError("energy is undefined for p = 1");
    const double ckp = params.C * std::pow(params.K, 1 + params.p);
    double energy = 0;
    for (const auto& e : g.edges()) {
        double d = distance(layout[e.u], layout[e.v]);
        energy += d * d * d / (3 * params.K);
    }
    for (NodeId u = 0; u < layout.size(); ++u) {
        for (NodeId v = u + 1; v < layout.size(); ++v) {
            if (!mask(u, v)) continue;
            double d = distance(layout[u], layout[v]);
            if (d == 0) throw SingularityError("coincident nodes " + g.label(u) + " and " + g.label(v));
            energy += ckp / ((params.p - 1) * std::pow(d, params.p - 1));
        }
    }
    return energy;
}

std::vector<double> net_forces(const Graph& g, const Layout& layout, const SfdpParams& params,
                               const RepulsionMask& mask) {
    check_layout(g, layout);
    SfdpParams exact = params;
    exact.dim = layout.dim();
    auto edges = unit_weights(g);
    // An exact traversal uses the pairwise path.
    RepulsionMask forced = mask.mode() == RepulsionMask::Mode::predicate
                               ? mask
                               : RepulsionMask::predicate([&mask](NodeId u, NodeId v) { return mask(u, v); });
    ForceModel model(g.node_count(), edges, exact, forced);
    std::vector<double> force;
    std::size_t jitters = 0;
    model.evaluate(layout, force, jitters);
    return force;
}

std::vector<double> repulsion_field(const Layout& layout, const SfdpParams& params, const SpatialTree* tree,
                                    std::size_t* jitter_events) {
    const std::size_t n = layout.size();
    const std::size_t dim = static_cast<std::size_t>(layout.dim());
    Repulsion kernel(params);
    std::vector<double> field(n * dim, 0.0);
    std::size_t jitters = 0;
    if (tree) {
        if (tree->point_count() != n || tree->dim() != layout.dim())
            throw ParameterError("spatial tree does not match the layout");
        std::vector<std::int32_t> stack;
        for (NodeId u = 0; u < n; ++u)
            traverse(*tree, layout, u, params.theta, kernel, std::span<double>(field.data() + u * dim, dim),
                     jitters, stack);
    } else {
        for (NodeId u = 0; u < n; ++u) {
            std::span<double> f(field.data() + u * dim, dim);
            for (NodeId v = 0; v < n; ++v)
                if (v != u) kernel.accumulate(u, layout[u], layout[v], 1.0, v, f, jitters);
        }
    }
    if (jitter_events) *jitter_events = jitters;
    return field;
}

CoarseningLevel coarsen(const Graph& g, Rng& rng) {
    if (g.kind() != GraphKind::undirected) return coarsen_impl(g.undirected_projection(), {}, rng);
    return coarsen_impl(g, {}, rng);
}

CoarseningLevel coarsen(const CoarseningLevel& level, Rng& rng) {
    return coarsen_impl(level.graph, level.multiplicity, rng);
}

Layout layout_single_level(const Graph& g, Layout init, const SfdpParams& params, const RepulsionMask& mask,
                           SolveReport* report) {
    auto edges = unit_weights(g);
    return solve_level(g.node_count(), edges, std::move(init), params, mask, report);
}

Layout random_layout(std::size_t node_count, const SfdpParams& params, std::uint64_t stream) {
    Layout layout(node_count, params.dim);
    const double side = params.K * std::sqrt(static_cast<double>(std::max<std::size_t>(node_count, 1)));
    for (std::size_t i = 0; i < node_count; ++i) {
        auto x = layout[i];
        for (int k = 0; k < params.dim; ++k)
            x[k] = side * detail::unit_uniform(detail::mix_keys(params.seed, stream, i, static_cast<std::uint64_t>(k)));
    }
    return layout;
}

Layout layout_multilevel(const Graph& g, const SfdpParams& params, const RepulsionMask& mask,
                         MultilevelReport* report) {
    params.validate();
    if (!is_connected(g)) throw StructuralError("layout_multilevel needs a connected graph; take the LCC first");
    MultilevelReport local;

    // Stop coarsening once a round removes less than a quarter of the nodes.
    constexpr double kMinReduction = 0.75;
    Rng rng(params.seed);
    std::vector<CoarseningLevel> hierarchy;
    const Graph* current = &g;
    while (current->node_count() > params.coarsen_threshold && current->node_count() >= 2) {
        CoarseningLevel next = hierarchy.empty() ? coarsen(g, rng) : coarsen(hierarchy.back(), rng);
        if (static_cast<double>(next.graph.node_count()) > kMinReduction * static_cast<double>(current->node_count()))
            break;
        hierarchy.push_back(std::move(next));
        current = &hierarchy.back().graph;
    }

    // Level index L = hierarchy.size() is the coarsest; 0 is the input graph.
    const Graph& coarsest = hierarchy.empty() ? g : hierarchy.back().graph;
    Layout layout = random_layout(coarsest.node_count(), params, hierarchy.size());

    for (std::size_t level = hierarchy.size() + 1; level-- > 0;) {
        SolveReport solved;
        if (level == 0) {
            auto edges = unit_weights(g);
            layout = solve_level(g.node_count(), edges, std::move(layout), params, mask, &solved);
        } else {
            const auto& lvl = hierarchy[level - 1];
            WeightedEdges edges{lvl.graph.edges(), {lvl.multiplicity.begin(), lvl.multiplicity.end()}};
            layout = solve_level(lvl.graph.node_count(), edges, std::move(layout), params, RepulsionMask::all_pairs(),
                                 &solved);

            // Prolong onto the next finer level.
            const auto& mapping = lvl.mapping;
            Layout finer(mapping.size(), params.dim);
            std::vector<double> offset(static_cast<std::size_t>(params.dim));
            for (std::size_t i = 0; i < mapping.size(); ++i) {
                detail::unit_vector(detail::mix_keys(params.seed, 0xbb67ae85u, level, i), offset);
                auto from = layout[mapping[i]];
                auto to = finer[i];
                for (int k = 0; k < params.dim; ++k) to[k] = from[k] + 0.01 * params.K * offset[k];
            }
            layout = std::move(finer);
        }
        local.levels.push_back(solved);
    }
    if (report) *report = std::move(local);
    return layout;
}

double distance_score(const Layout& layout, NodeId u, NodeId v) { return -distance(layout[u], layout[v]); }

}  // namespace springlp
