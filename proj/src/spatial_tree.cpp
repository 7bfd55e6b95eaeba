#include "springlp/spatial_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "springlp/errors.hpp"

namespace springlp {

SpatialTree SpatialTree::build(const Layout& layout) {
    std::vector<NodeId> all(layout.size());
    std::iota(all.begin(), all.end(), NodeId{0});
    return build(layout, all);
}

SpatialTree SpatialTree::build(const Layout& layout, std::span<const NodeId> members) {
    if (layout.dim() > kMaxDim || layout.dim() < 1)
        throw ParameterError("spatial tree supports 1 to 3 dimensions, got " + std::to_string(layout.dim()));

    SpatialTree tree;
    tree.dim_ = layout.dim();
    tree.point_count_ = members.size();

    Cell root;
    std::array<double, kMaxDim> hi{};
    for (int k = 0; k < tree.dim_; ++k) {
        root.lower[k] = std::numeric_limits<double>::infinity();
        hi[k] = -std::numeric_limits<double>::infinity();
    }
    for (NodeId id : members) {
        auto x = layout[id];
        for (int k = 0; k < tree.dim_; ++k) {
            root.lower[k] = std::min(root.lower[k], x[k]);
            hi[k] = std::max(hi[k], x[k]);
        }
    }
    if (members.empty()) root.lower.fill(0.0);
    for (int k = 0; k < tree.dim_; ++k) root.width = std::max(root.width, hi[k] - root.lower[k]);
    if (!(root.width > 0)) root.width = 1.0;

    tree.cells_.reserve(2 * members.size() + 1);
    tree.cells_.push_back(std::move(root));
    for (NodeId id : members) tree.insert(0, id, layout);

    // Children always follow their parent, so a reverse sweep is post-order.
    for (auto c = static_cast<std::ptrdiff_t>(tree.cells_.size()) - 1; c >= 0; --c) {
        Cell& cell = tree.cells_[static_cast<std::size_t>(c)];
        std::array<double, kMaxDim> weighted{};
        double mass = 0;
        if (cell.is_leaf()) {
            for (NodeId id : cell.points) {
                auto x = layout[id];
                for (int k = 0; k < tree.dim_; ++k) weighted[k] += x[k];
                mass += 1;
            }
        } else {
            for (int i = 0; i < tree.arity(); ++i) {
                const Cell& child = tree.cells_[static_cast<std::size_t>(cell.first_child + i)];
                for (int k = 0; k < tree.dim_; ++k) weighted[k] += child.center_of_mass[k] * child.mass;
                mass += child.mass;
            }
        }
        cell.mass = mass;
        for (int k = 0; k < tree.dim_; ++k) cell.center_of_mass[k] = mass > 0 ? weighted[k] / mass : 0.0;

        const int dim = tree.dim_;
        auto add_moment = [&](std::span<const double> at, double m) {
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b)
                    cell.moment[a * kMaxDim + b] +=
                        m * (at[a] - cell.center_of_mass[a]) * (at[b] - cell.center_of_mass[b]);
        };
        cell.moment.fill(0.0);
        if (cell.is_leaf()) {
            for (NodeId id : cell.points) add_moment(layout[id], 1.0);
        } else {
            for (int i = 0; i < tree.arity(); ++i) {
                const Cell& child = tree.cells_[static_cast<std::size_t>(cell.first_child + i)];
                if (child.mass == 0) continue;
                for (std::size_t k = 0; k < cell.moment.size(); ++k) cell.moment[k] += child.moment[k];
                add_moment(std::span<const double>(child.center_of_mass.data(), static_cast<std::size_t>(dim)),
                           child.mass);
            }
        }
    }
    return tree;
}

std::int32_t SpatialTree::child_for(const Cell& cell, std::span<const double> x) const noexcept {
    std::int32_t index = 0;
    const double half = cell.width / 2;
    for (int k = 0; k < dim_; ++k)
        if (x[k] >= cell.lower[k] + half) index |= (1 << k);
    return cell.first_child + index;
}

void SpatialTree::split(std::int32_t c) {
    const auto first = static_cast<std::int32_t>(cells_.size());
    const auto lower = cells_[c].lower;
    const double width = cells_[c].width;
    const int depth = cells_[c].depth;
    for (int i = 0; i < arity(); ++i) {
        Cell child;
        child.width = width / 2;
        child.depth = depth + 1;
        for (int k = 0; k < dim_; ++k) child.lower[k] = lower[k] + ((i >> k) & 1 ? child.width : 0.0);
        cells_.push_back(std::move(child));
    }
    cells_[c].first_child = first;
}

void SpatialTree::insert(std::int32_t c, NodeId id, const Layout& layout) {
    auto x = layout[id];
    while (true) {
        if (cells_[c].is_leaf()) {
            if (cells_[c].points.empty() || cells_[c].depth >= kMaxDepth) {
                cells_[c].points.push_back(id);
                return;
            }
            std::vector<NodeId> moved = std::move(cells_[c].points);
            cells_[c].points.clear();
            split(c);
            for (NodeId other : moved) insert(child_for(cells_[c], layout[other]), other, layout);
        }
        c = child_for(cells_[c], x);
    }
}

bool SpatialTree::contains(const Cell& cell, std::span<const double> x) const noexcept {
    // Halving leaves child bounds a few ulps off the parent's.
    for (int k = 0; k < dim_; ++k) {
        const double slack = 4 * std::numeric_limits<double>::epsilon() * (std::abs(cell.lower[k]) + cell.width);
        if (x[k] < cell.lower[k] - slack || x[k] > cell.lower[k] + cell.width + slack) return false;
    }
    return true;
}

SpatialTree build_spatial_tree(const Layout& layout) { return SpatialTree::build(layout); }

}  // namespace springlp
