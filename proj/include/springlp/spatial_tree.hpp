#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "springlp/graph.hpp"
#include "springlp/layout.hpp"

namespace springlp {

/// Barnes-Hut tree: a 2^dim-ary partition of a cube around the points
/// (quadtree in 2d, octree in 3d, binary tree in 1d).
///
/// A leaf holds at most one point unless it sits at the depth cap, where
/// points are bucketed. Only dim <= 3 is supported.
class SpatialTree {
public:
    static constexpr int kMaxDim = 3;
    static constexpr int kMaxDepth = 64;
    static constexpr std::int32_t kNoChild = -1;

    struct Cell {
        std::array<double, kMaxDim> lower{};  // cube corner
        double width = 0;                     // cube side
        std::array<double, kMaxDim> center_of_mass{};
        double mass = 0;
        // Second moments about the center of mass, row-major dim x dim.
        std::array<double, kMaxDim * kMaxDim> moment{};
        int depth = 0;
        std::int32_t first_child = kNoChild;  // children are contiguous
        std::vector<NodeId> points;           // leaf contents

        bool is_leaf() const noexcept { return first_child == kNoChild; }
    };

    /// Tree over every node of the layout.
    static SpatialTree build(const Layout& layout);
    /// Tree over a subset of nodes.
    static SpatialTree build(const Layout& layout, std::span<const NodeId> members);

    int dim() const noexcept { return dim_; }
    int arity() const noexcept { return 1 << dim_; }
    std::span<const Cell> cells() const noexcept { return cells_; }
    const Cell& root() const { return cells_.front(); }
    std::size_t point_count() const noexcept { return point_count_; }

    /// True when `x` lies in the closed cube of `cell`.
    bool contains(const Cell& cell, std::span<const double> x) const noexcept;

private:
    void insert(std::int32_t cell, NodeId id, const Layout& layout);
    void split(std::int32_t cell);
    std::int32_t child_for(const Cell& cell, std::span<const double> x) const noexcept;

    int dim_ = 0;
    std::size_t point_count_ = 0;
    std::vector<Cell> cells_;
};

/// Convenience wrapper; throws ParameterError when layout.dim() > 3.
SpatialTree build_spatial_tree(const Layout& layout);

}  // namespace springlp
