#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace springlp {

/// Disjoint-set forest with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t i) {
        while (parent_[i] != i) {
            parent_[i] = parent_[parent_[i]];
            i = parent_[i];
        }
        return i;
    }

    /// Returns false when i and j were already in the same set.
    bool unite(std::size_t i, std::size_t j) {
        i = find(i);
        j = find(j);
        if (i == j) return false;
        if (size_[i] < size_[j]) std::swap(i, j);
        parent_[j] = i;
        size_[i] += size_[j];
        return true;
    }

    bool connected(std::size_t i, std::size_t j) { return find(i) == find(j); }
    std::size_t set_size(std::size_t i) { return size_[find(i)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

}  // namespace springlp
