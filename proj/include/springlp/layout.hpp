#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace springlp {

/// Node coordinates in R^dim, stored row-major.
class Layout {
public:
    Layout() = default;
    Layout(std::size_t node_count, int dim);

    std::size_t size() const noexcept { return dim_ ? coords_.size() / static_cast<std::size_t>(dim_) : 0; }
    int dim() const noexcept { return dim_; }

    std::span<double> operator[](std::size_t i) {
        return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }
    std::span<const double> operator[](std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_)};
    }

    std::span<double> data() noexcept { return coords_; }
    std::span<const double> data() const noexcept { return coords_; }

    bool all_finite() const noexcept;

    friend bool operator==(const Layout&, const Layout&) = default;

private:
    int dim_ = 0;
    std::vector<double> coords_;
};

double distance(std::span<const double> a, std::span<const double> b);

/// "# dim=<d> seed=<s>" followed by "label x1 ... xd" per node, 17 significant digits.
void write_layout(std::ostream& out, const Layout& layout, std::span<const std::string> labels,
                  std::uint64_t seed);

struct LabeledLayout {
    std::vector<std::string> labels;
    Layout layout;
    std::uint64_t seed = 0;
};

LabeledLayout read_layout(std::istream& in);

}  // namespace springlp
