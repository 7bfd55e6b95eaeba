#include "springlp/layout.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "springlp/errors.hpp"

namespace springlp {

Layout::Layout(std::size_t node_count, int dim) : dim_(dim) {
    if (dim < 1) throw ParameterError("layout dimension must be at least 1");
    coords_.assign(node_count * static_cast<std::size_t>(dim), 0.0);
}

bool Layout::all_finite() const noexcept {
    for (double c : coords_)
        if (!std::isfinite(c)) return false;
    return true;
}

double distance(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

void write_layout(std::ostream& out, const Layout& layout, std::span<const std::string> labels,
                  std::uint64_t seed) {
    if (labels.size() != layout.size()) throw ParameterError("label count does not match layout size");
    out << "# dim=" << layout.dim() << " seed=" << seed << '\n';
    std::ostringstream line;
    line << std::setprecision(17);
    for (std::size_t i = 0; i < layout.size(); ++i) {
        line.str({});
        line << labels[i];
        for (double x : layout[i]) line << ' ' << x;
        out << line.str() << '\n';
    }
}

LabeledLayout read_layout(std::istream& in) {
    LabeledLayout result;
    std::string line;
    std::size_t lineno = 0;
    int dim = 0;
    std::vector<double> coords;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (line[0] == '#') {
            std::string token;
            while (fields >> token) {
                if (token.rfind("dim=", 0) == 0) dim = std::stoi(token.substr(4));
                if (token.rfind("seed=", 0) == 0) result.seed = std::stoull(token.substr(5));
            }
            continue;
        }
        if (dim < 1) throw ParseError("layout header with dim=<d> must precede coordinates", lineno);
        std::string label;
        fields >> label;
        for (int k = 0; k < dim; ++k) {
            double x;
            if (!(fields >> x)) throw ParseError("expected " + std::to_string(dim) + " coordinates", lineno);
            coords.push_back(x);
        }
        result.labels.push_back(std::move(label));
    }
    if (dim < 1) throw ParseError("missing layout header", 0);
    result.layout = Layout(result.labels.size(), dim);
    std::copy(coords.begin(), coords.end(), result.layout.data().begin());
    return result;
}

}  // namespace springlp
