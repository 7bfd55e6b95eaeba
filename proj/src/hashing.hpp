#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>

namespace springlp::detail {

/// splitmix64 finalizer.
inline std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_keys(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0, std::uint64_t d = 0) noexcept {
    return mix64(a ^ mix64(b ^ mix64(c ^ mix64(d))));
}

/// Uniform in [0, 1).
inline double unit_uniform(std::uint64_t h) noexcept { return static_cast<double>(h >> 11) * 0x1.0p-53; }

/// Deterministic direction drawn from a key (Box-Muller on hashed uniforms).
inline void unit_vector(std::uint64_t key, std::span<double> out) noexcept {
    double norm = 0;
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double a = unit_uniform(mix64(key + 2 * k)) + 0x1.0p-54;
        const double b = unit_uniform(mix64(key + 2 * k + 1));
        out[k] = std::sqrt(-2.0 * std::log(a)) * std::cos(2.0 * std::numbers::pi * b);
        norm += out[k] * out[k];
    }
    norm = std::sqrt(norm);
    if (norm == 0) {
        out[0] = 1;
        return;
    }
    for (double& x : out) x /= norm;
}

}  // namespace springlp::detail
