#pragma once

// First-order Shannon entropy (bits) and Onicescu informational energy
// (sum of squared probabilities). Zero-weight symbols contribute nothing.

#include <cmath>
#include <cstdint>
#include <span>

#include "error.hpp"
#include "frequency.hpp"

namespace lexigrid {

namespace detail {

inline std::uint64_t checked_total(std::span<const std::uint64_t> weights) {
    std::uint64_t t = 0;
    for (auto w : weights) t += w;
    if (t == 0) throw Error(Errc::empty_input, "no observations");
    return t;
}

} // namespace detail

inline double entropy_bits(std::span<const std::uint64_t> weights) {
    const auto total = static_cast<double>(detail::checked_total(weights));
    double h = 0.0;
    for (auto w : weights) {
        if (w == 0) continue;
        const double p = static_cast<double>(w) / total;
        h -= p * std::log2(p);
    }
    return h;
}

inline double informational_energy(std::span<const std::uint64_t> weights) {
    const auto total = static_cast<double>(detail::checked_total(weights));
    double e = 0.0;
    for (auto w : weights) {
        const double p = static_cast<double>(w) / total;
        e += p * p;
    }
    return e;
}

inline double entropy_bits(const FrequencyTable& table) { return entropy_bits(table.counts()); }
inline double informational_energy(const FrequencyTable& table) { return informational_energy(table.counts()); }

} // namespace lexigrid
