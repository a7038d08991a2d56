#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace gsim {

using Rng = std::mt19937_64;

// Derives an independent seed for a named subsystem stream.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
    return derive_seed(derive_seed(seed, label) + index, "index");
}

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double low, double high) {
    return low + (high - low) * uniform01(rng);
}

}  // namespace gsim
