#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsim/graph.hpp"
#include "gsim/ising.hpp"
#include "gsim/rng.hpp"

namespace gsim::testing {

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1.0});
}

// Symmetric, zero diagonal, entries U(low, high).
inline IsingModel random_model(std::size_t n, Rng& rng, double low = -1.0, double high = 1.0) {
    std::vector<double> j(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c) j[r * n + c] = j[c * n + r] = uniform(rng, low, high);
    return IsingModel(n, std::move(j));
}

inline WeightedGraph random_graph(std::size_t n, Rng& rng, double p = 0.5) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) edges.push_back({u, v, uniform(rng, -1.0, 2.0)});
    return WeightedGraph(n, std::move(edges));
}

inline std::size_t pick(Rng& rng, std::size_t low, std::size_t high) {
    return std::uniform_int_distribution<std::size_t>(low, high)(rng);
}

}  // namespace gsim::testing
