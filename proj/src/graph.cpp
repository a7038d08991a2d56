#include "gsim/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "gsim/rng.hpp"

namespace gsim {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u >= n_ || e.v >= n_) {
            throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                        ") out of range for n = " + std::to_string(n_));
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[i].u) + ", " +
                                        std::to_string(edges_[i].v) + ")");
        }
    }
}

double WeightedGraph::total_weight() const {
    double sum = 0.0;
    for (const Edge& e : edges_) sum += e.w;
    return sum;
}

std::vector<std::size_t> WeightedGraph::degrees() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const Edge& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

namespace {

using Pair = std::pair<std::size_t, std::size_t>;

Pair ordered(std::size_t a, std::size_t b) { return a < b ? Pair(a, b) : Pair(b, a); }

std::vector<Edge> assign_weights(const std::vector<Pair>& pairs, double low, double high, Rng& rng) {
    std::vector<Pair> sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    std::vector<Edge> edges;
    edges.reserve(sorted.size());
    for (const auto& [u, v] : sorted) edges.push_back({u, v, uniform(rng, low, high)});
    return edges;
}

// Index of the first pair that is a self-loop or repeats an earlier pair.
std::ptrdiff_t first_bad(const std::vector<Pair>& pairs, std::map<Pair, int>& counts) {
    counts.clear();
    std::ptrdiff_t bad = -1;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const Pair key = ordered(pairs[i].first, pairs[i].second);
        if ((key.first == key.second || counts[key]++ > 0) && bad < 0) bad = static_cast<std::ptrdiff_t>(i);
    }
    return bad;
}

// Pairing model: shuffle degree stubs per vertex and pair them off, then
// repair self-loops and multi-edges by random two-edge swaps.
std::vector<Pair> pair_stubs(std::size_t n, std::size_t degree, Rng& rng) {
    const std::size_t m = n * degree / 2;
    const std::size_t max_swaps = 100 * m + 1000;
    std::map<Pair, int> counts;
    for (;;) {
        std::vector<std::size_t> stubs;
        stubs.reserve(n * degree);
        for (std::size_t v = 0; v < n; ++v) stubs.insert(stubs.end(), degree, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<Pair> pairs(m);
        for (std::size_t i = 0; i < m; ++i) pairs[i] = {stubs[2 * i], stubs[2 * i + 1]};

        std::uniform_int_distribution<std::size_t> pick(0, m - 1);
        for (std::size_t swaps = 0; swaps < max_swaps; ++swaps) {
            const std::ptrdiff_t bad = first_bad(pairs, counts);
            if (bad < 0) return pairs;
            const std::size_t i = static_cast<std::size_t>(bad);
            const std::size_t j = pick(rng);
            if (j == i) continue;
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (rng() & 1) std::swap(c, d);
            const Pair p = ordered(a, c);
            const Pair q = ordered(b, d);
            if (p.first == p.second || q.first == q.second || p == q) continue;
            const Pair old_i = ordered(a, b);
            const Pair old_j = ordered(c, d);
            auto present = [&](const Pair& key) {
                auto it = counts.find(key);
                int count = it == counts.end() ? 0 : it->second;
                if (key == old_i) --count;
                if (key == old_j) --count;
                return count > 0;
            };
            if (present(p) || present(q)) continue;
            pairs[i] = p;
            pairs[j] = q;
        }
    }
}

}  // namespace

WeightedGraph gen_regular(std::size_t n, std::size_t degree, double weight_low, double weight_high,
                          std::uint64_t seed) {
    if (degree == 0 || degree >= n) {
        throw std::invalid_argument("regular graph needs 0 < degree < n");
    }
    if ((n * degree) % 2 != 0) throw std::invalid_argument("n * degree must be even");
    if (!(weight_low < weight_high)) throw std::invalid_argument("weight_low must be < weight_high");

    Rng rng(derive_seed(seed, "graph.regular"));
    const auto pairs = pair_stubs(n, degree, rng);
    return WeightedGraph(n, assign_weights(pairs, weight_low, weight_high, rng));
}

WeightedGraph gen_density(std::size_t n, double d, double weight_low, double weight_high,
                          std::uint64_t seed) {
    if (!(d > 0.0 && d <= 1.0)) throw std::invalid_argument("density must lie in (0, 1]");
    if (n < 2) throw std::invalid_argument("density graph needs n >= 2");
    if (!(weight_low < weight_high)) throw std::invalid_argument("weight_low must be < weight_high");
    const std::size_t all = n * (n - 1) / 2;
    const auto count = static_cast<std::size_t>(std::llround(d * static_cast<double>(all)));
    if (count < 1) throw std::invalid_argument("density too small: no edges");

    std::vector<Pair> candidates;
    candidates.reserve(all);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) candidates.emplace_back(u, v);

    Rng rng(derive_seed(seed, "graph.density"));
    std::vector<Pair> chosen;
    chosen.reserve(count);
    std::sample(candidates.begin(), candidates.end(), std::back_inserter(chosen), count, rng);
    return WeightedGraph(n, assign_weights(chosen, weight_low, weight_high, rng));
}

double density(const WeightedGraph& g) {
    const double n = static_cast<double>(g.n());
    return 2.0 * static_cast<double>(g.edge_count()) / (n * (n - 1.0));
}

}  // namespace gsim
