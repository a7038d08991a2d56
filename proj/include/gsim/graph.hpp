#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gsim {

struct Edge {
    std::size_t u;
    std::size_t v;
    double w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected weighted simple graph. Edges are stored with u < v, sorted by
// (u, v); construction rejects self-loops, duplicates and out-of-range ids.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t n, std::vector<Edge> edges);

    std::size_t n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    double total_weight() const;
    std::vector<std::size_t> degrees() const;

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

// Random `degree`-regular graph (pairing model with edge-swap repair) with
// weights i.i.d. uniform on [weight_low, weight_high).
WeightedGraph gen_regular(std::size_t n, std::size_t degree, double weight_low,
                          double weight_high, std::uint64_t seed);

// round(d * n(n-1)/2) distinct edges sampled uniformly without replacement.
WeightedGraph gen_density(std::size_t n, double d, double weight_low, double weight_high,
                          std::uint64_t seed);

// 2E / (n(n-1))
double density(const WeightedGraph& g);

enum class GraphFormat { rudy, json };

// Picks the format from the file extension (.json, anything else is rudy).
GraphFormat graph_format_for(const std::filesystem::path& path);

std::string to_rudy(const WeightedGraph& g);
WeightedGraph parse_rudy(std::string_view text);
std::string to_json(const WeightedGraph& g);
WeightedGraph parse_graph_json(std::string_view text);

WeightedGraph read_graph(const std::filesystem::path& path, GraphFormat format);
void write_graph(const WeightedGraph& g, const std::filesystem::path& path, GraphFormat format);

}  // namespace gsim
