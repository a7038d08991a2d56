#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsim/graph.hpp"
#include "gsim/rng.hpp"

namespace gsim {

// Spin configuration x in {+1, -1}^n. Stored as doubles so the vector
// kernels consume it directly; phase 0 <-> +1, phase pi <-> -1.
class SpinState {
public:
    SpinState() = default;
    explicit SpinState(std::vector<double> spins);

    static SpinState all_up(std::size_t n);
    static SpinState random(std::size_t n, Rng& rng);
    // Bit i of `index` set means spin i is -1.
    static SpinState from_index(std::size_t n, std::uint64_t index);

    std::size_t size() const noexcept { return x_.size(); }
    int operator[](std::size_t i) const noexcept { return x_[i] > 0 ? 1 : -1; }
    std::span<const double> values() const noexcept { return x_; }

    void flip(std::size_t i) { x_.at(i) = -x_[i]; }
    SpinState negated() const;
    std::uint64_t index() const;
    // '0' for +1, '1' for -1, spin 0 first.
    std::string bitstring() const;

    friend bool operator==(const SpinState&, const SpinState&) = default;

private:
    std::vector<double> x_;
};

// Symmetric interaction matrix with zero diagonal, dense row-major.
class IsingModel {
public:
    IsingModel() = default;
    // Requires exact symmetry and a zero diagonal.
    IsingModel(std::size_t n, std::vector<double> coupling);

    static IsingModel zeros(std::size_t n);

    std::size_t n() const noexcept { return n_; }
    double at(std::size_t i, std::size_t j) const noexcept { return j_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const noexcept { return {j_.data() + i * n_, n_}; }
    std::span<const double> data() const noexcept { return j_; }
    double frobenius_norm() const;

    friend bool operator==(const IsingModel&, const IsingModel&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> j_;
};

// Max-cut coupling: J[u][v] = J[v][u] = -w/2, so x^T J x = -sum_edges w x_u x_v
// and cut = total_weight/2 - H/2 holds exactly.
IsingModel from_graph(const WeightedGraph& g);

// Appends a spin fixed to +1 that carries the external field: J'[i][n] = h_i/2.
IsingModel fold_external_field(const IsingModel& m, std::span<const double> h);

// x^T J x
double quadratic_form(const IsingModel& m, const SpinState& x);

// -x^T J x over all ordered pairs
double hamiltonian(const IsingModel& m, const SpinState& x);

// H(x with spin i flipped) - H(x)
double delta_hamiltonian(const IsingModel& m, const SpinState& x, std::size_t i);

double cut_value(const WeightedGraph& g, const SpinState& x);

inline constexpr std::size_t kMaxBruteForceVertices = 28;

struct MaxCut {
    double best_cut;
    SpinState best_state;
};

// Exhaustive search over 2^(n-1) states with spin 0 pinned to +1; ties go to
// the lowest state index. Result does not depend on `jobs`.
MaxCut brute_force_maxcut(const WeightedGraph& g, unsigned jobs = 1);

// Dense matrix files: JSON {"n", "J"} or CSV rows. Asymmetry beyond
// `tolerance` (scaled by max(1, max|J|)) is rejected; the rest is averaged
// away and the diagonal is zeroed.
IsingModel symmetrize(std::size_t n, std::vector<double> values, double tolerance = 1e-12);
IsingModel parse_matrix_json(std::string_view text);
IsingModel parse_matrix_csv(std::string_view text);
IsingModel read_matrix(const std::filesystem::path& path);
std::string matrix_to_json(const IsingModel& m);
std::string matrix_to_csv(const IsingModel& m);

}  // namespace gsim
