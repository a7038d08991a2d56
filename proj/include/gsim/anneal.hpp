#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsim/graph.hpp"
#include "gsim/ising.hpp"
#include "gsim/optics.hpp"
#include "gsim/stats.hpp"

namespace gsim {

// Geometric cooling T_k = t0 * rate^k. Each move flips
// max(flip_floor, round(n * T_k / t0)) distinct spins, capped at n.
struct Schedule {
    double t0 = 1.0;
    double rate = 0.995;
    std::size_t iters = 3000;
    std::size_t flip_floor = 1;

    double temperature(std::size_t k) const;
    std::size_t flips(std::size_t k, std::size_t n) const;
    void validate() const;
};

inline constexpr std::size_t kDefaultIterations = 3000;

// Schedule whose t0 is the span of the evaluator's noiseless HRV over
// `span_samples` random states (1 if that span is zero).
Schedule make_schedule(const HrvEvaluator& evaluator, double rate, std::size_t iters, std::uint64_t seed,
                       std::size_t span_samples = kDefaultSpanSamples);

struct AnnealStep {
    std::size_t iter;
    double temperature;
    std::size_t flips;
    double hrv;  // HRV of the state held after this step
    double cut;
    bool accepted;
    double delta_energy;  // candidate minus current, energy = -HRV
    double draw;          // uniform draw used by the Metropolis test, NaN if none
};

struct AnnealTrace {
    SpinState initial_state;
    std::vector<AnnealStep> steps;
    // Spins flipped by each accepted move, in step order (record_moves only).
    std::vector<std::vector<std::size_t>> accepted_moves;
    SpinState final_state;
    double final_hrv = 0.0;
    double final_cut = 0.0;
};

struct AnnealOptions {
    bool record_moves = false;
};

// Simulated annealing that maximizes the HRV (energy = -HRV). Starts from a
// uniform random state; deterministic in `seed`. Move and noise draws come
// from separate streams derived from the seed.
AnnealTrace anneal(const HrvEvaluator& evaluator, const WeightedGraph& g, const Schedule& s, std::uint64_t seed,
                   AnnealOptions options = {});

// iter,temperature,flips,hrv,cut,accepted
std::string trace_to_csv(const AnnealTrace& trace);

inline constexpr double kOptimumTolerance = 1e-9;

struct ProbabilityEstimate {
    std::size_t hits = 0;
    std::size_t runs = 0;
    double probability = 0.0;
    Interval wilson{0.0, 1.0};
    double optimum = 0.0;
    std::vector<double> final_cuts;
};

// Runs `runs` anneals with seeds master_seed + r and counts final cuts within
// kOptimumTolerance of the optimum (brute force unless supplied).
ProbabilityEstimate estimate_optimal_probability(const HrvEvaluator& evaluator, const WeightedGraph& g,
                                                 const Schedule& s, std::size_t runs, std::uint64_t master_seed,
                                                 unsigned jobs = 1, std::optional<double> optimum = std::nullopt);

}  // namespace gsim
