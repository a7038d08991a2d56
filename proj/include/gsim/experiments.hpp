#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gsim/anneal.hpp"
#include "gsim/graph.hpp"
#include "gsim/ising.hpp"
#include "gsim/optics.hpp"
#include "gsim/stats.hpp"

namespace gsim {

// ---------------------------------------------------------------------------
// HRV <-> Hamiltonian matching

struct MatchRecord {
    std::size_t k = 0;
    double k_over_n = 0.0;
    double rmse = 0.0;
    double rmse_relative = 0.0;  // rmse / span of H over the sample
    LinearFit fit;               // H regressed on -HRV
    double error_ratio = 0.0;
    double tail_frobenius = 0.0;
    std::vector<double> hrv;          // per sampled state
    std::vector<double> hamiltonian;  // per sampled state
};

struct MatchReport {
    std::size_t n = 0;
    std::size_t samples = 0;
    double span = 0.0;
    std::vector<MatchRecord> records;
};

inline constexpr std::size_t kDefaultRmseSamples = 1000;

// One shared sample of uniform random states is scored for every K (K = 0
// means an empty ensemble, HRV = 0).
MatchReport rmse_vs_k(const IsingModel& m, std::span<const std::size_t> ks, std::size_t samples,
                      std::uint64_t seed);

// RMSE = A exp(-B (K/N - D)), canonicalized with D = 0.
struct ExpFit {
    double a = 0.0;
    double b = 0.0;
    double d = 0.0;
    double r2 = 0.0;
    std::size_t points = 0;
    bool decaying = false;
};

// Log-linear least squares on (K/N, rmse). Points at or below 1e-9 of the
// largest rmse are treated as exact zeros and dropped.
ExpFit fit_exponential(std::span<const std::pair<double, double>> points);

// Random instance recipe: regular when `degree` is set, else by density.
struct GraphSpec {
    std::size_t n = 20;
    std::optional<std::size_t> degree;
    std::optional<double> density;
    double weight_low = 0.0;
    double weight_high = 1.0;

    WeightedGraph make(std::uint64_t seed) const;
};

struct RmseCurve {
    std::size_t n = 0;
    double density = 0.0;  // mean realized density
    std::size_t graph_seeds = 0;
    std::vector<std::size_t> ks;
    std::vector<double> mean_rmse;
    std::vector<double> mean_rmse_relative;
    ExpFit fit;  // on mean rmse over K < N
};

inline constexpr std::size_t kDefaultGraphSeeds = 20;

// rmse_vs_k averaged over `graph_seeds` instances drawn from `spec`.
RmseCurve rmse_curve(const GraphSpec& spec, std::span<const std::size_t> ks, std::size_t samples,
                     std::size_t graph_seeds, std::uint64_t seed, unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Annealing studies

struct ScheduleSpec {
    double rate = 0.995;
    std::size_t iters = kDefaultIterations;
    std::size_t flip_floor = 1;
    double t0 = 0.0;  // 0 selects the HRV span estimate
};

// Copies of `g` with the same edges and weights redrawn uniform on
// [low, high); copy i uses the stream derived from (seed, i).
std::vector<WeightedGraph> resample_weights(const WeightedGraph& g, std::size_t count, double low, double high,
                                            std::uint64_t seed);

struct ProbabilityCell {
    double rate = 0.0;
    std::size_t k = 0;
    double level = 0.0;      // noise level (fraction of HRV span)
    double mean_span = 0.0;  // averaged over instances
    double mean_t0 = 0.0;
    std::size_t hits = 0;
    std::size_t runs = 0;
    double probability = 0.0;
    Interval wilson{0.0, 1.0};
};

struct ProbabilityTable {
    std::size_t n = 0;
    std::vector<double> optima;  // brute-force max cut per instance
    std::vector<ProbabilityCell> cells;

    const ProbabilityCell* find(double rate, std::size_t k, double level = 0.0) const;
};

// Optimal-solution probability for every (schedule, K). `runs` are split
// evenly across the instances (earlier instances take the remainder) and run
// r uses seed + r. A K = N reference row is added when missing.
ProbabilityTable probability_vs_k(std::span<const WeightedGraph> instances, std::span<const std::size_t> ks,
                                  std::span<const ScheduleSpec> schedules, std::size_t runs, std::uint64_t seed,
                                  unsigned jobs = 1, Backend backend = Backend::analytic);

// Same protocol with Gaussian HRV noise of sigma = level * span. Level 0
// reproduces probability_vs_k exactly for the same seed.
ProbabilityTable noise_sweep(std::span<const WeightedGraph> instances, std::span<const std::size_t> ks,
                             std::span<const double> levels, const ScheduleSpec& schedule, std::size_t runs,
                             std::uint64_t seed, unsigned jobs = 1, Backend backend = Backend::analytic,
                             NoiseMode mode = NoiseMode::per_hrv);

struct TraceCurve {
    std::size_t k = 0;
    std::vector<double> mean_hrv;
    std::vector<double> mean_cut;
    double final_hrv_mean = 0.0;
    double final_hrv_se = 0.0;
    double final_cut_mean = 0.0;
    double final_cut_se = 0.0;
};

struct TraceStudy {
    std::size_t runs = 0;
    std::vector<TraceCurve> curves;
};

// Per-iteration HRV and cut averaged across runs, for each K.
TraceStudy anneal_trace_study(const WeightedGraph& g, std::span<const std::size_t> ks,
                              const ScheduleSpec& schedule, std::size_t runs, std::uint64_t seed,
                              unsigned jobs = 1, Backend backend = Backend::analytic);

// ---------------------------------------------------------------------------
// Report text

std::string match_report_csv(const MatchReport& r);
std::string match_scatter_csv(const MatchRecord& rec);
std::string rmse_curve_csv(std::span<const RmseCurve> curves);
std::string probability_table_csv(const ProbabilityTable& t);
std::string trace_study_csv(const TraceStudy& s);
std::string trace_summary_csv(const TraceStudy& s);

}  // namespace gsim
