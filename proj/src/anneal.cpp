#include "gsim/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gsim/parallel.hpp"
#include "gsim/report.hpp"

namespace gsim {

double Schedule::temperature(std::size_t k) const { return t0 * std::pow(rate, static_cast<double>(k)); }

std::size_t Schedule::flips(std::size_t k, std::size_t n) const {
    const double scaled = static_cast<double>(n) * temperature(k) / t0;
    const auto count = static_cast<std::size_t>(std::llround(scaled));
    return std::min(n, std::max(flip_floor, count));
}

void Schedule::validate() const {
    if (!(t0 > 0.0)) throw std::invalid_argument("t0 must be positive");
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("cooling rate must lie in (0, 1)");
    if (flip_floor < 1) throw std::invalid_argument("flip floor must be >= 1");
}

Schedule make_schedule(const HrvEvaluator& evaluator, double rate, std::size_t iters, std::uint64_t seed,
                       std::size_t span_samples) {
    Rng rng(derive_seed(seed, "anneal.t0"));
    const double span = estimate_span(evaluator, span_samples, rng);
    Schedule s;
    s.t0 = span > 0.0 ? span : 1.0;
    s.rate = rate;
    s.iters = iters;
    s.validate();
    return s;
}

AnnealTrace anneal(const HrvEvaluator& evaluator, const WeightedGraph& g, const Schedule& s, std::uint64_t seed,
                   AnnealOptions options) {
    s.validate();
    const std::size_t n = g.n();
    if (evaluator.dimension() != n) throw std::invalid_argument("evaluator dimension does not match graph");

    Rng moves(derive_seed(seed, "anneal.moves"));
    Rng noise(derive_seed(seed, "anneal.noise"));

    AnnealTrace trace;
    SpinState x = SpinState::random(n, moves);
    trace.initial_state = x;
    double current = evaluator.evaluate(x, noise);
    trace.steps.reserve(s.iters);

    std::vector<std::size_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::size_t> chosen;

    for (std::size_t k = 0; k < s.iters; ++k) {
        const double temp = s.temperature(k);
        const std::size_t flips = s.flips(k, n);

        // Partial Fisher-Yates: the first `flips` slots are distinct spins.
        chosen.clear();
        SpinState candidate = x;
        for (std::size_t f = 0; f < flips; ++f) {
            std::uniform_int_distribution<std::size_t> pick(f, n - 1);
            std::swap(pool[f], pool[pick(moves)]);
            candidate.flip(pool[f]);
            chosen.push_back(pool[f]);
        }

        const double proposed = evaluator.evaluate(candidate, noise);
        const double delta = current - proposed;
        bool accept = delta <= 0.0;
        double draw = std::numeric_limits<double>::quiet_NaN();
        if (!accept && temp > 0.0) {
            draw = uniform01(moves);
            accept = draw < std::exp(-delta / temp);
        }
        if (accept) {
            x = std::move(candidate);
            current = proposed;
            if (options.record_moves) trace.accepted_moves.push_back(chosen);
        }
        trace.steps.push_back({k, temp, flips, current, cut_value(g, x), accept, delta, draw});
    }

    trace.final_state = x;
    trace.final_hrv = current;
    trace.final_cut = cut_value(g, x);
    return trace;
}

std::string trace_to_csv(const AnnealTrace& trace) {
    CsvWriter csv({"iter", "temperature", "flips", "hrv", "cut", "accepted"});
    for (const AnnealStep& st : trace.steps) {
        csv.cell(st.iter).cell(st.temperature).cell(st.flips).cell(st.hrv).cell(st.cut).cell(st.accepted ? 1 : 0);
        csv.end_row();
    }
    return csv.str();
}

ProbabilityEstimate estimate_optimal_probability(const HrvEvaluator& evaluator, const WeightedGraph& g,
                                                 const Schedule& s, std::size_t runs, std::uint64_t master_seed,
                                                 unsigned jobs, std::optional<double> optimum) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    ProbabilityEstimate est;
    est.runs = runs;
    est.optimum = optimum ? *optimum : brute_force_maxcut(g, jobs).best_cut;
    est.final_cuts.resize(runs);
    parallel_for(runs, jobs, [&](std::size_t r) {
        est.final_cuts[r] = anneal(evaluator, g, s, master_seed + r).final_cut;
    });
    for (double cut : est.final_cuts)
        if (std::abs(cut - est.optimum) <= kOptimumTolerance) ++est.hits;
    est.probability = static_cast<double>(est.hits) / static_cast<double>(runs);
    est.wilson = wilson_interval(est.hits, runs);
    return est;
}

}  // namespace gsim
