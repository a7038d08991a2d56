#include "gsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gsim/parallel.hpp"
#include "gsim/report.hpp"
#include "gsim/spectral.hpp"

namespace gsim {

MatchReport rmse_vs_k(const IsingModel& m, std::span<const std::size_t> ks, std::size_t samples,
                      std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("rmse_vs_k needs at least 2 samples");
    const std::size_t n = m.n();
    for (std::size_t k : ks)
        if (k > n) throw std::out_of_range("K exceeds spin count");

    Rng rng(derive_seed(seed, "rmse.states"));
    std::vector<SpinState> states;
    states.reserve(samples);
    for (std::size_t s = 0; s < samples; ++s) states.push_back(SpinState::random(n, rng));

    MatchReport report;
    report.n = n;
    report.samples = samples;
    std::vector<double> h(samples);
    for (std::size_t s = 0; s < samples; ++s) h[s] = hamiltonian(m, states[s]);
    const auto [lo, hi] = std::minmax_element(h.begin(), h.end());
    report.span = *hi - *lo;

    const EigenBundle bundle = eigendecompose(m);
    for (std::size_t k : ks) {
        MatchRecord rec;
        rec.k = k;
        rec.k_over_n = static_cast<double>(k) / static_cast<double>(n);
        rec.error_ratio = error_ratio(bundle, k);
        rec.tail_frobenius = tail_frobenius(bundle, k);
        rec.hrv.assign(samples, 0.0);
        rec.hamiltonian = h;
        if (k > 0) {
            const HrvEvaluator ev(build_ensemble(bundle, k));
            for (std::size_t s = 0; s < samples; ++s) rec.hrv[s] = ev.noiseless(states[s]);
        }
        std::vector<double> neg(samples);
        double sq = 0.0;
        for (std::size_t s = 0; s < samples; ++s) {
            neg[s] = -rec.hrv[s];
            const double e = neg[s] - h[s];
            sq += e * e;
        }
        rec.rmse = std::sqrt(sq / static_cast<double>(samples));
        rec.rmse_relative = report.span > 0.0 ? rec.rmse / report.span : 0.0;
        rec.fit = fit_line(neg, h);
        report.records.push_back(std::move(rec));
    }
    return report;
}

ExpFit fit_exponential(std::span<const std::pair<double, double>> points) {
    double peak = 0.0;
    for (const auto& pt : points)
        if (std::isfinite(pt.second)) peak = std::max(peak, pt.second);
    // round-off residue of an exact reconstruction counts as zero
    const double floor = 1e-9 * peak;
    std::vector<double> x, y;
    for (const auto& [kn, rmse] : points) {
        if (rmse > floor && std::isfinite(rmse)) {
            x.push_back(kn);
            y.push_back(std::log(rmse));
        }
    }
    if (x.size() < 3) throw std::invalid_argument("exponential fit needs at least 3 points with rmse > 0");
    const LinearFit line = fit_line(x, y);
    ExpFit fit;
    fit.points = x.size();
    fit.b = -line.slope;
    fit.a = std::exp(line.intercept);
    fit.d = 0.0;
    fit.r2 = line.r2;
    fit.decaying = fit.b > 1e-12;
    return fit;
}

WeightedGraph GraphSpec::make(std::uint64_t seed) const {
    if (degree) return gen_regular(n, *degree, weight_low, weight_high, seed);
    if (density) return gen_density(n, *density, weight_low, weight_high, seed);
    throw std::invalid_argument("graph spec needs a degree or a density");
}

RmseCurve rmse_curve(const GraphSpec& spec, std::span<const std::size_t> ks, std::size_t samples,
                     std::size_t graph_seeds, std::uint64_t seed, unsigned jobs) {
    if (graph_seeds < 1) throw std::invalid_argument("graph_seeds must be >= 1");
    std::vector<MatchReport> reports(graph_seeds);
    std::vector<double> densities(graph_seeds);
    parallel_for(graph_seeds, jobs, [&](std::size_t i) {
        const WeightedGraph g = spec.make(derive_seed(seed, "rmse.graph", i));
        densities[i] = density(g);
        reports[i] = rmse_vs_k(from_graph(g), ks, samples, derive_seed(seed, "rmse.sample", i));
    });

    RmseCurve curve;
    curve.n = spec.n;
    curve.graph_seeds = graph_seeds;
    curve.density = mean(densities);
    curve.ks.assign(ks.begin(), ks.end());
    curve.mean_rmse.assign(ks.size(), 0.0);
    curve.mean_rmse_relative.assign(ks.size(), 0.0);
    for (const MatchReport& r : reports) {
        for (std::size_t j = 0; j < ks.size(); ++j) {
            curve.mean_rmse[j] += r.records[j].rmse / static_cast<double>(graph_seeds);
            curve.mean_rmse_relative[j] += r.records[j].rmse_relative / static_cast<double>(graph_seeds);
        }
    }
    std::vector<std::pair<double, double>> points;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        if (ks[j] < spec.n) points.emplace_back(static_cast<double>(ks[j]) / static_cast<double>(spec.n), curve.mean_rmse[j]);
    }
    if (points.size() >= 3) curve.fit = fit_exponential(points);
    return curve;
}

std::vector<WeightedGraph> resample_weights(const WeightedGraph& g, std::size_t count, double low, double high,
                                            std::uint64_t seed) {
    if (!(low < high)) throw std::invalid_argument("weight_low must be < weight_high");
    std::vector<WeightedGraph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Rng rng(derive_seed(seed, "weights", i));
        std::vector<Edge> edges(g.edges().begin(), g.edges().end());
        for (Edge& e : edges) e.w = uniform(rng, low, high);
        out.emplace_back(g.n(), std::move(edges));
    }
    return out;
}

const ProbabilityCell* ProbabilityTable::find(double rate, std::size_t k, double level) const {
    for (const ProbabilityCell& c : cells)
        if (c.rate == rate && c.k == k && c.level == level) return &c;
    return nullptr;
}

namespace {

std::vector<std::size_t> with_full_rank(std::span<const std::size_t> ks, std::size_t n) {
    std::vector<std::size_t> out(ks.begin(), ks.end());
    for (std::size_t k : out)
        if (k < 1 || k > n) throw std::out_of_range("K must lie in [1, n]");
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    return out;
}

Schedule resolve(const ScheduleSpec& spec, double span) {
    Schedule s;
    s.t0 = spec.t0 > 0.0 ? spec.t0 : (span > 0.0 ? span : 1.0);
    s.rate = spec.rate;
    s.iters = spec.iters;
    s.flip_floor = spec.flip_floor;
    s.validate();
    return s;
}

// Same stream make_schedule uses, so t0 and the noise span agree.
double span_for(const HrvEvaluator& ev, std::uint64_t seed) {
    Rng rng(derive_seed(seed, "anneal.t0"));
    return estimate_span(ev, kDefaultSpanSamples, rng);
}

// Everything one instance contributes to a probability study.
struct Prepared {
    EigenBundle bundle;
    double optimum = 0.0;
    std::size_t first_run = 0;
    std::size_t runs = 0;
};

std::vector<Prepared> prepare(std::span<const WeightedGraph> instances, std::size_t runs, unsigned jobs) {
    if (instances.empty()) throw std::invalid_argument("need at least one instance");
    if (runs < instances.size()) throw std::invalid_argument("runs must be >= number of instances");
    const std::size_t n = instances.front().n();
    std::vector<Prepared> out(instances.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        if (instances[i].n() != n) throw std::invalid_argument("instances must share a vertex count");
        out[i].bundle = eigendecompose(from_graph(instances[i]));
        out[i].optimum = brute_force_maxcut(instances[i], jobs).best_cut;
        out[i].first_run = next;
        out[i].runs = runs / instances.size() + (i < runs % instances.size() ? 1 : 0);
        next += out[i].runs;
    }
    return out;
}

ProbabilityCell run_cell(std::span<const WeightedGraph> instances, const std::vector<Prepared>& prep,
                         std::size_t k, double level, const ScheduleSpec& spec, std::uint64_t seed, unsigned jobs,
                         Backend backend, NoiseMode mode) {
    ProbabilityCell cell;
    cell.rate = spec.rate;
    cell.k = k;
    cell.level = level;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        const HrvEvaluator clean(build_ensemble(prep[i].bundle, k), backend);
        const double span = span_for(clean, seed);
        const Schedule s = resolve(spec, span);
        const HrvEvaluator ev =
            level > 0.0 ? clean.with_noise(NoiseModel::from_span(level, span, kDefaultSpanSamples, mode)) : clean;
        const ProbabilityEstimate est =
            estimate_optimal_probability(ev, instances[i], s, prep[i].runs, seed + prep[i].first_run, jobs,
                                         prep[i].optimum);
        cell.hits += est.hits;
        cell.runs += est.runs;
        cell.mean_span += span / static_cast<double>(instances.size());
        cell.mean_t0 += s.t0 / static_cast<double>(instances.size());
    }
    cell.probability = static_cast<double>(cell.hits) / static_cast<double>(cell.runs);
    cell.wilson = wilson_interval(cell.hits, cell.runs);
    return cell;
}

}  // namespace

ProbabilityTable probability_vs_k(std::span<const WeightedGraph> instances, std::span<const std::size_t> ks,
                                  std::span<const ScheduleSpec> schedules, std::size_t runs, std::uint64_t seed,
                                  unsigned jobs, Backend backend) {
    const auto prep = prepare(instances, runs, jobs);
    ProbabilityTable out;
    out.n = instances.front().n();
    for (const Prepared& p : prep) out.optima.push_back(p.optimum);
    for (const ScheduleSpec& spec : schedules)
        for (std::size_t k : with_full_rank(ks, out.n))
            out.cells.push_back(run_cell(instances, prep, k, 0.0, spec, seed, jobs, backend, NoiseMode::per_hrv));
    return out;
}

ProbabilityTable noise_sweep(std::span<const WeightedGraph> instances, std::span<const std::size_t> ks,
                             std::span<const double> levels, const ScheduleSpec& schedule, std::size_t runs,
                             std::uint64_t seed, unsigned jobs, Backend backend, NoiseMode mode) {
    for (double level : levels)
        if (!(level >= 0.0)) throw std::invalid_argument("noise levels must be >= 0");
    const auto prep = prepare(instances, runs, jobs);
    ProbabilityTable out;
    out.n = instances.front().n();
    for (const Prepared& p : prep) out.optima.push_back(p.optimum);
    const auto k_list = with_full_rank(ks, out.n);
    for (double level : levels)
        for (std::size_t k : k_list)
            out.cells.push_back(run_cell(instances, prep, k, level, schedule, seed, jobs, backend, mode));
    return out;
}

TraceStudy anneal_trace_study(const WeightedGraph& g, std::span<const std::size_t> ks,
                              const ScheduleSpec& schedule, std::size_t runs, std::uint64_t seed, unsigned jobs,
                              Backend backend) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");
    TraceStudy study;
    study.runs = runs;
    const EigenBundle bundle = eigendecompose(from_graph(g));
    for (std::size_t k : ks) {
        const HrvEvaluator ev(build_ensemble(bundle, k), backend);
        const Schedule s = resolve(schedule, span_for(ev, seed));
        std::vector<AnnealTrace> traces(runs);
        parallel_for(runs, jobs, [&](std::size_t r) { traces[r] = anneal(ev, g, s, seed + r); });

        TraceCurve curve;
        curve.k = k;
        curve.mean_hrv.assign(s.iters, 0.0);
        curve.mean_cut.assign(s.iters, 0.0);
        std::vector<double> final_hrv, final_cut;
        for (const AnnealTrace& t : traces) {
            for (std::size_t i = 0; i < s.iters; ++i) {
                curve.mean_hrv[i] += t.steps[i].hrv;
                curve.mean_cut[i] += t.steps[i].cut;
            }
            final_hrv.push_back(t.final_hrv);
            final_cut.push_back(t.final_cut);
        }
        for (std::size_t i = 0; i < s.iters; ++i) {
            curve.mean_hrv[i] /= static_cast<double>(runs);
            curve.mean_cut[i] /= static_cast<double>(runs);
        }
        const double root = std::sqrt(static_cast<double>(runs));
        curve.final_hrv_mean = mean(final_hrv);
        curve.final_hrv_se = stddev(final_hrv) / root;
        curve.final_cut_mean = mean(final_cut);
        curve.final_cut_se = stddev(final_cut) / root;
        study.curves.push_back(std::move(curve));
    }
    return study;
}

std::string match_report_csv(const MatchReport& r) {
    CsvWriter csv({"k", "k_over_n", "rmse", "rmse_relative", "slope", "intercept", "r2", "error_ratio",
                   "tail_frobenius"});
    for (const MatchRecord& rec : r.records) {
        csv.cell(rec.k).cell(rec.k_over_n).cell(rec.rmse).cell(rec.rmse_relative);
        csv.cell(rec.fit.slope).cell(rec.fit.intercept).cell(rec.fit.r2);
        csv.cell(rec.error_ratio).cell(rec.tail_frobenius);
        csv.end_row();
    }
    return csv.str();
}

std::string match_scatter_csv(const MatchRecord& rec) {
    CsvWriter csv({"neg_hrv", "hamiltonian"});
    for (std::size_t s = 0; s < rec.hrv.size(); ++s) {
        csv.cell(-rec.hrv[s]).cell(rec.hamiltonian[s]);
        csv.end_row();
    }
    return csv.str();
}

std::string rmse_curve_csv(std::span<const RmseCurve> curves) {
    CsvWriter csv({"n", "density", "k", "k_over_n", "mean_rmse", "mean_rmse_relative"});
    for (const RmseCurve& c : curves) {
        for (std::size_t j = 0; j < c.ks.size(); ++j) {
            csv.cell(c.n).cell(c.density).cell(c.ks[j]);
            csv.cell(static_cast<double>(c.ks[j]) / static_cast<double>(c.n));
            csv.cell(c.mean_rmse[j]).cell(c.mean_rmse_relative[j]);
            csv.end_row();
        }
    }
    return csv.str();
}

std::string probability_table_csv(const ProbabilityTable& t) {
    CsvWriter csv({"rate", "k", "k_over_n", "level", "mean_span", "mean_t0", "hits", "runs", "probability",
                   "wilson_lo", "wilson_hi"});
    for (const ProbabilityCell& c : t.cells) {
        csv.cell(c.rate).cell(c.k).cell(static_cast<double>(c.k) / static_cast<double>(t.n)).cell(c.level);
        csv.cell(c.mean_span).cell(c.mean_t0).cell(c.hits).cell(c.runs).cell(c.probability);
        csv.cell(c.wilson.lo).cell(c.wilson.hi);
        csv.end_row();
    }
    return csv.str();
}

std::string trace_study_csv(const TraceStudy& s) {
    CsvWriter csv({"k", "iter", "mean_hrv", "mean_cut"});
    for (const TraceCurve& c : s.curves) {
        for (std::size_t i = 0; i < c.mean_hrv.size(); ++i) {
            csv.cell(c.k).cell(i).cell(c.mean_hrv[i]).cell(c.mean_cut[i]);
            csv.end_row();
        }
    }
    return csv.str();
}

std::string trace_summary_csv(const TraceStudy& s) {
    CsvWriter csv({"k", "runs", "final_hrv_mean", "final_hrv_se", "final_cut_mean", "final_cut_se"});
    for (const TraceCurve& c : s.curves) {
        csv.cell(c.k).cell(s.runs).cell(c.final_hrv_mean).cell(c.final_hrv_se);
        csv.cell(c.final_cut_mean).cell(c.final_cut_se);
        csv.end_row();
    }
    return csv.str();
}

}  // namespace gsim
