#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>

#include "gsim/anneal.hpp"
#include "gsim/error.hpp"
#include "gsim/experiments.hpp"
#include "gsim/graph.hpp"
#include "gsim/ising.hpp"
#include "gsim/optics.hpp"
#include "gsim/report.hpp"
#include "gsim/spectral.hpp"

namespace gsim::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// schema pieces

std::vector<KeySpec> common_keys() {
    return {
        {"seed", Kind::integer, "1", "master seed; every random stream derives from it"},
        {"out", Kind::text, "gsim-out", "output directory"},
        {"jobs", Kind::integer, "1", "worker threads (0 = all cores)"},
    };
}

std::vector<KeySpec> instance_keys(std::string default_n = "20") {
    return {
        {"input", Kind::text, "", "instance file (rudy or .json); overrides the generator"},
        {"n", Kind::integer, default_n, "generator vertex count"},
        {"degree", Kind::integer, "", "regular-graph degree"},
        {"density", Kind::real, "", "edge density in (0, 1]"},
        {"weight_low", Kind::real, "0", "lower weight bound"},
        {"weight_high", Kind::real, "1", "upper weight bound (exclusive)"},
        {"graph_seed", Kind::integer, "", "generator seed (defaults to seed)"},
    };
}

std::vector<KeySpec> schedule_keys() {
    return {
        {"iters", Kind::integer, "3000", "annealing iterations"},
        {"flip_floor", Kind::integer, "1", "minimum spins flipped per move"},
        {"t0", Kind::real, "0", "initial temperature (0 = HRV span estimate)"},
        {"backend", Kind::text, "analytic", "analytic | field"},
    };
}

std::vector<KeySpec> merge(std::initializer_list<std::vector<KeySpec>> parts) {
    std::vector<KeySpec> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// ---------------------------------------------------------------------------
// shared validation and loading

void check_common(RunConfig& cfg) {
    cfg.require(cfg.integer("jobs") >= 0, "jobs: must be >= 0");
    cfg.require(!cfg.text("out").empty(), "out: must not be empty");
}

void check_generator(RunConfig& cfg, bool need) {
    if (cfg.has("input")) return;
    const bool deg = cfg.has("degree"), den = cfg.has("density");
    if (need || deg || den) cfg.require(deg != den, "exactly one of degree or density is required");
    if (cfg.has("n")) cfg.require(cfg.integer("n") >= 2, "n: must be >= 2");
    else cfg.require(false, "n: required");
    if (deg && cfg.has("n")) {
        const auto n = cfg.integer("n"), d = cfg.integer("degree");
        cfg.require(d > 0 && d < n, "degree: must satisfy 0 < degree < n");
        cfg.require((n * d) % 2 == 0, "degree: n * degree must be even");
    }
    if (den) cfg.require(cfg.real("density") > 0.0 && cfg.real("density") <= 1.0, "density: must lie in (0, 1]");
    cfg.require(cfg.real("weight_low") < cfg.real("weight_high"), "weight_low must be < weight_high");
}

void check_schedule(RunConfig& cfg) {
    cfg.require(cfg.integer("iters") >= 1, "iters: must be >= 1");
    cfg.require(cfg.integer("flip_floor") >= 1, "flip_floor: must be >= 1");
    cfg.require(cfg.real("t0") >= 0.0, "t0: must be >= 0");
    const std::string b = cfg.text("backend");
    cfg.require(b == "analytic" || b == "field", "backend: must be analytic or field");
}

bool valid_rate(double r) { return r > 0.0 && r < 1.0; }

std::uint64_t graph_seed(const RunConfig& cfg) {
    return cfg.has("graph_seed") ? cfg.seed("graph_seed") : cfg.seed("seed");
}

GraphSpec generator(const RunConfig& cfg, std::size_t n) {
    GraphSpec spec;
    spec.n = n;
    if (cfg.has("degree")) spec.degree = static_cast<std::size_t>(cfg.integer("degree"));
    if (cfg.has("density")) spec.density = cfg.real("density");
    spec.weight_low = cfg.real("weight_low");
    spec.weight_high = cfg.real("weight_high");
    return spec;
}

WeightedGraph load_graph(const RunConfig& cfg) {
    if (cfg.has("input")) {
        const fs::path p = cfg.text("input");
        return read_graph(p, graph_format_for(p));
    }
    return generator(cfg, static_cast<std::size_t>(cfg.integer("n"))).make(graph_seed(cfg));
}

// A .csv is a dense matrix; a .json is a matrix when it carries "J".
IsingModel load_model(const fs::path& p) {
    if (p.extension() == ".csv") return read_matrix(p);
    if (p.extension() == ".json") {
        const std::string text = read_text_file(p);
        json j;
        try {
            j = json::parse(text);
        } catch (const json::exception& e) {
            throw ParseError(e.what());
        }
        if (j.is_object() && j.contains("J")) return parse_matrix_json(text);
        return from_graph(parse_graph_json(text));
    }
    return from_graph(read_graph(p, GraphFormat::rudy));
}

ScheduleSpec schedule_spec(const RunConfig& cfg, double rate) {
    ScheduleSpec s;
    s.rate = rate;
    s.iters = static_cast<std::size_t>(cfg.integer("iters"));
    s.flip_floor = static_cast<std::size_t>(cfg.integer("flip_floor"));
    s.t0 = cfg.real("t0");
    return s;
}

unsigned jobs(const RunConfig& cfg) { return static_cast<unsigned>(cfg.integer("jobs")); }

void write_summary(const RunConfig& cfg, json results, const std::vector<std::string>& files, json seeds) {
    json j;
    j["command"] = cfg.command();
    j["config"] = cfg.to_json();
    j["config_hash"] = cfg.hash();
    j["seeds"] = std::move(seeds);
    j["results"] = std::move(results);
    j["files"] = files;
    write_text_file(fs::path(cfg.text("out")) / "summary.json", j.dump(2) + "\n");
}

void emit(const RunConfig& cfg, std::vector<std::string>& files, const std::string& name, std::string_view text) {
    write_text_file(fs::path(cfg.text("out")) / name, text);
    files.push_back(name);
}

json seeds_json(const RunConfig& cfg, bool with_graph) {
    json s;
    s["seed"] = cfg.seed("seed");
    if (with_graph && !cfg.has("input")) s["graph_seed"] = graph_seed(cfg);
    return s;
}

// ---------------------------------------------------------------------------
// gen

void run_gen(RunConfig& cfg, std::ostream& out) {
    cfg.require(!cfg.has("input"), "input: not accepted by gen");
    check_generator(cfg, true);
    check_common(cfg);
    cfg.finish();
    const WeightedGraph g = load_graph(cfg);
    std::vector<std::string> files;
    const std::string stem = cfg.text("name");
    write_graph(g, fs::path(cfg.text("out")) / (stem + ".rudy"), GraphFormat::rudy);
    write_graph(g, fs::path(cfg.text("out")) / (stem + ".json"), GraphFormat::json);
    files = {stem + ".rudy", stem + ".json"};
    json r;
    r["n"] = g.n();
    r["edges"] = g.edge_count();
    r["density"] = density(g);
    r["total_weight"] = g.total_weight();
    write_summary(cfg, r, files, seeds_json(cfg, true));
    out << "n=" << g.n() << " edges=" << g.edge_count() << " density=" << format_double(density(g)) << "\n";
}

// ---------------------------------------------------------------------------
// decompose

void run_decompose(RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    cfg.finish();
    const IsingModel m = load_model(cfg.text("input"));
    const EigenBundle b = eigendecompose(m);
    CsvWriter csv({"rank", "index", "lambda", "abs_lambda", "sign", "k", "error_ratio", "tail_frobenius"});
    for (std::size_t r = 0; r < b.n; ++r) {
        const std::size_t i = b.order[r];
        csv.cell(r).cell(i).cell(b.lambda[i]).cell(std::abs(b.lambda[i])).cell(b.signs[i]);
        csv.cell(r + 1).cell(error_ratio(b, r + 1)).cell(tail_frobenius(b, r + 1));
        csv.end_row();
    }
    std::vector<std::string> files;
    emit(cfg, files, "spectrum.csv", csv.str());
    emit(cfg, files, "bundle.json", bundle_to_json(b) + "\n");
    json r;
    r["n"] = b.n;
    r["sweeps"] = b.sweeps;
    r["frobenius_norm"] = m.frobenius_norm();
    write_summary(cfg, r, files, json::object());
    out << csv.str();
}

// ---------------------------------------------------------------------------
// solve

void run_solve(RunConfig& cfg, std::ostream& out) {
    check_generator(cfg, false);
    check_schedule(cfg);
    check_common(cfg);
    cfg.require(valid_rate(cfg.real("rate")), "rate: must lie in (0, 1)");
    cfg.require(cfg.integer("k") >= 0, "k: must be >= 0");
    cfg.require(cfg.real("p") > 0.0, "p: must be positive");
    cfg.require(cfg.real("noise") >= 0.0, "noise: must be >= 0");
    const std::string mode = cfg.text("noise_mode");
    cfg.require(mode == "per_hrv" || mode == "per_frame", "noise_mode: must be per_hrv or per_frame");
    if (!cfg.has("input")) cfg.require(cfg.has("degree") || cfg.has("density"), "input or a generator (degree or density) is required");
    cfg.finish();

    const WeightedGraph g = load_graph(cfg);
    const std::size_t n = g.n();
    const std::size_t k = cfg.integer("k") == 0 ? n : static_cast<std::size_t>(cfg.integer("k"));
    if (k > n) throw UsageError({"k: must be <= n (" + std::to_string(n) + ")"});
    std::optional<MaxCut> oracle;
    if (cfg.flag("oracle")) oracle = brute_force_maxcut(g, jobs(cfg));

    const std::uint64_t seed = cfg.seed("seed");
    const EigenBundle b = eigendecompose(from_graph(g));
    HrvEvaluator ev(build_ensemble(b, k, cfg.real("p")), parse_backend(cfg.text("backend")));
    Schedule s = make_schedule(ev, cfg.real("rate"), static_cast<std::size_t>(cfg.integer("iters")), seed);
    const double span = s.t0;
    if (cfg.real("t0") > 0.0) s.t0 = cfg.real("t0");
    s.flip_floor = static_cast<std::size_t>(cfg.integer("flip_floor"));
    if (cfg.real("noise") > 0.0) {
        ev = ev.with_noise(NoiseModel::from_span(cfg.real("noise"), span, kDefaultSpanSamples,
                                                 mode == "per_frame" ? NoiseMode::per_frame : NoiseMode::per_hrv));
    }
    const AnnealTrace t = anneal(ev, g, s, seed);

    std::vector<std::string> files;
    emit(cfg, files, "trace.csv", trace_to_csv(t));
    json r;
    r["n"] = n;
    r["k"] = k;
    r["t0"] = s.t0;
    r["hrv_span"] = span;
    r["final_cut"] = t.final_cut;
    r["final_hrv"] = t.final_hrv;
    r["state"] = t.final_state.bitstring();
    out << "n=" << n << " k=" << k << " backend=" << backend_name(ev.backend()) << "\n";
    out << "final_cut=" << format_double(t.final_cut) << "\n";
    out << "final_hrv=" << format_double(t.final_hrv) << "\n";
    out << "state=" << t.final_state.bitstring() << "\n";
    if (oracle) {
        const bool optimal = std::abs(t.final_cut - oracle->best_cut) <= kOptimumTolerance;
        r["optimum"] = oracle->best_cut;
        r["optimum_state"] = oracle->best_state.bitstring();
        r["optimal"] = optimal;
        out << "optimum=" << format_double(oracle->best_cut) << "\n";
        out << "optimal=" << (optimal ? "true" : "false") << "\n";
    }
    write_summary(cfg, r, files, seeds_json(cfg, true));
}

// ---------------------------------------------------------------------------
// experiment rmse

json fit_json(const ExpFit& f) {
    return {{"a", f.a}, {"b", f.b}, {"d", f.d}, {"r2", f.r2}, {"points", f.points}, {"decaying", f.decaying}};
}

void run_rmse(RunConfig& cfg, std::ostream& out) {
    check_common(cfg);
    cfg.require(cfg.integer("samples") >= 2, "samples: must be >= 2");
    cfg.require(cfg.integer("graph_seeds") >= 1, "graph_seeds: must be >= 1");
    std::vector<std::size_t> sizes = cfg.sizes("n");
    if (!cfg.has("input")) {
        cfg.require(!sizes.empty(), "n: at least one size is required");
        const bool deg = cfg.has("degree"), den = cfg.has("density");
        cfg.require(deg != den, "exactly one of degree or density is required");
        for (std::size_t n : sizes) {
            cfg.require(n >= 2, "n: sizes must be >= 2");
            if (deg) cfg.require(cfg.integer("degree") > 0 && static_cast<std::size_t>(cfg.integer("degree")) < n &&
                                     (n * cfg.integer("degree")) % 2 == 0,
                                 "degree: invalid for n=" + std::to_string(n));
        }
        if (den) cfg.require(cfg.real("density") > 0.0 && cfg.real("density") <= 1.0, "density: must lie in (0, 1]");
        cfg.require(cfg.real("weight_low") < cfg.real("weight_high"), "weight_low must be < weight_high");
    }
    cfg.finish();

    const auto samples = static_cast<std::size_t>(cfg.integer("samples"));
    const std::uint64_t seed = cfg.seed("seed");
    std::vector<std::string> files;
    json r;

    if (cfg.has("input")) {
        const IsingModel m = load_model(cfg.text("input"));
        std::vector<std::size_t> ks = cfg.sizes("ks", m.n());
        for (std::size_t k : ks)
            if (k > m.n()) throw UsageError({"ks: K must be <= n (" + std::to_string(m.n()) + ")"});
        const MatchReport rep = rmse_vs_k(m, ks, samples, seed);
        emit(cfg, files, "match.csv", match_report_csv(rep));
        std::vector<std::pair<double, double>> pts;
        for (const MatchRecord& rec : rep.records) {
            emit(cfg, files, "scatter_k" + std::to_string(rec.k) + ".csv", match_scatter_csv(rec));
            if (rec.k < m.n()) pts.emplace_back(rec.k_over_n, rec.rmse);
            r["records"].push_back({{"k", rec.k}, {"rmse", rec.rmse}, {"rmse_relative", rec.rmse_relative},
                                    {"r2", rec.fit.r2}, {"error_ratio", rec.error_ratio}});
        }
        r["n"] = rep.n;
        r["span"] = rep.span;
        std::size_t usable = 0;
        for (const auto& p : pts) usable += p.second > 0.0;
        if (usable >= 3) r["fit"] = fit_json(fit_exponential(pts));
        out << match_report_csv(rep);
    } else {
        std::vector<RmseCurve> curves;
        for (std::size_t n : sizes) {
            const std::vector<std::size_t> ks = cfg.sizes("ks", n);
            for (std::size_t k : ks)
                if (k > n) throw UsageError({"ks: K must be <= n (" + std::to_string(n) + ")"});
            curves.push_back(rmse_curve(generator(cfg, n), ks, samples,
                                        static_cast<std::size_t>(cfg.integer("graph_seeds")), seed, jobs(cfg)));
        }
        emit(cfg, files, "rmse_curve.csv", rmse_curve_csv(curves));
        CsvWriter fits({"n", "density", "a", "b", "d", "r2", "points"});
        for (const RmseCurve& c : curves) {
            fits.cell(c.n).cell(c.density).cell(c.fit.a).cell(c.fit.b).cell(c.fit.d).cell(c.fit.r2).cell(c.fit.points);
            fits.end_row();
            json cj = {{"n", c.n}, {"density", c.density}, {"fit", fit_json(c.fit)}};
            r["curves"].push_back(cj);
        }
        emit(cfg, files, "fit.csv", fits.str());
        out << fits.str();
    }
    write_summary(cfg, r, files, seeds_json(cfg, false));
}

// ---------------------------------------------------------------------------
// experiment prob / noise / trace

std::vector<WeightedGraph> instances(const RunConfig& cfg) {
    const WeightedGraph g = load_graph(cfg);
    const auto batches = static_cast<std::size_t>(cfg.integer("batches"));
    if (batches <= 1) return {g};
    return resample_weights(g, batches, cfg.real("weight_low"), cfg.real("weight_high"), cfg.seed("seed"));
}

void check_study(RunConfig& cfg) {
    check_generator(cfg, false);
    check_schedule(cfg);
    check_common(cfg);
    if (!cfg.has("input")) cfg.require(cfg.has("degree") || cfg.has("density"), "input or a generator (degree or density) is required");
    cfg.require(cfg.integer("runs") >= 1, "runs: must be >= 1");
    cfg.require(cfg.integer("batches") >= 1, "batches: must be >= 1");
    cfg.require(cfg.integer("runs") >= cfg.integer("batches"), "runs: must be >= batches");
    cfg.require(cfg.real("weight_low") < cfg.real("weight_high"), "weight_low must be < weight_high");
}

std::vector<std::size_t> study_ks(const RunConfig& cfg, std::size_t n) {
    std::vector<std::size_t> ks = cfg.sizes("ks", n);
    std::vector<std::string> bad;
    for (std::size_t k : ks)
        if (k < 1 || k > n) bad.push_back("ks: K=" + std::to_string(k) + " outside 1.." + std::to_string(n));
    if (!bad.empty()) throw UsageError(bad);
    return ks;
}

json table_json(const ProbabilityTable& t) {
    json j;
    j["n"] = t.n;
    j["optima"] = t.optima;
    for (const ProbabilityCell& c : t.cells) {
        j["cells"].push_back({{"rate", c.rate}, {"k", c.k}, {"level", c.level}, {"hits", c.hits}, {"runs", c.runs},
                              {"probability", c.probability}, {"wilson", {c.wilson.lo, c.wilson.hi}}});
    }
    return j;
}

json study_seeds(const RunConfig& cfg) {
    json s = seeds_json(cfg, true);
    s["run_seeds"] = "seed + run index";
    return s;
}

void run_prob(RunConfig& cfg, std::ostream& out) {
    check_study(cfg);
    for (double r : cfg.reals("rates")) cfg.require(valid_rate(r), "rates: each rate must lie in (0, 1)");
    cfg.finish();
    const auto inst = instances(cfg);
    const std::vector<std::size_t> ks = study_ks(cfg, inst.front().n());
    std::vector<ScheduleSpec> schedules;
    for (double r : cfg.reals("rates")) schedules.push_back(schedule_spec(cfg, r));
    const ProbabilityTable t =
        probability_vs_k(inst, ks, schedules, static_cast<std::size_t>(cfg.integer("runs")), cfg.seed("seed"),
                         jobs(cfg), parse_backend(cfg.text("backend")));
    std::vector<std::string> files;
    emit(cfg, files, "probability.csv", probability_table_csv(t));
    write_summary(cfg, table_json(t), files, study_seeds(cfg));
    out << probability_table_csv(t);
}

void run_noise(RunConfig& cfg, std::ostream& out) {
    check_study(cfg);
    cfg.require(valid_rate(cfg.real("rate")), "rate: must lie in (0, 1)");
    for (double l : cfg.reals("levels")) cfg.require(l >= 0.0, "levels: must be >= 0");
    const std::string mode = cfg.text("noise_mode");
    cfg.require(mode == "per_hrv" || mode == "per_frame", "noise_mode: must be per_hrv or per_frame");
    cfg.finish();
    const auto inst = instances(cfg);
    const std::size_t n = inst.front().n();
    const std::vector<std::size_t> ks = cfg.has("ks") ? study_ks(cfg, n) : std::vector<std::size_t>{n};
    const ProbabilityTable t =
        noise_sweep(inst, ks, cfg.reals("levels"), schedule_spec(cfg, cfg.real("rate")),
                    static_cast<std::size_t>(cfg.integer("runs")), cfg.seed("seed"), jobs(cfg),
                    parse_backend(cfg.text("backend")), mode == "per_frame" ? NoiseMode::per_frame : NoiseMode::per_hrv);
    std::vector<std::string> files;
    emit(cfg, files, "noise.csv", probability_table_csv(t));
    write_summary(cfg, table_json(t), files, study_seeds(cfg));
    out << probability_table_csv(t);
}

void run_trace(RunConfig& cfg, std::ostream& out) {
    check_generator(cfg, false);
    check_schedule(cfg);
    check_common(cfg);
    if (!cfg.has("input")) cfg.require(cfg.has("degree") || cfg.has("density"), "input or a generator (degree or density) is required");
    cfg.require(cfg.integer("runs") >= 1, "runs: must be >= 1");
    cfg.require(valid_rate(cfg.real("rate")), "rate: must lie in (0, 1)");
    cfg.finish();
    const WeightedGraph g = load_graph(cfg);
    const std::vector<std::size_t> ks = study_ks(cfg, g.n());
    const TraceStudy st = anneal_trace_study(g, ks, schedule_spec(cfg, cfg.real("rate")),
                                             static_cast<std::size_t>(cfg.integer("runs")), cfg.seed("seed"),
                                             jobs(cfg), parse_backend(cfg.text("backend")));
    std::vector<std::string> files;
    emit(cfg, files, "trace.csv", trace_study_csv(st));
    emit(cfg, files, "trace_summary.csv", trace_summary_csv(st));
    json r;
    r["runs"] = st.runs;
    for (const TraceCurve& c : st.curves)
        r["curves"].push_back({{"k", c.k}, {"final_cut_mean", c.final_cut_mean}, {"final_cut_se", c.final_cut_se},
                               {"final_hrv_mean", c.final_hrv_mean}, {"final_hrv_se", c.final_hrv_se}});
    write_summary(cfg, r, files, study_seeds(cfg));
    out << trace_summary_csv(st);
}

}  // namespace

const std::vector<Command>& commands() {
    static const std::vector<Command> all = [] {
        std::vector<Command> c;
        c.push_back({"gen", "generate a random weighted graph",
                     merge({instance_keys(""),
                            {{"name", Kind::text, "graph", "output file stem"}},
                            common_keys()}),
                     run_gen});
        c.push_back({"decompose", "eigendecompose a matrix or graph and tabulate truncation error",
                     merge({{{"input", Kind::text, "", "matrix (.csv / .json with J) or graph file", true}}, common_keys()}),
                     run_decompose});
        c.push_back({"solve", "anneal one instance with a truncated HRV evaluator",
                     merge({instance_keys(),
                            {{"k", Kind::integer, "0", "intensity vectors kept (0 = n)"},
                             {"p", Kind::real, "1", "intensity scale P"},
                             {"rate", Kind::real, "0.995", "cooling rate"},
                             {"noise", Kind::real, "0", "noise level as a fraction of the HRV span"},
                             {"noise_mode", Kind::text, "per_hrv", "per_hrv | per_frame"},
                             {"oracle", Kind::flag, "false", "compare with the brute-force optimum"}},
                            schedule_keys(), common_keys()}),
                     run_solve});
        c.push_back({"experiment rmse", "HRV vs Hamiltonian matching and RMSE decay",
                     merge({{{"input", Kind::text, "", "matrix or graph file (single-instance report)"},
                             {"n", Kind::sizes, "20", "generator sizes, e.g. 10,20,30"},
                             {"degree", Kind::integer, "", "regular-graph degree"},
                             {"density", Kind::real, "", "edge density in (0, 1]"},
                             {"weight_low", Kind::real, "0", "lower weight bound"},
                             {"weight_high", Kind::real, "1", "upper weight bound (exclusive)"},
                             {"graph_seeds", Kind::integer, "20", "instances averaged per size"},
                             {"samples", Kind::integer, "1000", "random states per instance"},
                             {"ks", Kind::sizes, "all", "K values, e.g. 1..20 or 5,10,15"}},
                            common_keys()}),
                     run_rmse});
        const std::vector<KeySpec> study = {
            {"runs", Kind::integer, "200", "anneal runs per cell"},
            {"batches", Kind::integer, "20", "weight resamples sharing the runs (1 = instance as given)"},
        };
        c.push_back({"experiment prob", "optimal-solution probability vs K",
                     merge({instance_keys(), study,
                            {{"ks", Kind::sizes, "all", "K values"},
                             {"rates", Kind::reals, "0.995", "cooling rates"}},
                            schedule_keys(), common_keys()}),
                     run_prob});
        c.push_back({"experiment noise", "optimal-solution probability under HRV noise",
                     merge({instance_keys(), study,
                            {{"ks", Kind::sizes, "", "K values (default n)"},
                             {"levels", Kind::reals, "0,0.01,0.02,0.05", "noise levels"},
                             {"noise_mode", Kind::text, "per_hrv", "per_hrv | per_frame"},
                             {"rate", Kind::real, "0.995", "cooling rate"}},
                            schedule_keys(), common_keys()}),
                     run_noise});
        c.push_back({"experiment trace", "run-averaged HRV and cut traces",
                     merge({instance_keys(),
                            {{"runs", Kind::integer, "20", "anneal runs per K"},
                             {"ks", Kind::sizes, "all", "K values"},
                             {"rate", Kind::real, "0.995", "cooling rate"}},
                            schedule_keys(), common_keys()}),
                     run_trace});
        return c;
    }();
    return all;
}

}  // namespace gsim::cli
