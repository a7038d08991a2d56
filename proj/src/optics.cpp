#include "gsim/optics.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <mutex>
#include <random>
#include <stdexcept>

#include "gsim/report.hpp"
#include "gsim/simd.hpp"

namespace gsim {

namespace {

// FFTW's planner is not thread-safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
};

}  // namespace

Backend parse_backend(std::string_view name) {
    if (name == "analytic") return Backend::analytic;
    if (name == "field") return Backend::field;
    throw std::invalid_argument("unknown backend '" + std::string(name) + "'");
}

std::string_view backend_name(Backend b) { return b == Backend::analytic ? "analytic" : "field"; }

MacropixelConfig MacropixelConfig::for_spins(std::size_t n, std::size_t block) {
    MacropixelConfig cfg;
    cfg.block = block;
    std::size_t side = 1;
    while (side * side < n) ++side;
    cfg.grid_rows = side;
    cfg.grid_cols = side;
    cfg.pad = std::bit_ceil(side * block);
    return cfg;
}

void MacropixelConfig::validate(std::size_t n) const {
    if (block < 1) throw std::invalid_argument("macropixel block must be >= 1");
    if (grid_rows * grid_cols < n) throw std::invalid_argument("macropixel grid too small for spin count");
    if (!std::has_single_bit(pad) || pad < grid_rows * block || pad < grid_cols * block) {
        throw std::invalid_argument("transform plane must be a power of two covering the grid");
    }
}

NoiseModel NoiseModel::from_span(double level, double span, std::size_t samples, NoiseMode mode) {
    if (!(level >= 0.0)) throw std::invalid_argument("noise level must be >= 0");
    NoiseModel m;
    m.level = level;
    m.sigma = level == 0.0 ? 0.0 : level * span;
    m.span_samples = samples;
    m.mode = mode;
    return m;
}

FrameResult analytic_intensity(std::span<const double> xi, const SpinState& x) {
    if (xi.size() != x.size()) throw std::invalid_argument("intensity vector length does not match spins");
    const double amp = simd::kernels().dot(xi.data(), x.values().data(), xi.size());
    return {amp * amp};
}

FieldPropagator::FieldPropagator(const MacropixelConfig& cfg) : cfg_(cfg) {
    const int side = static_cast<int>(cfg_.pad);
    std::unique_ptr<fftw_complex, FftwFree> buf(fftw_alloc_complex(cfg_.pad * cfg_.pad));
    std::lock_guard lock(planner_mutex());
    plan_ = fftw_plan_dft_2d(side, side, buf.get(), buf.get(), FFTW_FORWARD, FFTW_ESTIMATE);
    if (!plan_) throw std::runtime_error("FFTW planning failed");
}

FieldPropagator::~FieldPropagator() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_));
}

FrameResult FieldPropagator::intensity(std::span<const double> xi, std::span<const double> spins) const {
    if (xi.size() != spins.size()) throw std::invalid_argument("intensity vector length does not match spins");
    cfg_.validate(xi.size());
    const std::size_t side = cfg_.pad;
    std::unique_ptr<fftw_complex, FftwFree> plane(fftw_alloc_complex(side * side));
    std::fill_n(reinterpret_cast<double*>(plane.get()), 2 * side * side, 0.0);
    for (std::size_t i = 0; i < xi.size(); ++i) {
        // Amplitude |xi| with phase pi for a negative product.
        const double amp = xi[i] * spins[i];
        const std::size_t r0 = (i / cfg_.grid_cols) * cfg_.block;
        const std::size_t c0 = (i % cfg_.grid_cols) * cfg_.block;
        for (std::size_t r = r0; r < r0 + cfg_.block; ++r)
            for (std::size_t c = c0; c < c0 + cfg_.block; ++c) plane.get()[r * side + c][0] = amp;
    }
    fftw_execute_dft(static_cast<fftw_plan>(plan_), plane.get(), plane.get());
    const std::complex<double> dc(plane.get()[0][0], plane.get()[0][1]);
    const double calib = static_cast<double>(cfg_.block * cfg_.block);
    return {std::norm(dc) / (calib * calib)};
}

FrameResult field_intensity(std::span<const double> xi, const SpinState& x, const MacropixelConfig& cfg) {
    return FieldPropagator(cfg).intensity(xi, x.values());
}

HrvEvaluator::HrvEvaluator(IntensityEnsemble ensemble, Backend backend, NoiseModel noise, MacropixelConfig cfg)
    : ensemble_(std::move(ensemble)), backend_(backend), noise_(noise) {
    if (backend_ == Backend::field) {
        if (cfg.pad == 0) cfg = MacropixelConfig::for_spins(ensemble_.n, cfg.block);
        cfg.validate(ensemble_.n);
        field_ = std::make_shared<const FieldPropagator>(cfg);
    }
}

HrvEvaluator HrvEvaluator::with_noise(NoiseModel noise) const {
    HrvEvaluator copy = *this;
    copy.noise_ = noise;
    return copy;
}

std::vector<FrameResult> HrvEvaluator::frames(const SpinState& x) const {
    if (x.size() != ensemble_.n) throw std::invalid_argument("spin state length does not match ensemble");
    std::vector<FrameResult> out(ensemble_.k);
    if (backend_ == Backend::analytic) {
        std::vector<double> proj(ensemble_.k);
        simd::kernels().gemv(ensemble_.xi.data(), ensemble_.k, ensemble_.n, x.values().data(), proj.data());
        for (std::size_t f = 0; f < ensemble_.k; ++f) out[f].intensity = proj[f] * proj[f];
    } else {
        for (std::size_t f = 0; f < ensemble_.k; ++f) out[f] = field_->intensity(ensemble_.row(f), x.values());
    }
    return out;
}

double HrvEvaluator::noiseless(const SpinState& x) const {
    const auto fr = frames(x);
    double sum = 0.0;
    for (std::size_t f = 0; f < fr.size(); ++f) sum += ensemble_.g[f] * fr[f].intensity;
    return sum;
}

double HrvEvaluator::evaluate(const SpinState& x, Rng& rng) const {
    if (noise_.sigma <= 0.0) return noiseless(x);
    std::normal_distribution<double> gauss(0.0, noise_.sigma);
    if (noise_.mode == NoiseMode::per_hrv) return noiseless(x) + gauss(rng);
    const auto fr = frames(x);
    double sum = 0.0;
    for (std::size_t f = 0; f < fr.size(); ++f) sum += ensemble_.g[f] * (fr[f].intensity + gauss(rng));
    return sum;
}

std::string HrvEvaluator::frame_trace_csv(const SpinState& x) const {
    CsvWriter csv({"frame", "component", "g", "intensity"});
    const auto fr = frames(x);
    for (std::size_t f = 0; f < fr.size(); ++f) {
        csv.cell(f).cell(ensemble_.component[f]).cell(static_cast<int>(ensemble_.g[f])).cell(fr[f].intensity);
        csv.end_row();
    }
    return csv.str();
}

double hrv(const IntensityEnsemble& ensemble, const SpinState& x, Backend backend, const NoiseModel& noise,
           Rng& rng) {
    return HrvEvaluator(ensemble, backend, noise).evaluate(x, rng);
}

double estimate_span(const HrvEvaluator& evaluator, std::size_t samples, Rng& rng) {
    if (samples < 2) throw std::invalid_argument("span estimate needs at least 2 samples");
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t s = 0; s < samples; ++s) {
        const double v = evaluator.noiseless(SpinState::random(evaluator.dimension(), rng));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return hi - lo;
}

double estimate_span(const IntensityEnsemble& ensemble, Backend backend, std::size_t samples, Rng& rng) {
    return estimate_span(HrvEvaluator(ensemble, backend), samples, rng);
}

}  // namespace gsim
