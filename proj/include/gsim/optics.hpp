#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gsim/ising.hpp"
#include "gsim/rng.hpp"
#include "gsim/spectral.hpp"

namespace gsim {

// Detector reading at the zero-frequency point of the Fourier plane.
struct FrameResult {
    double intensity = 0.0;
};

enum class Backend { analytic, field };

Backend parse_backend(std::string_view name);
std::string_view backend_name(Backend b);

// Spin i occupies the block x block macropixel at grid cell
// (i / grid_cols, i % grid_cols); unused cells stay dark.
struct MacropixelConfig {
    std::size_t block = 8;
    std::size_t grid_rows = 0;
    std::size_t grid_cols = 0;
    std::size_t pad = 0;  // transform plane side, power of two

    // Smallest square grid holding n spins, pad = next power of two.
    static MacropixelConfig for_spins(std::size_t n, std::size_t block = 8);
    void validate(std::size_t n) const;
};

enum class NoiseMode { per_hrv, per_frame };

// Gaussian detection noise; sigma = level * (estimated HRV span).
struct NoiseModel {
    double level = 0.0;
    double sigma = 0.0;
    std::size_t span_samples = 0;
    NoiseMode mode = NoiseMode::per_hrv;

    static NoiseModel none() { return {}; }
    static NoiseModel from_span(double level, double span, std::size_t samples,
                                NoiseMode mode = NoiseMode::per_hrv);
};

// (sum_i xi_i x_i)^2: the center-point intensity for phases in {0, pi}, with
// a negative amplitude realized as an extra pi phase.
FrameResult analytic_intensity(std::span<const double> xi, const SpinState& x);

// Owns an FFTW plan for one plane size. Thread-safe after construction.
class FieldPropagator {
public:
    explicit FieldPropagator(const MacropixelConfig& cfg);
    ~FieldPropagator();
    FieldPropagator(const FieldPropagator&) = delete;
    FieldPropagator& operator=(const FieldPropagator&) = delete;

    const MacropixelConfig& config() const noexcept { return cfg_; }

    // Builds the SLM field, transforms it, and reads |F(0,0)|^2 / block^4.
    FrameResult intensity(std::span<const double> xi, std::span<const double> spins) const;

private:
    MacropixelConfig cfg_;
    void* plan_ = nullptr;
};

FrameResult field_intensity(std::span<const double> xi, const SpinState& x, const MacropixelConfig& cfg);

// Maps a spin state to its HRV: sum_n g_n I_n over the ensemble's frames,
// accumulated in component order, plus optional Gaussian noise.
class HrvEvaluator {
public:
    explicit HrvEvaluator(IntensityEnsemble ensemble, Backend backend = Backend::analytic,
                          NoiseModel noise = NoiseModel::none(), MacropixelConfig cfg = {});

    std::size_t dimension() const noexcept { return ensemble_.n; }
    const IntensityEnsemble& ensemble() const noexcept { return ensemble_; }
    Backend backend() const noexcept { return backend_; }
    const NoiseModel& noise() const noexcept { return noise_; }

    HrvEvaluator with_noise(NoiseModel noise) const;

    std::vector<FrameResult> frames(const SpinState& x) const;
    double noiseless(const SpinState& x) const;
    // Draws from `rng` only when sigma > 0.
    double evaluate(const SpinState& x, Rng& rng) const;

    // CSV trace of one TDM cycle: frame, component, g, intensity.
    std::string frame_trace_csv(const SpinState& x) const;

private:
    IntensityEnsemble ensemble_;
    Backend backend_;
    NoiseModel noise_;
    std::shared_ptr<const FieldPropagator> field_;
};

double hrv(const IntensityEnsemble& ensemble, const SpinState& x, Backend backend, const NoiseModel& noise,
           Rng& rng);

inline constexpr std::size_t kDefaultSpanSamples = 1000;

// max - min of the noiseless HRV over `samples` uniform random states.
double estimate_span(const HrvEvaluator& evaluator, std::size_t samples, Rng& rng);
double estimate_span(const IntensityEnsemble& ensemble, Backend backend, std::size_t samples, Rng& rng);

}  // namespace gsim
