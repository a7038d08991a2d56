#include "gsim/ising.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsim/error.hpp"
#include "gsim/parallel.hpp"
#include "gsim/simd.hpp"

namespace gsim {

SpinState::SpinState(std::vector<double> spins) : x_(std::move(spins)) {
    for (double s : x_) {
        if (s != 1.0 && s != -1.0) throw std::invalid_argument("spin values must be exactly +1 or -1");
    }
}

SpinState SpinState::all_up(std::size_t n) { return SpinState(std::vector<double>(n, 1.0)); }

SpinState SpinState::random(std::size_t n, Rng& rng) {
    std::vector<double> x(n);
    for (double& s : x) s = (rng() >> 63) ? -1.0 : 1.0;
    return SpinState(std::move(x));
}

SpinState SpinState::from_index(std::size_t n, std::uint64_t index) {
    if (n > 64) throw std::invalid_argument("from_index supports at most 64 spins");
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ((index >> i) & 1u) ? -1.0 : 1.0;
    return SpinState(std::move(x));
}

SpinState SpinState::negated() const {
    SpinState out = *this;
    for (double& s : out.x_) s = -s;
    return out;
}

std::uint64_t SpinState::index() const {
    if (x_.size() > 64) throw std::logic_error("index() supports at most 64 spins");
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i] < 0) idx |= std::uint64_t{1} << i;
    return idx;
}

std::string SpinState::bitstring() const {
    std::string out(x_.size(), '0');
    for (std::size_t i = 0; i < x_.size(); ++i)
        if (x_[i] < 0) out[i] = '1';
    return out;
}

IsingModel::IsingModel(std::size_t n, std::vector<double> coupling) : n_(n), j_(std::move(coupling)) {
    if (j_.size() != n_ * n_) throw std::invalid_argument("coupling matrix must have n*n entries");
    for (std::size_t i = 0; i < n_; ++i) {
        if (j_[i * n_ + i] != 0.0) throw std::invalid_argument("coupling diagonal must be zero");
        for (std::size_t k = i + 1; k < n_; ++k) {
            if (j_[i * n_ + k] != j_[k * n_ + i]) throw std::invalid_argument("coupling matrix must be symmetric");
        }
    }
}

IsingModel IsingModel::zeros(std::size_t n) { return IsingModel(n, std::vector<double>(n * n, 0.0)); }

double IsingModel::frobenius_norm() const {
    double sum = 0.0;
    for (double v : j_) sum += v * v;
    return std::sqrt(sum);
}

IsingModel from_graph(const WeightedGraph& g) {
    const std::size_t n = g.n();
    std::vector<double> j(n * n, 0.0);
    for (const Edge& e : g.edges()) {
        j[e.u * n + e.v] = -0.5 * e.w;
        j[e.v * n + e.u] = -0.5 * e.w;
    }
    return IsingModel(n, std::move(j));
}

IsingModel fold_external_field(const IsingModel& m, std::span<const double> h) {
    const std::size_t n = m.n();
    if (h.size() != n) throw std::invalid_argument("external field length must equal spin count");
    const std::size_t n1 = n + 1;
    std::vector<double> j(n1 * n1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) j[i * n1 + k] = m.at(i, k);
        j[i * n1 + n] = 0.5 * h[i];
        j[n * n1 + i] = 0.5 * h[i];
    }
    return IsingModel(n1, std::move(j));
}

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("spin state length does not match model size");
}

}  // namespace

double quadratic_form(const IsingModel& m, const SpinState& x) {
    require_same_size(m.n(), x.size());
    const auto& k = simd::kernels();
    std::vector<double> jx(m.n());
    k.gemv(m.data().data(), m.n(), m.n(), x.values().data(), jx.data());
    return k.dot(x.values().data(), jx.data(), m.n());
}

double hamiltonian(const IsingModel& m, const SpinState& x) { return -quadratic_form(m, x); }

double delta_hamiltonian(const IsingModel& m, const SpinState& x, std::size_t i) {
    require_same_size(m.n(), x.size());
    if (i >= m.n()) throw std::out_of_range("spin index out of range");
    const double field = simd::kernels().dot(m.row(i).data(), x.values().data(), m.n());
    return 4.0 * x.values()[i] * field;
}

double cut_value(const WeightedGraph& g, const SpinState& x) {
    require_same_size(g.n(), x.size());
    const auto s = x.values();
    double cut = 0.0;
    for (const Edge& e : g.edges()) cut += e.w * (1.0 - s[e.u] * s[e.v]) / 2.0;
    return cut;
}

namespace {

struct Candidate {
    double cut = -std::numeric_limits<double>::infinity();
    std::uint64_t index = 0;
    bool valid = false;
};

bool better(double cut, std::uint64_t index, const Candidate& best) {
    return !best.valid || cut > best.cut || (cut == best.cut && index < best.index);
}

}  // namespace

MaxCut brute_force_maxcut(const WeightedGraph& g, unsigned jobs) {
    const std::size_t n = g.n();
    if (n > kMaxBruteForceVertices) {
        throw GuardError("brute-force max-cut limited to " + std::to_string(kMaxBruteForceVertices) +
                         " vertices, got " + std::to_string(n));
    }
    if (n == 0) throw std::invalid_argument("empty graph");

    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    double scale = 1.0;
    for (const Edge& e : g.edges()) {
        adj[e.u].emplace_back(e.v, e.w);
        adj[e.v].emplace_back(e.u, e.w);
        scale += std::abs(e.w);
    }
    // Incremental cut values drift by rounding; any state within `slack` of
    // the incumbent is re-scored from scratch so the comparison is exact.
    const double slack = 1e-9 * scale;

    // Free spins 1..n-1 map to bits 0..free-1 of the enumeration code.
    const std::size_t free_bits = n - 1;
    const std::size_t low_bits = std::min<std::size_t>(free_bits, 16);
    const std::size_t chunks = std::size_t{1} << (free_bits - low_bits);
    std::vector<Candidate> results(chunks);

    parallel_for(chunks, jobs, [&](std::size_t chunk) {
        const std::uint64_t base = static_cast<std::uint64_t>(chunk) << low_bits;
        SpinState x = SpinState::from_index(n, base << 1);
        std::vector<double> s(x.values().begin(), x.values().end());
        double running = cut_value(g, x);
        Candidate best;
        auto consider = [&](std::uint64_t code) {
            if (best.valid && running < best.cut - slack) return;
            const SpinState state(s);
            const double exact = cut_value(g, state);
            const std::uint64_t index = code << 1;
            if (better(exact, index, best)) best = {exact, index, true};
        };
        consider(base);
        const std::uint64_t steps = std::uint64_t{1} << low_bits;
        for (std::uint64_t t = 1; t < steps; ++t) {
            const std::size_t bit = static_cast<std::size_t>(std::countr_zero(t));
            const std::size_t v = bit + 1;
            double delta = 0.0;
            for (const auto& [u, w] : adj[v]) delta += w * s[v] * s[u];
            running += delta;
            s[v] = -s[v];
            consider(base | (t ^ (t >> 1)));
        }
        results[chunk] = best;
    });

    Candidate best;
    for (const Candidate& c : results)
        if (better(c.cut, c.index, best)) best = c;
    return {best.cut, SpinState::from_index(n, best.index)};
}

}  // namespace gsim
