#include "gsim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "gsim/error.hpp"
#include "gsim/simd.hpp"

namespace gsim {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (i != k) sum += a[i * n + k] * a[i * n + k];
    return std::sqrt(sum);
}

}  // namespace

EigenBundle eigendecompose(const IsingModel& m) {
    const std::size_t n = m.n();
    const auto& kern = simd::kernels();
    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> vt(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vt[i * n + i] = 1.0;

    const double target = 1e-12 * m.frobenius_norm();
    int sweeps = 0;
    for (;; ++sweeps) {
        if (off_diagonal_norm(a, n) <= target) break;
        if (sweeps == kMaxJacobiSweeps) {
            throw ConvergenceError("Jacobi did not converge in " + std::to_string(kMaxJacobiSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                kern.rotate(a.data() + p * n, a.data() + q * n, n, c, s);
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    a[k * n + p] = a[p * n + k];
                    a[k * n + q] = a[q * n + k];
                }
                kern.rotate(vt.data() + p * n, vt.data() + q * n, n, c, s);
            }
        }
    }

    std::vector<std::size_t> by_value(n);
    std::iota(by_value.begin(), by_value.end(), 0);
    std::stable_sort(by_value.begin(), by_value.end(),
                     [&](std::size_t x, std::size_t y) { return a[x * n + x] > a[y * n + y]; });

    EigenBundle b;
    b.n = n;
    b.sweeps = sweeps;
    b.lambda.resize(n);
    b.vectors.resize(n * n);
    b.signs.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = by_value[k];
        b.lambda[k] = a[src * n + src];
        b.signs[k] = b.lambda[k] >= 0.0 ? 1 : -1;
        double* dst = b.vectors.data() + k * n;
        std::copy_n(vt.data() + src * n, n, dst);
        std::size_t lead = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (std::abs(dst[i]) > std::abs(dst[lead])) lead = i;
        if (n > 0 && dst[lead] < 0.0)
            for (std::size_t i = 0; i < n; ++i) dst[i] = -dst[i];
    }
    b.order.resize(n);
    std::iota(b.order.begin(), b.order.end(), 0);
    std::stable_sort(b.order.begin(), b.order.end(), [&](std::size_t x, std::size_t y) {
        return std::abs(b.lambda[x]) > std::abs(b.lambda[y]);
    });
    return b;
}

IntensityEnsemble build_ensemble(const EigenBundle& b, std::size_t k, double p) {
    if (k < 1 || k > b.n) throw std::out_of_range("K must lie in [1, n]");
    if (!(p > 0.0)) throw std::invalid_argument("P must be positive");
    IntensityEnsemble e;
    e.n = b.n;
    e.k = k;
    e.p = p;
    e.xi.resize(k * b.n);
    e.g.resize(k);
    e.component.resize(k);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t c = b.order[r];
        const double scale = p * std::sqrt(std::abs(b.lambda[c]));
        const auto v = b.vector(c);
        for (std::size_t i = 0; i < b.n; ++i) e.xi[r * b.n + i] = scale * v[i];
        e.g[r] = static_cast<double>(b.signs[c]);
        e.component[r] = c;
    }
    return e;
}

double error_ratio(const EigenBundle& b, std::size_t k, RatioMode mode) {
    if (k > b.n) throw std::out_of_range("K must lie in [0, n]");
    if (mode == RatioMode::signed_sum) {
        double head = 0.0, total = 0.0, mass = 0.0;
        for (std::size_t r = 0; r < b.n; ++r) {
            const double l = b.lambda[b.order[r]];
            if (r < k) head += l;
            total += l;
            mass += std::abs(l);
        }
        if (std::abs(total) <= 1e-12 * mass) return std::numeric_limits<double>::quiet_NaN();
        return 1.0 - head / total;
    }
    double head = 0.0, total = 0.0;
    for (std::size_t r = 0; r < b.n; ++r) {
        const double l = std::abs(b.lambda[b.order[r]]);
        if (r < k) head = total + l;
        total += l;
    }
    if (total == 0.0) return 0.0;
    return 1.0 - head / total;
}

double tail_frobenius(const EigenBundle& b, std::size_t k) {
    if (k > b.n) throw std::out_of_range("K must lie in [0, n]");
    double tail = 0.0;
    for (std::size_t r = b.n; r > k; --r) {
        const double l = b.lambda[b.order[r - 1]];
        tail += l * l;
    }
    return std::sqrt(tail);
}

std::vector<double> reconstruct(const EigenBundle& b, std::size_t k) {
    if (k > b.n) throw std::out_of_range("K must lie in [0, n]");
    const std::size_t n = b.n;
    std::vector<double> out(n * n, 0.0);
    for (std::size_t r = 0; r < k; ++r) {
        const std::size_t c = b.order[r];
        const double weight = b.signs[c] * std::abs(b.lambda[c]);
        const auto v = b.vector(c);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += weight * v[i] * v[j];
    }
    return out;
}

std::string bundle_to_json(const EigenBundle& b) {
    nlohmann::json q = nlohmann::json::array();
    for (std::size_t i = 0; i < b.n; ++i) {
        std::vector<double> row(b.n);
        for (std::size_t k = 0; k < b.n; ++k) row[k] = b.vectors[k * b.n + i];
        q.push_back(std::move(row));
    }
    return nlohmann::json{{"lambda", b.lambda}, {"Q", std::move(q)}, {"order", b.order}}.dump() + '\n';
}

}  // namespace gsim
