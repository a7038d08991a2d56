#include "gsim/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gsim {

Interval wilson_interval(std::size_t hits, std::size_t trials, double z) {
    if (trials == 0) throw std::invalid_argument("wilson interval needs trials > 0");
    if (hits > trials) throw std::invalid_argument("hits exceed trials");
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    const double lo = hits == 0 ? 0.0 : std::max(0.0, center - half);
    const double hi = hits == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line needs >= 2 paired points");
    const double mx = mean(x);
    const double my = mean(y);
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LinearFit fit;
    if (sxx == 0.0) {
        // Degenerate abscissa: flat fit through the mean.
        fit.intercept = my;
        return fit;
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

double mean(std::span<const double> v) {
    if (v.empty()) return 0.0;
    double sum = 0.0;
    for (double d : v) sum += d;
    return sum / static_cast<double>(v.size());
}

double stddev(std::span<const double> v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double ss = 0.0;
    for (double d : v) ss += (d - m) * (d - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

}  // namespace gsim
