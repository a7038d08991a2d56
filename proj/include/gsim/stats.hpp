#pragma once

#include <cstddef>
#include <span>

namespace gsim {

struct Interval {
    double lo;
    double hi;

    bool overlaps(const Interval& other) const noexcept { return lo <= other.hi && other.lo <= hi; }
};

inline constexpr double kZ95 = 1.959963984540054;

// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::size_t hits, std::size_t trials, double z = kZ95);

// Ordinary least squares y = slope * x + intercept.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

LinearFit fit_line(std::span<const double> x, std::span<const double> y);

double mean(std::span<const double> v);
// Sample standard deviation (n - 1 denominator); 0 for fewer than 2 values.
double stddev(std::span<const double> v);

}  // namespace gsim
