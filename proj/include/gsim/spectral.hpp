#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gsim/ising.hpp"

namespace gsim {

// Eigenpairs of a symmetric coupling matrix. Pairs are stored by signed
// eigenvalue, descending; `order` ranks them by |lambda| descending with ties
// kept in storage order. Each eigenvector's largest-magnitude entry (lowest
// index on ties) is positive.
struct EigenBundle {
    std::size_t n = 0;
    std::vector<double> lambda;
    std::vector<double> vectors;  // row k is eigenvector k
    std::vector<int> signs;       // +1 iff lambda >= 0
    std::vector<std::size_t> order;
    int sweeps = 0;

    std::span<const double> vector(std::size_t k) const { return {vectors.data() + k * n, n}; }
};

inline constexpr int kMaxJacobiSweeps = 100;

// Cyclic Jacobi; stops when the off-diagonal Frobenius norm drops to
// 1e-12 * ||J||_F. Throws ConvergenceError after kMaxJacobiSweeps.
EigenBundle eigendecompose(const IsingModel& m);

// The K largest-|lambda| components as intensity vectors P*sqrt|lambda|*v.
struct IntensityEnsemble {
    std::size_t n = 0;
    std::size_t k = 0;
    double p = 1.0;
    std::vector<double> xi;             // k x n, row-major
    std::vector<double> g;              // +1 / -1 per row
    std::vector<std::size_t> component; // bundle index of each row

    std::span<const double> row(std::size_t i) const { return {xi.data() + i * n, n}; }
};

IntensityEnsemble build_ensemble(const EigenBundle& b, std::size_t k, double p = 1.0);

enum class RatioMode { absolute, signed_sum };

// 1 - (sum of the K largest |lambda|) / (sum of all |lambda|). The signed
// variant uses raw lambdas in the same order; it is NaN when the eigenvalue
// sum vanishes, which is always the case for a zero-diagonal matrix.
double error_ratio(const EigenBundle& b, std::size_t k, RatioMode mode = RatioMode::absolute);

// ||J - J_K||_F = sqrt(sum of lambda^2 over the components left out).
double tail_frobenius(const EigenBundle& b, std::size_t k);

// sum over the K largest-|lambda| components of g |lambda| v v^T, row-major.
std::vector<double> reconstruct(const EigenBundle& b, std::size_t k);

// {"lambda": [...], "Q": [[...]], "order": [...]}; Q columns are eigenvectors.
std::string bundle_to_json(const EigenBundle& b);

}  // namespace gsim
