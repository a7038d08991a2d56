#pragma once

// Inner-loop kernels with a scalar reference and vector variants selected at
// runtime. Every variant reproduces the scalar reference bit-for-bit: sums
// are striped over four lanes and combined as (l0 + l1) + (l2 + l3) before
// the tail is added in index order, and no variant uses fused multiply-add.

#include <cstddef>
#include <string_view>
#include <vector>

namespace gsim::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct KernelTable {
    Isa isa;
    // sum_i a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y[r] = dot(A[r, :], x) for a row-major rows x cols matrix
    void (*gemv)(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
    // (a, b) <- (c*a - s*b, s*a + c*b), elementwise
    void (*rotate)(double* a, double* b, std::size_t n, double c, double s);
};

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void rotate(double* a, double* b, std::size_t n, double c, double s);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void rotate(double* a, double* b, std::size_t n, double c, double s);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y);
void rotate(double* a, double* b, std::size_t n, double c, double s);
}  // namespace neon
#endif

// Kernels for a specific ISA, or nullptr when this CPU/build cannot run it.
const KernelTable* kernels_for(Isa isa);

// Variants runnable here, scalar first.
std::vector<Isa> available_isas();

// Best available variant, chosen once per process. The GSIM_ISA environment
// variable (scalar|avx2|neon) forces a choice if that variant is available.
const KernelTable& kernels();

}  // namespace gsim::simd
