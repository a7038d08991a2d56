#include "gsim/simd.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace gsim::simd::neon {

double dot(const double* a, const double* b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        acc01 = vaddq_f64(acc01, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
    }
    const double l01 = vgetq_lane_f64(acc01, 0) + vgetq_lane_f64(acc01, 1);
    const double l23 = vgetq_lane_f64(acc23, 0) + vgetq_lane_f64(acc23, 1);
    double sum = l01 + l23;
    for (; i < n; ++i) sum += a[i] * b[i];
    return sum;
}

void gemv(const double* a, std::size_t rows, std::size_t cols, const double* x, double* y) {
    for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

void rotate(double* a, double* b, std::size_t n, double c, double s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const float64x2_t va = vld1q_f64(a + i);
        const float64x2_t vb = vld1q_f64(b + i);
        vst1q_f64(a + i, vsubq_f64(vmulq_f64(vc, va), vmulq_f64(vs, vb)));
        vst1q_f64(b + i, vaddq_f64(vmulq_f64(vs, va), vmulq_f64(vc, vb)));
    }
    for (; i < n; ++i) {
        const double ai = a[i];
        const double bi = b[i];
        a[i] = c * ai - s * bi;
        b[i] = s * ai + c * bi;
    }
}

}  // namespace gsim::simd::neon

#endif
