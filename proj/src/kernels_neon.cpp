// NEON kernel variant for aarch64.  One interleaved complex double per
// 128-bit vector; complex multiply via lane-swap plus a signed fused
// multiply-add, mirroring the AVX2 variant's structure.

#include "mulab/kernels.hpp"

#include <algorithm>
#include <cmath>

#if defined(__aarch64__)
#include <arm_neon.h>

namespace mulab::kernels {

namespace {

// Returns s * v for one complex double held as [re, im].
inline float64x2_t cmul(double sr, double si, float64x2_t v) {
    const float64x2_t sign = {-1.0, 1.0};
    const float64x2_t t1 = vmulq_n_f64(v, sr);            // [sr*br, sr*bi]
    const float64x2_t vswap = vextq_f64(v, v, 1);         // [bi, br]
    const float64x2_t t2 = vmulq_n_f64(vswap, si);        // [si*bi, si*br]
    return vfmaq_f64(t1, t2, sign);                       // [sr*br - si*bi, sr*bi + si*br]
}

void matmul_neon(const cd* a, const cd* b, cd* c, int n, int k, int m) {
    for (int i = 0; i < n; ++i) {
        double* crow = reinterpret_cast<double*>(c + static_cast<std::size_t>(i) * m);
        for (int j = 0; j < 2 * m; ++j) crow[j] = 0.0;
        const cd* arow = a + static_cast<std::size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const cd s = arow[p];
            const double* brow =
                reinterpret_cast<const double*>(b + static_cast<std::size_t>(p) * m);
            for (int j = 0; j < m; ++j) {
                const float64x2_t bv = vld1q_f64(brow + 2 * j);
                const float64x2_t cv = vld1q_f64(crow + 2 * j);
                vst1q_f64(crow + 2 * j, vaddq_f64(cv, cmul(s.real(), s.imag(), bv)));
            }
        }
    }
}

void kron_neon(const cd* a, int ra, int ca, const cd* b, int rb, int cb, cd* c) {
    const std::size_t cols = static_cast<std::size_t>(ca) * cb;
    for (int ia = 0; ia < ra; ++ia)
        for (int ib = 0; ib < rb; ++ib) {
            cd* crow = c + (static_cast<std::size_t>(ia) * rb + ib) * cols;
            const double* brow =
                reinterpret_cast<const double*>(b + static_cast<std::size_t>(ib) * cb);
            for (int ja = 0; ja < ca; ++ja) {
                const cd s = a[static_cast<std::size_t>(ia) * ca + ja];
                double* dst = reinterpret_cast<double*>(crow + static_cast<std::size_t>(ja) * cb);
                for (int jb = 0; jb < cb; ++jb)
                    vst1q_f64(dst + 2 * jb, cmul(s.real(), s.imag(), vld1q_f64(brow + 2 * jb)));
            }
        }
}

double max_abs_diff_neon(const cd* a, const cd* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    float64x2_t vmax = vdupq_n_f64(0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const float64x2_t d = vsubq_f64(vld1q_f64(pa + 2 * i), vld1q_f64(pb + 2 * i));
        const float64x2_t sq = vmulq_f64(d, d);
        vmax = vmaxq_f64(vmax, vdupq_n_f64(vaddvq_f64(sq)));
    }
    return std::sqrt(vmaxvq_f64(vmax));
}

const Ops kNeon{"neon", matmul_neon, kron_neon, max_abs_diff_neon};

}  // namespace

const Ops* neon_ops() { return &kNeon; }

}  // namespace mulab::kernels

#else

namespace mulab::kernels {
const Ops* neon_ops() { return nullptr; }
}  // namespace mulab::kernels

#endif
