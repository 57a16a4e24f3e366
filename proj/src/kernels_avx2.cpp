// AVX2/FMA kernel variant.  This translation unit is compiled with
// -mavx2 -mfma on x86-64 only; availability is additionally gated at
// runtime via cpuid so the binary stays safe on older machines.

#include "mulab/kernels.hpp"

#include <algorithm>
#include <cmath>

#if defined(__AVX2__) && defined(__FMA__)
#include <immintrin.h>

namespace mulab::kernels {

namespace {

// acc += s * row[j..], two interleaved complex doubles per vector.
inline __m256d cmul_acc(__m256d acc, __m256d ar, __m256d ai, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0b0101);
    const __m256d t = _mm256_mul_pd(ai, bswap);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(ar, b, t));
}

void matmul_avx2(const cd* a, const cd* b, cd* c, int n, int k, int m) {
    const int m2 = m & ~1;
    for (int i = 0; i < n; ++i) {
        double* crow = reinterpret_cast<double*>(c + static_cast<std::size_t>(i) * m);
        for (int j = 0; j < 2 * m; ++j) crow[j] = 0.0;
        const cd* arow = a + static_cast<std::size_t>(i) * k;
        for (int p = 0; p < k; ++p) {
            const cd s = arow[p];
            const __m256d ar = _mm256_set1_pd(s.real());
            const __m256d ai = _mm256_set1_pd(s.imag());
            const double* brow =
                reinterpret_cast<const double*>(b + static_cast<std::size_t>(p) * m);
            int j = 0;
            for (; j < m2; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, cmul_acc(cv, ar, ai, bv));
            }
            if (j < m) {
                cd acc(crow[2 * j], crow[2 * j + 1]);
                acc += s * b[static_cast<std::size_t>(p) * m + j];
                crow[2 * j] = acc.real();
                crow[2 * j + 1] = acc.imag();
            }
        }
    }
}

void kron_avx2(const cd* a, int ra, int ca, const cd* b, int rb, int cb, cd* c) {
    const std::size_t cols = static_cast<std::size_t>(ca) * cb;
    const int cb2 = cb & ~1;
    for (int ia = 0; ia < ra; ++ia)
        for (int ib = 0; ib < rb; ++ib) {
            cd* crow = c + (static_cast<std::size_t>(ia) * rb + ib) * cols;
            const double* brow =
                reinterpret_cast<const double*>(b + static_cast<std::size_t>(ib) * cb);
            for (int ja = 0; ja < ca; ++ja) {
                const cd s = a[static_cast<std::size_t>(ia) * ca + ja];
                const __m256d ar = _mm256_set1_pd(s.real());
                const __m256d ai = _mm256_set1_pd(s.imag());
                double* dst = reinterpret_cast<double*>(crow + static_cast<std::size_t>(ja) * cb);
                int jb = 0;
                for (; jb < cb2; jb += 2) {
                    const __m256d bv = _mm256_loadu_pd(brow + 2 * jb);
                    const __m256d t = _mm256_mul_pd(ai, _mm256_permute_pd(bv, 0b0101));
                    _mm256_storeu_pd(dst + 2 * jb, _mm256_fmaddsub_pd(ar, bv, t));
                }
                if (jb < cb) {
                    const cd v = s * b[static_cast<std::size_t>(ib) * cb + jb];
                    dst[2 * jb] = v.real();
                    dst[2 * jb + 1] = v.imag();
                }
            }
        }
}

double max_abs_diff_avx2(const cd* a, const cd* b, std::size_t n) {
    const double* pa = reinterpret_cast<const double*>(a);
    const double* pb = reinterpret_cast<const double*>(b);
    __m256d vmax = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t n2 = n & ~static_cast<std::size_t>(1);
    for (; i < n2; i += 2) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(pa + 2 * i), _mm256_loadu_pd(pb + 2 * i));
        const __m256d sq = _mm256_mul_pd(d, d);
        const __m256d norms = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
        vmax = _mm256_max_pd(vmax, norms);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmax);
    double best = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) best = std::max(best, std::norm(a[i] - b[i]));
    return std::sqrt(best);
}

const Ops kAvx2{"avx2", matmul_avx2, kron_avx2, max_abs_diff_avx2};

bool cpu_ok() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

}  // namespace

const Ops* avx2_ops() {
    static const Ops* ops = cpu_ok() ? &kAvx2 : nullptr;
    return ops;
}

}  // namespace mulab::kernels

#else  // non-AVX2 build of this translation unit

namespace mulab::kernels {
const Ops* avx2_ops() { return nullptr; }
}  // namespace mulab::kernels

#endif
