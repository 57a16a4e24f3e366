#include "mulab/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace mulab::kernels {

namespace {

void matmul_scalar(const cd* a, const cd* b, cd* c, int n, int k, int m) {
    std::memset(static_cast<void*>(c), 0, sizeof(cd) * static_cast<std::size_t>(n) * m);
    for (int i = 0; i < n; ++i) {
        const cd* arow = a + static_cast<std::size_t>(i) * k;
        cd* crow = c + static_cast<std::size_t>(i) * m;
        for (int p = 0; p < k; ++p) {
            const cd s = arow[p];
            if (s.real() == 0.0 && s.imag() == 0.0) continue;
            const cd* brow = b + static_cast<std::size_t>(p) * m;
            for (int j = 0; j < m; ++j) crow[j] += s * brow[j];
        }
    }
}

void kron_scalar(const cd* a, int ra, int ca, const cd* b, int rb, int cb, cd* c) {
    const std::size_t cols = static_cast<std::size_t>(ca) * cb;
    for (int ia = 0; ia < ra; ++ia)
        for (int ib = 0; ib < rb; ++ib) {
            cd* crow = c + (static_cast<std::size_t>(ia) * rb + ib) * cols;
            for (int ja = 0; ja < ca; ++ja) {
                const cd s = a[static_cast<std::size_t>(ia) * ca + ja];
                const cd* brow = b + static_cast<std::size_t>(ib) * cb;
                cd* dst = crow + static_cast<std::size_t>(ja) * cb;
                for (int jb = 0; jb < cb; ++jb) dst[jb] = s * brow[jb];
            }
        }
}

double max_abs_diff_scalar(const cd* a, const cd* b, std::size_t n) {
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, std::abs(a[i] - b[i]));
    return best;
}

const Ops kScalar{"scalar", matmul_scalar, kron_scalar, max_abs_diff_scalar};

const Ops* resolve() {
    const char* pref = std::getenv("MULAB_KERNEL");
    if (pref != nullptr && *pref != '\0') {
        const std::string want(pref);
        if (want == "scalar") return &kScalar;
        if (want == "avx2") {
            if (const Ops* v = avx2_ops()) return v;
            throw std::runtime_error("MULAB_KERNEL=avx2 requested but AVX2+FMA is unavailable");
        }
        if (want == "neon") {
            if (const Ops* v = neon_ops()) return v;
            throw std::runtime_error("MULAB_KERNEL=neon requested but NEON is unavailable");
        }
        throw std::runtime_error("MULAB_KERNEL: unknown kernel '" + want +
                                 "' (use scalar|avx2|neon)");
    }
    if (const Ops* v = avx2_ops()) return v;
    if (const Ops* v = neon_ops()) return v;
    return &kScalar;
}

}  // namespace

const Ops& scalar_ops() { return kScalar; }

const Ops& active() {
    static const Ops* chosen = resolve();
    return *chosen;
}

const std::string& active_name() {
    static const std::string name = active().name;
    return name;
}

}  // namespace mulab::kernels
