#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace mulab::kernels {

using cd = std::complex<double>;

// Low-level dense kernels.  One scalar reference implementation plus an
// AVX2/FMA variant selected at runtime on x86-64; the two are equivalence-
// tested against each other.  Arrays are row-major interleaved complex.
struct Ops {
    const char* name;
    // c (n x m) = a (n x k) * b (k x m); c must be distinct from a and b.
    void (*matmul)(const cd* a, const cd* b, cd* c, int n, int k, int m);
    // c ((ra*rb) x (ca*cb)) = a (ra x ca) (x) b (rb x cb).
    void (*kron)(const cd* a, int ra, int ca, const cd* b, int rb, int cb, cd* c);
    // max_i |a[i] - b[i]| (complex modulus).
    double (*max_abs_diff)(const cd* a, const cd* b, std::size_t n);
};

const Ops& scalar_ops();

// Null when the build or the running CPU lacks AVX2+FMA support.
const Ops* avx2_ops();

// Null outside aarch64 builds.
const Ops* neon_ops();

// Kernel set in effect: honours MULAB_KERNEL=scalar|avx2|neon (throws if an
// explicitly requested variant is unavailable), otherwise picks the best
// supported variant.  Resolved once on first use.
const Ops& active();
const std::string& active_name();

}  // namespace mulab::kernels
