#include <doctest.h>

#include <Eigen/Dense>
#include <random>
#include <vector>

#include "mulab/eigen_bridge.hpp"
#include "mulab/kernels.hpp"
#include "mulab/matrix.hpp"

using namespace mulab;

namespace {

ComplexMatrix random_matrix(int rows, int cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = cd(dist(rng), dist(rng));
    return m;
}

ComplexMatrix run_matmul(const kernels::Ops& ops, const ComplexMatrix& a,
                         const ComplexMatrix& b) {
    ComplexMatrix c(a.rows(), b.cols());
    ops.matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

ComplexMatrix run_kron(const kernels::Ops& ops, const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    ops.kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(), c.data());
    return c;
}

// Cycle permutation matrix i -> i+1 mod n.
ComplexMatrix cycle(int n) {
    ComplexMatrix p(n, n);
    for (int i = 0; i < n; ++i) p.at((i + 1) % n, i) = cd(1.0, 0.0);
    return p;
}

}  // namespace

TEST_CASE("scalar matmul matches Eigen on assorted shapes") {
    // Sizes chosen to hit remainder lanes of the vectorized variants too.
    const int shapes[][3] = {{1, 1, 1}, {2, 3, 4}, {3, 3, 3}, {5, 7, 2},
                             {7, 5, 9}, {8, 8, 8}, {16, 16, 16}, {17, 13, 19}, {33, 32, 31}};
    std::uint64_t seed = 11;
    for (const auto& s : shapes) {
        ComplexMatrix a = random_matrix(s[0], s[1], seed++);
        ComplexMatrix b = random_matrix(s[1], s[2], seed++);
        ComplexMatrix c = run_matmul(kernels::scalar_ops(), a, b);
        EigenCMat ref = to_eigen(a) * to_eigen(b);
        CHECK(residual(c, from_eigen(ref)) < 1e-12);
    }
}

TEST_CASE("vector kernels agree with the scalar reference") {
    std::vector<const kernels::Ops*> variants;
    if (kernels::avx2_ops()) variants.push_back(kernels::avx2_ops());
    if (kernels::neon_ops()) variants.push_back(kernels::neon_ops());
    if (variants.empty()) {
        MESSAGE("no SIMD variant available on this host; scalar-only run");
        return;
    }
    const int shapes[][3] = {{1, 1, 1}, {2, 2, 2},   {3, 5, 7},   {4, 4, 4},  {6, 6, 6},
                             {8, 8, 8}, {9, 11, 13}, {16, 16, 16}, {31, 33, 29}};
    std::uint64_t seed = 101;
    for (const kernels::Ops* ops : variants) {
        for (const auto& s : shapes) {
            ComplexMatrix a = random_matrix(s[0], s[1], seed++);
            ComplexMatrix b = random_matrix(s[1], s[2], seed++);
            ComplexMatrix ref = run_matmul(kernels::scalar_ops(), a, b);
            ComplexMatrix got = run_matmul(*ops, a, b);
            CHECK(residual(ref, got) < 1e-12);

            ComplexMatrix kr = run_kron(kernels::scalar_ops(), a, b);
            ComplexMatrix kg = run_kron(*ops, a, b);
            // FMA contraction rounds the complex product differently by at
            // most an ulp; 0/1 data stays exact (see the permutation case).
            CHECK(residual(kr, kg) < 1e-14);

            CHECK(ops->max_abs_diff(a.data(), a.data(), a.size()) == 0.0);
            double d_ref = kernels::scalar_ops().max_abs_diff(ref.data(), got.data(), ref.size());
            double d_got = ops->max_abs_diff(ref.data(), got.data(), ref.size());
            CHECK(d_ref == doctest::Approx(d_got).epsilon(1e-12));
        }
    }
}

TEST_CASE("permutation products are exact in every kernel") {
    // 0/1 matrices with one entry per column: products must come out as
    // exact 0.0/1.0 doubles, which the exactness claims elsewhere rely on.
    std::vector<const kernels::Ops*> variants{&kernels::scalar_ops()};
    if (kernels::avx2_ops()) variants.push_back(kernels::avx2_ops());
    if (kernels::neon_ops()) variants.push_back(kernels::neon_ops());
    for (const kernels::Ops* ops : variants) {
        for (int n : {2, 3, 6, 12}) {
            ComplexMatrix p = cycle(n);
            ComplexMatrix q = run_matmul(*ops, p, p);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) {
                    cd want = (r == (c + 2) % n) ? cd(1.0, 0.0) : cd(0.0, 0.0);
                    CHECK(q.at(r, c) == want);
                }
            }
        }
    }
}

TEST_CASE("matrix operator* uses the active kernel and matches Eigen") {
    ComplexMatrix a = random_matrix(14, 9, 7);
    ComplexMatrix b = random_matrix(9, 21, 8);
    EigenCMat ref = to_eigen(a) * to_eigen(b);
    CHECK(residual(a * b, from_eigen(ref)) < 1e-12);
    CHECK_THROWS_AS(random_matrix(3, 4, 1) * random_matrix(3, 4, 2), std::invalid_argument);
}

TEST_CASE("kron matches Eigen's Kronecker structure") {
    ComplexMatrix a = random_matrix(3, 4, 21);
    ComplexMatrix b = random_matrix(2, 5, 22);
    ComplexMatrix k = kron(a, b);
    REQUIRE(k.rows() == 6);
    REQUIRE(k.cols() == 20);
    for (int ra = 0; ra < 3; ++ra)
        for (int ca = 0; ca < 4; ++ca)
            for (int rb = 0; rb < 2; ++rb)
                for (int cb = 0; cb < 5; ++cb)
                    // FMA in the vector kernel may round the complex product
                    // one ulp away from the plain expression.
                    CHECK(std::abs(k.at(ra * 2 + rb, ca * 5 + cb) -
                                   a.at(ra, ca) * b.at(rb, cb)) < 1e-14);
    // Mixed-product property against the kernels' own matmul.
    ComplexMatrix c = random_matrix(4, 3, 23);
    ComplexMatrix d = random_matrix(5, 2, 24);
    CHECK(residual(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-12);
}

TEST_CASE("active kernel is one of the registered variants") {
    const std::string& name = kernels::active_name();
    bool known = name == "scalar" || name == "avx2" || name == "neon";
    CHECK(known);
#if defined(__AVX2__)
    // Built with AVX2 enabled for the variant TU; the runtime check decides.
#endif
}
