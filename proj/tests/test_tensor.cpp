#include <doctest.h>

#include <stdexcept>

#include "mulab/matrix.hpp"
#include "mulab/tensor.hpp"

using namespace mulab;

TEST_CASE("signature flattening and validation") {
    SpaceSignature sig{2, 3, 4};
    CHECK(sig.legs() == 3);
    CHECK(sig.dim(1) == 2);
    CHECK(sig.dim(3) == 4);
    CHECK(sig.total() == 24);
    CHECK_THROWS_AS(SpaceSignature({2, 0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSignature({-1}), std::invalid_argument);
}

TEST_CASE("flip is the tensor swap and squares to the identity") {
    ComplexMatrix f = flip(2, 3);
    // delta_i (x) delta_j -> delta_j (x) delta_i: column i*3+j has its 1 at j*2+i.
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int r = 0; r < 6; ++r)
                CHECK(f.at(r, i * 3 + j) == (r == j * 2 + i ? cd(1, 0) : cd(0, 0)));
    CHECK(residual(flip(3, 2) * f, ComplexMatrix::identity(6)) == 0.0);
    CHECK(unitarity_residual(f) == 0.0);
}

TEST_CASE("embedding on edge legs reduces to Kronecker padding") {
    ComplexMatrix a = random_unitary(3, 5);
    SpaceSignature sig{3, 4};
    CHECK(residual(embed_legs(a, {1}, sig), kron(a, ComplexMatrix::identity(4))) == 0.0);
    SpaceSignature sig2{4, 3};
    CHECK(residual(embed_legs(a, {2}, sig2), kron(ComplexMatrix::identity(4), a)) == 0.0);
    // Two adjacent legs: operator on the pair.
    ComplexMatrix w = random_unitary(6, 6);
    SpaceSignature sig3{2, 3, 5};
    CHECK(residual(embed_legs(w, {1, 2}, sig3), kron(w, ComplexMatrix::identity(5))) == 0.0);
}

TEST_CASE("embedding on split legs matches the index definition") {
    ComplexMatrix a = random_unitary(4, 7);  // acts on legs 1 and 3, dims 2 x 2
    SpaceSignature sig{2, 3, 2};
    ComplexMatrix x = embed_legs(a, {1, 3}, sig);
    REQUIRE(x.rows() == 12);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k)
                for (int i2 = 0; i2 < 2; ++i2)
                    for (int j2 = 0; j2 < 3; ++j2)
                        for (int k2 = 0; k2 < 2; ++k2) {
                            cd want = (j == j2) ? a.at(i * 2 + k, i2 * 2 + k2) : cd(0, 0);
                            CHECK(x.at((i * 3 + j) * 2 + k, (i2 * 3 + j2) * 2 + k2) == want);
                        }
}

TEST_CASE("embedding is multiplicative and unital") {
    ComplexMatrix a = random_unitary(6, 11);
    ComplexMatrix b = random_unitary(6, 12);
    SpaceSignature sig{3, 5, 2};
    ComplexMatrix ea = embed_legs(a, {1, 3}, sig);
    ComplexMatrix eb = embed_legs(b, {1, 3}, sig);
    CHECK(residual(ea * eb, embed_legs(a * b, {1, 3}, sig)) < 1e-13);
    CHECK(residual(embed_legs(ComplexMatrix::identity(6), {1, 3}, sig),
                   ComplexMatrix::identity(30)) == 0.0);
    // Embedding over all legs is the operator itself, bitwise.
    ComplexMatrix c = random_unitary(30, 13);
    ComplexMatrix ec = embed_legs(c, {1, 2, 3}, sig);
    for (int r = 0; r < 30; ++r)
        for (int col = 0; col < 30; ++col) CHECK(ec.at(r, col) == c.at(r, col));
}

TEST_CASE("embedding rejects malformed leg lists") {
    ComplexMatrix a = random_unitary(4, 3);
    SpaceSignature sig{2, 3, 2};
    CHECK_THROWS_AS(embed_legs(a, {3, 1}, sig), std::invalid_argument);   // not increasing
    CHECK_THROWS_AS(embed_legs(a, {1, 1}, sig), std::invalid_argument);   // repeated
    CHECK_THROWS_AS(embed_legs(a, {0, 2}, sig), std::invalid_argument);   // 1-based
    CHECK_THROWS_AS(embed_legs(a, {1, 4}, sig), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(embed_legs(a, {1, 2}, sig), std::invalid_argument);   // 4 != 2*3
}

TEST_CASE("leg permutation conjugation") {
    SpaceSignature sig{2, 3, 4};
    ComplexMatrix p = leg_permutation_matrix(sig, {2, 3, 1});
    CHECK(unitarity_residual(p) == 0.0);
    // Identity permutation is the identity matrix.
    CHECK(residual(leg_permutation_matrix(sig, {1, 2, 3}), ComplexMatrix::identity(24)) == 0.0);
    // Permuting an embedded operator relocates its legs.
    ComplexMatrix a = random_unitary(2, 17);
    ComplexMatrix x = embed_legs(a, {1}, sig);
    SpaceSignature permuted{3, 4, 2};
    ComplexMatrix y = permute_legs(x, sig, {2, 3, 1});
    CHECK(residual(y, embed_legs(a, {3}, permuted)) == 0.0);
    // flip(d1,d2) agrees with the two-leg swap conjugating matrix.
    SpaceSignature two{2, 3};
    CHECK(residual(leg_permutation_matrix(two, {2, 1}), flip(2, 3)) == 0.0);
    CHECK_THROWS_AS(leg_permutation_matrix(sig, {1, 1, 2}), std::invalid_argument);
}

TEST_CASE("trivial-leg extraction certifies by re-embedding") {
    ComplexMatrix a = random_unitary(6, 31);
    SpaceSignature sig{2, 5, 3};
    ComplexMatrix x = embed_legs(a, {1, 3}, sig);
    ExtractResult res = extract_trivial_leg(x, sig, 2);
    REQUIRE(res.ok);
    CHECK(res.residual < 1e-12);
    CHECK(residual(res.op, a) < 1e-12);
    // An operator genuinely entangling leg 2 is refused.
    ComplexMatrix y = random_unitary(30, 32);
    ExtractResult bad = extract_trivial_leg(y, sig, 2);
    CHECK_FALSE(bad.ok);
}

TEST_CASE("random unitaries are unitary and deterministic in the seed") {
    ComplexMatrix u = random_unitary(9, 77);
    CHECK(unitarity_residual(u) < 1e-12);
    CHECK(is_unitary(u));
    ComplexMatrix v = random_unitary(9, 77);
    CHECK(residual(u, v) == 0.0);
    ComplexMatrix w = random_unitary(9, 78);
    CHECK(residual(u, w) > 1e-3);
    CHECK_FALSE(is_unitary(2.0 * ComplexMatrix::identity(3)));
}
