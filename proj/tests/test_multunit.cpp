#include <doctest.h>

#include <stdexcept>

#include "mulab/multunit.hpp"
#include "mulab/tensor.hpp"
#include "oracles.hpp"

using namespace mulab;
using namespace mulab::testing;

TEST_CASE("group unitaries match the hand-built table and are multiplicative") {
    for (const GroupTable& g :
         {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)}) {
        MultiplicativeUnitary m = from_group(g);
        CHECK(m.dim == g.n);
        CHECK(residual(m.w, regular_unitary(g)) == 0.0);
        CHECK(m.unitarity_res == 0.0);
        CHECK(m.pentagon_res == 0.0);
        // Cross-check with the loop-based pentagon evaluation.
        CHECK(direct_pentagon_residual(m.w, m.dim) == 0.0);
        CheckReport rep = pentagon_check(m.w, m.dim);
        CHECK(rep.passed);
        CHECK(rep.residual == 0.0);
    }
}

TEST_CASE("pentagon check fails for a generic unitary") {
    ComplexMatrix u = random_unitary(9, 5);  // on H(x)H with d = 3
    CheckReport rep = pentagon_check(u, 3);
    CHECK_FALSE(rep.passed);
    CHECK(rep.residual > 1e-3);
    CHECK(rep.residual == doctest::Approx(direct_pentagon_residual(u, 3)).epsilon(1e-12));
    CHECK_THROWS_AS(make_multiplicative_unitary(u, 3), std::invalid_argument);
    // Unchecked constructor records instead of throwing.
    MultiplicativeUnitary raw = make_multiplicative_unitary_unchecked(u, 3);
    CHECK(raw.pentagon_res > 1e-3);
    // Shape errors are rejected outright.
    CHECK_THROWS_AS(pentagon_check(random_unitary(6, 1), 3), std::invalid_argument);
}

TEST_CASE("dual is an involution and matches the group-law formula") {
    for (const GroupTable& g : {GroupTable::cyclic(3), GroupTable::symmetric(3)}) {
        MultiplicativeUnitary m = from_group(g);
        MultiplicativeUnitary mh = dual(m);
        CHECK(mh.pentagon_res == 0.0);
        CHECK(residual(mh.w, regular_dual_unitary(g)) == 0.0);
        CHECK(residual(dual(mh).w, m.w) == 0.0);
    }
}

TEST_CASE("adjoints of W and of its dual are antimultiplicative; W itself is not") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(3));
    // Conjugate-transposing the pentagon turns it into the antimultiplicative
    // law, so both W* and the dual's adjoint satisfy it.
    CheckReport adj = antimultiplicative_check(m.w.adjoint(), 3);
    CHECK(adj.passed);
    CHECK(adj.residual == 0.0);
    ComplexMatrix u = dual(m).w.adjoint();
    CheckReport good = antimultiplicative_check(u, 3);
    CHECK(good.passed);
    CHECK(good.residual == 0.0);
    CheckReport bad = antimultiplicative_check(m.w, 3);
    CHECK_FALSE(bad.passed);
}

TEST_CASE("representation residuals single out the defining equations") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(3));
    // W is both a right and a left representation of itself.
    CHECK(right_rep_residual(m.w, 3, m.w, 3) == 0.0);
    CHECK(left_rep_residual(m.w, 3, m.w, 3) == 0.0);
    // The trivial representation on a 2-dimensional carrier.
    ComplexMatrix id6 = ComplexMatrix::identity(6);
    CHECK(right_rep_residual(id6, 2, m.w, 3) == 0.0);
    CHECK(left_rep_residual(id6, 2, m.w, 3) == 0.0);
    // A random unitary on K (x) H is neither.
    ComplexMatrix r = random_unitary(6, 9);
    CHECK(right_rep_residual(r, 2, m.w, 3) > 1e-3);
    CHECK(left_rep_residual(r, 2, m.w, 3) > 1e-3);
    // The antimultiplicative unitary is an anti-representation of itself.
    ComplexMatrix u = dual(m).w.adjoint();
    CHECK(anti_rep_residual(u, 3, u, 3) == 0.0);
}

TEST_CASE("stabilization by a representation is again multiplicative") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(3));
    // y = the regular representation: s_y = W itself, ky = 3.
    MultiplicativeUnitary st = stabilize(m, m.w, 3);
    CHECK(st.dim == 9);
    CHECK(st.pentagon_res == 0.0);
    CHECK(direct_pentagon_residual(st.w, 9) == 0.0);
    // y = trivial on C^2 collapses to W_13 on (H (x) C^2)^(x2).
    MultiplicativeUnitary st2 = stabilize(m, ComplexMatrix::identity(6), 2);
    CHECK(st2.dim == 6);
    CHECK(st2.pentagon_res == 0.0);
    SpaceSignature sig{3, 2, 3, 2};
    CHECK(residual(st2.w, embed_legs(m.w, {1, 3}, sig)) == 0.0);
    // A non-representation is refused.
    CHECK_THROWS_AS(stabilize(m, random_unitary(6, 3), 2), std::invalid_argument);
}
