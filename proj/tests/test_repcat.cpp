#include <doctest.h>

#include <stdexcept>

#include "mulab/examples.hpp"
#include "mulab/repcat.hpp"
#include "mulab/tensor.hpp"
#include "oracles.hpp"

using namespace mulab;
using namespace mulab::testing;

namespace {

// Right representation of a group unitary graded by `grades`: the basis
// vector xi_i (x) delta_h is sent to xi_i (x) delta_{g_i h}.
ComplexMatrix graded_right_rep(const GroupTable& g, const std::vector<int>& grades) {
    const int k = static_cast<int>(grades.size());
    const int d = g.n;
    ComplexMatrix s(k * d, k * d);
    for (int i = 0; i < k; ++i)
        for (int h = 0; h < d; ++h) s.at(i * d + g.op(grades[i], h), i * d + h) = cd(1, 0);
    return s;
}

}  // namespace

TEST_CASE("representation factories validate the defining equation") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(3));
    Representation reg = make_rep(Side::Right, m.w, 3, m);
    CHECK(reg.carrier_dim == 3);
    Representation triv = trivial_rep(m, 2);
    CHECK(right_rep_check(triv.op, 2, m).passed);
    CHECK(left_rep_check(ComplexMatrix::identity(6), 2, m).passed);
    CHECK_THROWS_AS(make_rep(Side::Right, random_unitary(6, 4), 2, m), std::invalid_argument);
    CHECK_THROWS_AS(make_rep(Side::Right, m.w, 2, m), std::invalid_argument);  // bad carrier
}

TEST_CASE("tensor product and direct sum stay representations") {
    MultiplicativeUnitary m = from_group(GroupTable::symmetric(3));
    Representation reg = make_rep(Side::Right, m.w, 6, m);
    Representation sq = tensor_rep(reg, reg);
    CHECK(sq.carrier_dim == 36);
    CHECK(right_rep_check(sq.op, 36, m).passed);
    CHECK(right_rep_check(sq.op, 36, m).residual == 0.0);
    // Tensor against the explicit (S1)_13 (S2)_23 form.
    SpaceSignature sig{6, 6, 6};
    CHECK(residual(sq.op, embed_legs(m.w, {1, 3}, sig) * embed_legs(m.w, {2, 3}, sig)) == 0.0);

    Representation sum = direct_sum(reg, trivial_rep(m, 1));
    CHECK(sum.carrier_dim == 7);
    CHECK(right_rep_check(sum.op, 7, m).passed);

    Representation lreg = make_rep(Side::Left, m.w, 6, m);
    Representation lsq = tensor_rep(lreg, lreg);
    CHECK(left_rep_check(lsq.op, 36, m).passed);
    CHECK_THROWS_AS(tensor_rep(reg, lreg), std::invalid_argument);  // mixed sides
}

TEST_CASE("intertwiner dimensions match grading multiplicities and the LU oracle") {
    GroupTable z3 = GroupTable::cyclic(3);
    MultiplicativeUnitary m = from_group(z3);
    // Carriers graded by group elements; dim Hom = sum over g of the
    // product of multiplicities of g in the two gradings.
    ComplexMatrix a = graded_right_rep(z3, {0, 1});        // grades e, g
    ComplexMatrix b = graded_right_rep(z3, {0, 1, 1, 2});  // grades e, g, g, g^2
    Representation ra = make_rep(Side::Right, a, 2, m);
    Representation rb = make_rep(Side::Right, b, 4, m);

    IntertwinerBasis hom_ab = intertwiner_basis(ra, rb);
    CHECK(hom_ab.elements.size() == 3);  // 1*1 (grade e) + 1*2 (grade g)
    CHECK(hom_ab.sv_gap >= kSvGapMin);
    CHECK(lu_hom_dim(Side::Right, a, 2, b, 4, 3) == 3);
    for (const ComplexMatrix& t : hom_ab.elements) {
        REQUIRE(t.rows() == 4);
        REQUIRE(t.cols() == 2);
        // t (x) 1 maps (2,3) -> (4,3); require s2 (t (x) 1) = (t (x) 1) s1.
        ComplexMatrix pad = kron(t, ComplexMatrix::identity(3));
        CHECK(residual(rb.op * pad, pad * ra.op) < 1e-10);
    }
    // Orthonormal in the Hilbert-Schmidt inner product.
    for (std::size_t i = 0; i < hom_ab.elements.size(); ++i) {
        for (std::size_t j = 0; j < hom_ab.elements.size(); ++j) {
            cd ip(0, 0);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 2; ++c)
                    ip += std::conj(hom_ab.elements[i].at(r, c)) * hom_ab.elements[j].at(r, c);
            CHECK(std::abs(ip - (i == j ? cd(1, 0) : cd(0, 0))) < 1e-10);
        }
    }

    // Empty hom space: disjoint grades; gap convention is +inf.
    ComplexMatrix c = graded_right_rep(z3, {2});
    Representation rc = make_rep(Side::Right, c, 1, m);
    IntertwinerBasis none = intertwiner_basis(trivial_rep(m, 1), rc);
    CHECK(none.elements.empty());
    CHECK(std::isinf(none.sv_gap));
    CHECK(lu_hom_dim(Side::Right, ComplexMatrix::identity(3), 1, c, 1, 3) == 0);

    // Endomorphisms of the regular representation: one per group element.
    Representation reg = make_rep(Side::Right, m.w, 3, m);
    IntertwinerBasis endo = intertwiner_basis(reg, reg);
    CHECK(endo.elements.size() == 3);
    CHECK(lu_hom_dim(Side::Right, m.w, 3, m.w, 3, 3) == 3);
}

TEST_CASE("intertwiner solver handles non-permutation operators") {
    // Conjugate one side by a Haar unitary on the carrier: dimensions are
    // invariant but the data is dense floating point.
    GroupTable z3 = GroupTable::cyclic(3);
    MultiplicativeUnitary m = from_group(z3);
    ComplexMatrix q = random_unitary(3, 41);
    ComplexMatrix conj = kron(q, ComplexMatrix::identity(3)) * m.w *
                         kron(q.adjoint(), ComplexMatrix::identity(3));
    CHECK(right_rep_check(conj, 3, m).passed);
    IntertwinerBasis hom = intertwiner_basis_raw(Side::Right, m.w, 3, conj, 3, 3);
    CHECK(hom.elements.size() == 3);
    CHECK(hom.sv_gap >= kSvGapMin);
    CHECK(lu_hom_dim(Side::Right, m.w, 3, conj, 3, 3) == 3);

    // Left-side solver agrees with its oracle too.
    CHECK(intertwiner_basis_raw(Side::Left, m.w, 3, m.w, 3, 3).elements.size() ==
          static_cast<std::size_t>(lu_hom_dim(Side::Left, m.w, 3, m.w, 3, 3)));
}

TEST_CASE("left-to-right dual transports representations to the dual unitary") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(2));
    Representation lreg = make_rep(Side::Left, m.w, 2, m);
    Representation dualized = left_to_right_dual(lreg);
    CHECK(dualized.side == Side::Right);
    MultiplicativeUnitary mh = dual(m);
    CHECK(right_rep_check(dualized.op, 2, mh).passed);
    CHECK(right_rep_check(dualized.op, 2, mh).residual == 0.0);
}

TEST_CASE("anti-representations and the mixed transfer round trip") {
    examples::MixedPair mixed = examples::mixed_pair_z2();
    const int d = 2;
    // V: the right family's operator at the left object (multiplicative
    // side); U~: the left family's operator at the right object, the
    // antimultiplicative reference for anti-representations.
    ComplexMatrix v = mixed.rho.entry(mixed.lam.object_id).op;
    ComplexMatrix ut = mixed.lam.entry(mixed.rho.object_id).op;
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(2));

    CHECK(antimultiplicative_check(ut, d).passed);
    CHECK(anti_rep_check(ut, d, ut, d).passed);

    // Regular right representation -> anti-representation -> back.
    TransferResult fwd = transfer(TransferDirection::RepToAnti, m.w, d, v, ut, d, d);
    REQUIRE(fwd.ok);
    CHECK(fwd.extraction_residual == 0.0);
    CHECK(anti_rep_check(fwd.op, d, ut, d).passed);
    TransferResult back = transfer(TransferDirection::AntiToRep, fwd.op, d, v, ut, d, d);
    REQUIRE(back.ok);
    CHECK(residual(back.op, m.w) == 0.0);

    // Anti-representation tensor stays an anti-representation.
    ComplexMatrix prod = tensor_anti(fwd.op, d, fwd.op, d, d);
    CHECK(anti_rep_check(prod, d * d, ut, d).passed);
}
