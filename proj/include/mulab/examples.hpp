#pragma once

#include <vector>

#include "mulab/absorber.hpp"
#include "mulab/braided.hpp"
#include "mulab/groups.hpp"

namespace mulab::examples {

// Group multiplicative unitaries used across the test corpus.
MultiplicativeUnitary z2_mu();
MultiplicativeUnitary z3_mu();
MultiplicativeUnitary s3_mu();

// Braided multiplicative unitary of one group acting on another.
// beta[q][n] gives the action of q in Q on n in N; it must be a
// homomorphism Q -> Aut(N) (validated, throws otherwise).  The semidirect
// product of the result is the group multiplicative unitary of Q x N with
// the law (q, n)(q', n') = (q q', beta[q']^{-1}(n) n').  All four component
// matrices are 0/1 permutation matrices.
BraidedMU action_bmu(const GroupTable& q, const GroupTable& n,
                     const std::vector<std::vector<int>>& beta);

// Z/2 acting on Z/3 by inversion; the semidirect product is of order 6 and
// nonabelian.
BraidedMU z2_on_z3_bmu();

// A right/left natural-absorber pair over Z/2.  The right candidate is the
// canonical one; the left candidate shares the object (and the category's
// edges and tensor pairs) and is found by exhaustive search over
// grade-respecting rules
//   U~^x (delta_c (x) xi_j) = chi(c, g_j) delta_{phi(c, g_j)} (x) xi_j,
// phi: G x G -> G (16 maps), chi: G x G -> {1, -1, i, -i} (256 maps),
// filtered by the absorber axioms, antimultiplicativity of the operator at
// the object, and the six mixed exchange relations.  The first hit in
// enumeration order is phi(c, g) = c g with chi = 1.
struct MixedPair {
    AbsorberCandidate rho;
    AbsorberCandidate lam;
    int searched = 0;  // combinations rejected before the hit
};
MixedPair mixed_pair_z2();

}  // namespace mulab::examples
