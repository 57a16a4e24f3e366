#pragma once

#include "mulab/absorber.hpp"
#include "mulab/repcat.hpp"

namespace mulab {

// Braided multiplicative unitary over the pair (H, L):
//   w on H(x)H   multiplicative;
//   u on L(x)H   a right representation of w;
//   v on H(x)L   a left representation of w;
//   f on L(x)L   the braided-multiplicative component.
struct BraidedMU {
    int dH = 0, dL = 0;
    ComplexMatrix w, u, v, f;
};

// Necessary validity conditions checked on the finite data (see
// bmu_validity_check); throws when one fails.
BraidedMU make_braided_mu(ComplexMatrix w, ComplexMatrix u, ComplexMatrix v, ComplexMatrix f,
                          int dH, int dL, double tol = kDefaultTol);
BraidedMU make_braided_mu_unchecked(ComplexMatrix w, ComplexMatrix u, ComplexMatrix v,
                                    ComplexMatrix f, int dH, int dL);

// dL = 1; the braided structure collapses to w itself.
BraidedMU trivial_bmu(const MultiplicativeUnitary& m);

// u = 1, v = 1: two independent multiplicative unitaries side by side; the
// braiding collapses to the tensor flip.
BraidedMU product_bmu(const MultiplicativeUnitary& w, const MultiplicativeUnitary& f);

// A representation of the braided structure: carrier K with
//   s on K(x)H:  right representation of w;
//   t on K(x)L:  the braided corepresentation component.
struct BraidedRep {
    int carrier_dim = 0;
    ComplexMatrix s, t;
};

// The braiding attached to a right representation (K, s) of w:
//   Z_13 = v_23 s_12^* v_23^* s_12  on (K, H, L), trivial on leg 2,
// giving Z on K(x)L and the braiding c_{L,K} = Z . flip(L,K): L(x)K -> K(x)L.
struct Braiding {
    int k = 0, dL = 0;
    ComplexMatrix z;      // on K (x) L
    ComplexMatrix braid;  // c_{L,K}: L (x) K -> K (x) L (square side k*dL)
    double extraction_residual = 0.0;
    bool ok = false;
};

Braiding braiding(const ComplexMatrix& s, int k, const BraidedMU& bmu,
                  double tol = kDefaultTol);

// The braiding of the reversed pair is the inverse: c_{K,L} = c_{L,K}^{-1}.
ComplexMatrix dual_braiding(const Braiding& b);

// Defining equations of a braided representation:
//   1: s unitary;  2: t unitary;
//   3: s is a right representation of w;
//   4: s_13 u_23 t_12 = t_12 s_13 u_23            on (K, L, H);
//   5: f_23 t_12 = t_12 (Z_L)_23 t_13 (Z_L)_23^* f_23  on (K, L, L),
// where Z_L is the braiding operator of (L, u).
CheckReport braided_rep_check(const BraidedRep& r, const BraidedMU& bmu,
                              double tol = kDefaultTol);

// Necessary conditions for a braided multiplicative unitary on finite data:
// pentagon for w, u/v representation equations, and (L, u, f) itself a
// braided representation.  (Sufficiency is established elsewhere; the
// semidirect pentagon and projection identities are the operational test.)
CheckReport bmu_validity_check(const BraidedMU& bmu, double tol = kDefaultTol);

BraidedRep braided_unit(const BraidedMU& bmu, int k = 1);

// Braided tensor product:
//   s = (s1)_13 (s2)_23                       on (K1, K2, H);
//   t = (Z2)_23 (t1)_13 (Z2)_23^* (t2)_23     on (K1, K2, L),
// where Z2 is the braiding operator of (K2, s2).
BraidedRep braided_tensor(const BraidedRep& r1, const BraidedRep& r2, const BraidedMU& bmu);

// Z-multiplicativity of the braiding under tensoring:
//   Z^{12} = (Z2)_23 (Z1)_13 on (K1, K2, L), plus both associations of a
// triple tensor against the explicit four-leg formula.
CheckReport triple_tensor_check(const BraidedRep& r1, const BraidedRep& r2,
                                const BraidedRep& r3, const BraidedMU& bmu,
                                double tol = kDefaultTol);

// Joint hom-space of the s- and t-components (morphisms of braided reps).
IntertwinerBasis braided_intertwiner_basis(const BraidedRep& a, const BraidedRep& b,
                                           const BraidedMU& bmu,
                                           double rel_cutoff = kSvRelCutoff);

// Semidirect-product multiplicative unitary on C = H (x) L:
//   W_C = w_13 u_23 v_34^* f_24 v_34   on (H, L, H, L),
// with the projection P = w_13 u_23 (trivial on the last L leg).
struct SemidirectResult {
    int dH = 0, dL = 0;
    MultiplicativeUnitary wc;
    ComplexMatrix p;
    CheckReport report;
};

SemidirectResult semidirect(const BraidedMU& bmu, double tol = kDefaultTol);

// The five projection identity groups tying P, W_C and w together:
//   a: P_23 Wc_12 = Wc_12 P_13 P_23            on (C, C, C)
//   b: Wc_23 P_12 = P_12 P_13 Wc_23            on (C, C, C)
//   c: P_23 P_12  = P_12 P_13 P_23             on (C, C, C)
//   d: V1 = w_13 u_23 on C(x)H and V2 = w_12 on H(x)C are bicharacters
//      linking w and W_C;
//   e: w_34 (w_13 u_23) = (w_13 u_23)(w_14 u_24) w_34 on (H, L, H, H).
CheckReport projection_check(const SemidirectResult& sr, const BraidedMU& bmu,
                             double tol = kDefaultTol);

// The induction functor Phi(K, s, t) = s_12 v_23^* t_13 v_23 on (K, H, L),
// a right representation of W_C.
Representation phi(const BraidedMU& bmu, const SemidirectResult& sr, const BraidedRep& r);

// Inverse direction: from a right representation A of W_C on K (x) C,
// recover the braided representation with
//   S_14 = A_123^* (w_24 u_34) A_123 (w_24 u_34)^*  on (K, H, L, H),
//            trivial on legs 2 and 3;
//   T_13 = v_23 S_12^* A v_23^*                     on (K, H, L),
//            trivial on leg 2;
// then certify braided_rep_check and Phi(S, T) = A.
struct ReconstructResult {
    BraidedRep rep;
    double s_extraction = 0.0;
    double t_extraction = 0.0;
    CheckReport report;
};

ReconstructResult reconstruct(const BraidedMU& bmu, const SemidirectResult& sr,
                              const ComplexMatrix& a, int k, double tol = kDefaultTol);

// The braided structure packaged as a right absorber candidate over the
// family {tau(C), tau(C^2), (L,u,f), rho, rho (x) rho} with rho = (C, w
// braided-tensor u, 1 braided-tensor f); the object operator is W_C and
// edges are braided hom bases.
AbsorberCandidate braided_absorber_candidate(const BraidedMU& bmu);

}  // namespace mulab
