#pragma once

#include <vector>

#include "mulab/multunit.hpp"

namespace mulab {

enum class Side { Right, Left };

// A corepresentation-style object for a fixed multiplicative unitary W:
//   right: S in U(K (x) H) with W_23 S_12 = S_12 S_13 W_23;
//   left:  V in U(H (x) K) with V_23 W_12 = W_12 V_13 V_23.
struct Representation {
    Side side = Side::Right;
    int carrier_dim = 0;
    MultiplicativeUnitary base;
    ComplexMatrix op;
};

CheckReport right_rep_check(const ComplexMatrix& s, int k, const MultiplicativeUnitary& m,
                            double tol = kDefaultTol);
CheckReport left_rep_check(const ComplexMatrix& v, int k, const MultiplicativeUnitary& m,
                           double tol = kDefaultTol);

// Validating factories (throw on failure) and an unchecked escape hatch.
Representation make_rep(Side side, ComplexMatrix op, int k, const MultiplicativeUnitary& m,
                        double tol = kDefaultTol);
Representation make_rep_unchecked(Side side, ComplexMatrix op, int k,
                                  const MultiplicativeUnitary& m);

// Trivial representation tau(C^k): the identity on K (x) H (either side).
Representation trivial_rep(const MultiplicativeUnitary& m, int k, Side side = Side::Right);

// Tensor products:
//   right: (S1 (x) S2) = (S1)_13 (S2)_23 on (k1, k2, d);
//   left:  (V1 (x) V2) = (V2)_13 (V1)_12 on (d, k1, k2).
Representation tensor_rep(const Representation& a, const Representation& b);

// Block direct sum on the carrier.
Representation direct_sum(const Representation& a, const Representation& b);

// Sends a left representation V of W to flip . V^* . flip, a right
// representation of the dual W^.
Representation left_to_right_dual(const Representation& v);

// Solution space of S2 (a (x) 1) = (a (x) 1) S1 (right side; mirrored for
// left), orthonormal in the Hilbert-Schmidt inner product.  `sv_gap` is the
// ratio (smallest discarded sigma) / (largest kept sigma), +inf when either
// set is empty.
struct IntertwinerBasis {
    std::vector<ComplexMatrix> elements;  // each target_k x source_k
    double sv_gap = 0.0;
    int source_k = 0, target_k = 0;
};

IntertwinerBasis intertwiner_basis(const Representation& a, const Representation& b,
                                   double rel_cutoff = kSvRelCutoff);

// Hom solver on raw matrices: basis of a with op2 (a (x) I_d) = (a (x) I_d) op1
// (right) or op2 (I_d (x) a) = (I_d (x) a) op1 (left).
IntertwinerBasis intertwiner_basis_raw(Side side, const ComplexMatrix& op1, int k1,
                                       const ComplexMatrix& op2, int k2, int d,
                                       double rel_cutoff = kSvRelCutoff);

// Anti-representation for an antimultiplicative unitary U^lambda:
//   X in U(H (x) K) with X_23 X_13 (U^lambda)_12 = (U^lambda)_12 X_23 on (d, d, k).
CheckReport anti_rep_check(const ComplexMatrix& x, int k, const ComplexMatrix& u_lambda, int d,
                           double tol = kDefaultTol);

// Anti-representation tensor: X (x)~ Y := Y_13 X_12 on (d, kx, ky).
ComplexMatrix tensor_anti(const ComplexMatrix& x, int kx, const ComplexMatrix& y, int ky,
                          int d);

// Transfer along a mixed absorber pair.  V = U^lambda in U(H^ (x) H) and
// W = U^rho-check in U(H^ (x) H) tie a right representation U^x of W|H to an
// anti-representation of the antimultiplicative U^lambda|H^:
//   rep -> anti: (X)_12 = W_13^* (S_23)^* W_13 S_23, trivial on leg 3;
//   anti -> rep: (S)_23 = V_13^* (X_12)^* V_13 X_12, trivial on leg 1;
// both on the signature (H^, K, H).
enum class TransferDirection { RepToAnti, AntiToRep };

struct TransferResult {
    ComplexMatrix op;
    double extraction_residual = 0.0;
    bool ok = false;
};

TransferResult transfer(TransferDirection dir, const ComplexMatrix& in_op, int k,
                        const ComplexMatrix& v, const ComplexMatrix& w_mix, int d_hat, int d,
                        double tol = kDefaultTol);

}  // namespace mulab
