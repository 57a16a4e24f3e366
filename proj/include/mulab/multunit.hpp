#pragma once

#include "mulab/groups.hpp"
#include "mulab/report.hpp"
#include "mulab/tensor.hpp"

namespace mulab {

// A unitary W on H (x) H satisfying the pentagon equation
//   W_23 W_12 = W_12 W_13 W_23   on H (x) H (x) H.
struct MultiplicativeUnitary {
    int dim = 0;
    ComplexMatrix w;
    double unitarity_res = 0.0;
    double pentagon_res = 0.0;
};

CheckReport pentagon_check(const ComplexMatrix& w, int d, double tol = kDefaultTol);

// Validating factory: throws std::invalid_argument when w fails unitarity
// or the pentagon equation at `tol`.
MultiplicativeUnitary make_multiplicative_unitary(ComplexMatrix w, int d,
                                                  double tol = kDefaultTol);

// Records the residuals without enforcing them (for negative tests).
MultiplicativeUnitary make_multiplicative_unitary_unchecked(ComplexMatrix w, int d);

// W(delta_g (x) delta_h) = delta_g (x) delta_{gh} on l2(G) (x) l2(G).
MultiplicativeUnitary from_group(const GroupTable& g);

// Dual W^ = flip . W^* . flip; an involution.
MultiplicativeUnitary dual(const MultiplicativeUnitary& m);

// U_12 U_23 = U_23 U_13 U_12 on H (x) H (x) H, plus unitarity.  The dual of
// the adjoint of a multiplicative unitary satisfies this.
CheckReport antimultiplicative_check(const ComplexMatrix& u, int d, double tol = kDefaultTol);

// Defining-equation residuals, shared with the representation layer.
//   right: W_23 S_12 = S_12 S_13 W_23 on (k, d, d),   S on K (x) H;
//   left:  V_23 W_12 = W_12 V_13 V_23 on (d, d, k),   V on H (x) K;
//   anti:  X_23 X_13 U_12 = U_12 X_23 on (d, d, k),   X on H (x) K,
// with U antimultiplicative.
double right_rep_residual(const ComplexMatrix& s, int k, const ComplexMatrix& w, int d);
double left_rep_residual(const ComplexMatrix& v, int k, const ComplexMatrix& w, int d);
double anti_rep_residual(const ComplexMatrix& x, int k, const ComplexMatrix& u, int d);

// Given a right representation (Ky, s_y) of m, forms the stabilized
// multiplicative unitary W_13 (S^y)_23 on (H (x) Ky)^(x2).  Throws when
// (s_y, ky) is not a right representation at `tol`.
MultiplicativeUnitary stabilize(const MultiplicativeUnitary& m, const ComplexMatrix& s_y,
                                int ky, double tol = kDefaultTol);

}  // namespace mulab
