#pragma once

#include "mulab/groups.hpp"
#include "mulab/matrix.hpp"
#include "mulab/repcat.hpp"

namespace mulab::testing {

// Independent re-computations used to cross-check derived quantities.

// Null-space dimension of the intertwiner condition, built column by column
// from full matrix products and ranked with a pivoted LU decomposition
// (instead of the production path's direct index fill + SVD).
int lu_hom_dim(Side side, const ComplexMatrix& op1, int k1, const ComplexMatrix& op2, int k2,
               int d);

// Same ranking approach for the joint condition of a braided morphism: one
// map must intertwine both the s components (padded against dh) and the t
// components (padded against dl) simultaneously.
int lu_joint_hom_dim(const ComplexMatrix& s1, const ComplexMatrix& t1, int k1,
                     const ComplexMatrix& s2, const ComplexMatrix& t2, int k2, int dh, int dl);

// Pentagon residual evaluated by applying the three leg actions to every
// basis vector with explicit index loops; no embedding machinery.
double direct_pentagon_residual(const ComplexMatrix& w, int d);

// The regular unitary and its dual written down directly from the group
// law: delta_g (x) delta_h -> delta_g (x) delta_{gh}, and the dual
// delta_g (x) delta_h -> delta_{h^{-1} g} (x) delta_h.
ComplexMatrix regular_unitary(const GroupTable& g);
ComplexMatrix regular_dual_unitary(const GroupTable& g);

}  // namespace mulab::testing
