#pragma once

// Shared internals of the Hom-space solvers: building the linearized
// intertwiner equation and extracting an orthonormal null-space basis.
// The braided solver stacks several such blocks into one system.

#include "mulab/eigen_bridge.hpp"
#include "mulab/repcat.hpp"

namespace mulab::detail {

// Number of rows contributed by one intertwiner block.
inline int intertwiner_block_rows(int k1, int k2, int d) { return k2 * d * k1 * d; }

// Fills rows [row_offset, row_offset + block_rows) of M (cols = k2*k1) with
// the map vec(a) -> vec(op2 (a x 1) - (a x 1) op1)   (right side)
//          vec(a) -> vec(op2 (1 x a) - (1 x a) op1)  (left side).
void fill_intertwiner_rows(Side side, const ComplexMatrix& op1, int k1,
                           const ComplexMatrix& op2, int k2, int d, EigenCMat& M,
                           int row_offset);

// Null space of M via SVD with a relative singular-value cutoff; columns of
// V are reshaped to k2 x k1 matrices, phase-fixed deterministically.
IntertwinerBasis null_space_basis(const EigenCMat& M, int k1, int k2, double rel_cutoff);

}  // namespace mulab::detail
