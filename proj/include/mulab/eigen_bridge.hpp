#pragma once

// Bridge between ComplexMatrix and Eigen, used where the library relies on
// Eigen's decompositions (QR, SVD).  Kept out of the core headers so the
// hot path stays on the in-house kernels.

#include <Eigen/Dense>

#include "mulab/matrix.hpp"

namespace mulab {

using EigenCMat =
    Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Eigen::Map<const EigenCMat> to_eigen(const ComplexMatrix& m) {
    return Eigen::Map<const EigenCMat>(m.data(), m.rows(), m.cols());
}

inline ComplexMatrix from_eigen(const Eigen::Ref<const EigenCMat>& e) {
    ComplexMatrix m(static_cast<int>(e.rows()), static_cast<int>(e.cols()));
    Eigen::Map<EigenCMat>(m.data(), m.rows(), m.cols()) = e;
    return m;
}

}  // namespace mulab
