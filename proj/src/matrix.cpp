#include "mulab/matrix.hpp"

#include <algorithm>

#include "mulab/kernels.hpp"

namespace mulab {

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix: inner dimension mismatch in product");
    ComplexMatrix c(a.rows(), b.cols());
    if (a.rows() == 0 || b.cols() == 0 || a.cols() == 0) return c;
    kernels::active().matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    if (c.size() == 0) return c;
    kernels::active().kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(),
                           c.data());
    return c;
}

double residual(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("residual: shape mismatch");
    if (a.size() == 0) return 0.0;
    return kernels::active().max_abs_diff(a.data(), b.data(), a.size());
}

double max_abs(const ComplexMatrix& a) {
    double best = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) best = std::max(best, std::abs(a.data()[i]));
    return best;
}

}  // namespace mulab
