#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mulab {

using cd = std::complex<double>;

// Dense row-major complex matrix.  All operator algebra in the library is
// carried out on this type; leg structure is bookkeeping layered on top
// (see tensor.hpp), with leg 1 varying slowest in the flattened index.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("matrix: negative shape");
    }

    static ComplexMatrix identity(int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::size_t size() const { return a_.size(); }

    cd& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const cd& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * cols_ + c];
    }

    cd* data() { return a_.data(); }
    const cd* data() const { return a_.data(); }

    ComplexMatrix adjoint() const {
        ComplexMatrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = std::conj(at(r, c));
        return m;
    }

    ComplexMatrix transpose() const {
        ComplexMatrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
        return m;
    }

    ComplexMatrix conj() const {
        ComplexMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = std::conj(a_[i]);
        return m;
    }

    ComplexMatrix& operator+=(const ComplexMatrix& o) {
        require_same_shape(o, "+=");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    ComplexMatrix& operator-=(const ComplexMatrix& o) {
        require_same_shape(o, "-=");
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    ComplexMatrix& operator*=(cd s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
        a += b;
        return a;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
        a -= b;
        return a;
    }
    friend ComplexMatrix operator*(cd s, ComplexMatrix a) {
        a *= s;
        return a;
    }

    // Dispatches to the active kernel set (scalar or SIMD).
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    void require_same_shape(const ComplexMatrix& o, const char* op) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("matrix: shape mismatch in ") + op);
    }

    int rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

// Kronecker product; row-major with the left factor's index varying slowest,
// consistent with the leg-1-slowest flattening convention.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Maximum entrywise complex modulus of (a - b): the residual metric used by
// every check in the library.
double residual(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest |entry| of a matrix.
double max_abs(const ComplexMatrix& a);

}  // namespace mulab
