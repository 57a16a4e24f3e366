#include "oracles.hpp"

#include <Eigen/LU>
#include <stdexcept>
#include <vector>

#include "mulab/eigen_bridge.hpp"

namespace mulab::testing {

namespace {

// a (x) I_d resp. I_d (x) a as an explicit matrix.
ComplexMatrix pad_right(const ComplexMatrix& a, int d) {
    return kron(a, ComplexMatrix::identity(d));
}

ComplexMatrix pad_left(const ComplexMatrix& a, int d) {
    return kron(ComplexMatrix::identity(d), a);
}

}  // namespace

int lu_hom_dim(Side side, const ComplexMatrix& op1, int k1, const ComplexMatrix& op2, int k2,
               int d) {
    if (op1.rows() != k1 * d || op2.rows() != k2 * d) {
        throw std::invalid_argument("lu_hom_dim: operator/carrier size mismatch");
    }
    const int cols = k2 * k1;
    const int rows = (k2 * d) * (k1 * d);
    EigenCMat m(rows, cols);
    for (int p = 0; p < k2; ++p) {
        for (int q = 0; q < k1; ++q) {
            ComplexMatrix e(k2, k1);
            e.at(p, q) = cd(1.0, 0.0);
            ComplexMatrix padded = (side == Side::Right) ? pad_right(e, d) : pad_left(e, d);
            ComplexMatrix diff = op2 * padded - padded * op1;
            Eigen::Index col = static_cast<Eigen::Index>(p) * k1 + q;
            for (int r = 0; r < diff.rows(); ++r) {
                for (int c = 0; c < diff.cols(); ++c) {
                    m(static_cast<Eigen::Index>(r) * diff.cols() + c, col) = diff.at(r, c);
                }
            }
        }
    }
    Eigen::FullPivLU<EigenCMat> lu(m);
    lu.setThreshold(1e-8);
    return cols - static_cast<int>(lu.rank());
}

int lu_joint_hom_dim(const ComplexMatrix& s1, const ComplexMatrix& t1, int k1,
                     const ComplexMatrix& s2, const ComplexMatrix& t2, int k2, int dh, int dl) {
    if (s1.rows() != k1 * dh || t1.rows() != k1 * dl || s2.rows() != k2 * dh ||
        t2.rows() != k2 * dl) {
        throw std::invalid_argument("lu_joint_hom_dim: operator/carrier size mismatch");
    }
    const int cols = k2 * k1;
    const int s_rows = (k2 * dh) * (k1 * dh);
    const int t_rows = (k2 * dl) * (k1 * dl);
    EigenCMat m(s_rows + t_rows, cols);
    for (int p = 0; p < k2; ++p) {
        for (int q = 0; q < k1; ++q) {
            ComplexMatrix e(k2, k1);
            e.at(p, q) = cd(1.0, 0.0);
            ComplexMatrix ps = pad_right(e, dh);
            ComplexMatrix pt = pad_right(e, dl);
            ComplexMatrix ds = s2 * ps - ps * s1;
            ComplexMatrix dt = t2 * pt - pt * t1;
            Eigen::Index col = static_cast<Eigen::Index>(p) * k1 + q;
            for (int r = 0; r < ds.rows(); ++r) {
                for (int c = 0; c < ds.cols(); ++c) {
                    m(static_cast<Eigen::Index>(r) * ds.cols() + c, col) = ds.at(r, c);
                }
            }
            for (int r = 0; r < dt.rows(); ++r) {
                for (int c = 0; c < dt.cols(); ++c) {
                    m(s_rows + static_cast<Eigen::Index>(r) * dt.cols() + c, col) = dt.at(r, c);
                }
            }
        }
    }
    Eigen::FullPivLU<EigenCMat> lu(m);
    lu.setThreshold(1e-8);
    return cols - static_cast<int>(lu.rank());
}

double direct_pentagon_residual(const ComplexMatrix& w, int d) {
    if (w.rows() != d * d || w.cols() != d * d) {
        throw std::invalid_argument("direct_pentagon_residual: size mismatch");
    }
    const int n = d * d * d;
    auto idx = [d](int a, int b, int c) { return (a * d + b) * d + c; };

    // Apply w to the chosen pair of legs of a length-d^3 vector.
    auto apply = [&](int leg_a, int leg_b, const std::vector<cd>& v) {
        std::vector<cd> out(n, cd(0.0, 0.0));
        for (int a = 0; a < d; ++a) {
            for (int b = 0; b < d; ++b) {
                for (int c = 0; c < d; ++c) {
                    int legs[3] = {a, b, c};
                    cd acc(0.0, 0.0);
                    for (int x = 0; x < d; ++x) {
                        for (int y = 0; y < d; ++y) {
                            int src[3] = {a, b, c};
                            src[leg_a] = x;
                            src[leg_b] = y;
                            acc += w.at(legs[leg_a] * d + legs[leg_b], x * d + y) *
                                   v[idx(src[0], src[1], src[2])];
                        }
                    }
                    out[idx(a, b, c)] = acc;
                }
            }
        }
        return out;
    };

    double worst = 0.0;
    for (int col = 0; col < n; ++col) {
        std::vector<cd> e(n, cd(0.0, 0.0));
        e[col] = cd(1.0, 0.0);
        // w23 w12 on the left, w12 w13 w23 on the right.
        std::vector<cd> lhs = apply(1, 2, apply(0, 1, e));
        std::vector<cd> rhs = apply(0, 1, apply(0, 2, apply(1, 2, e)));
        for (int r = 0; r < n; ++r) {
            worst = std::max(worst, std::abs(lhs[r] - rhs[r]));
        }
    }
    return worst;
}

ComplexMatrix regular_unitary(const GroupTable& g) {
    const int n = g.n;
    ComplexMatrix w(n * n, n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            w.at(a * n + g.op(a, b), a * n + b) = cd(1.0, 0.0);
        }
    }
    return w;
}

ComplexMatrix regular_dual_unitary(const GroupTable& g) {
    const int n = g.n;
    ComplexMatrix w(n * n, n * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            w.at(g.op(g.inverse(b), a) * n + b, a * n + b) = cd(1.0, 0.0);
        }
    }
    return w;
}

}  // namespace mulab::testing
