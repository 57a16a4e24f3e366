#include "mulab/repcat.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "mulab/hom_detail.hpp"

namespace mulab {

namespace detail {

void fill_intertwiner_rows(Side side, const ComplexMatrix& op1, int k1,
                           const ComplexMatrix& op2, int k2, int d, EigenCMat& M,
                           int row_offset) {
    const int side_r = k2 * d, side_c = k1 * d;
    for (int rr = 0; rr < side_r; ++rr)
        for (int cc = 0; cc < side_c; ++cc) {
            const int row = row_offset + rr * side_c + cc;
            for (int i = 0; i < k2; ++i)
                for (int j = 0; j < k1; ++j) {
                    cd val = 0.0;
                    if (side == Side::Right) {
                        const int rk = rr / d, rh = rr % d;
                        const int ck = cc / d, ch = cc % d;
                        if (j == ck) val += op2.at(rr, i * d + ch);
                        if (i == rk) val -= op1.at(j * d + rh, cc);
                    } else {
                        const int rh = rr / k2, rk = rr % k2;
                        const int ch = cc / k1, ck = cc % k1;
                        if (j == ck) val += op2.at(rr, ch * k2 + i);
                        if (i == rk) val -= op1.at(rh * k1 + j, cc);
                    }
                    M(row, i * k1 + j) = val;
                }
        }
}

IntertwinerBasis null_space_basis(const EigenCMat& M, int k1, int k2, double rel_cutoff) {
    Eigen::JacobiSVD<EigenCMat> svd(M, Eigen::ComputeThinU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double thr = rel_cutoff * smax;

    IntertwinerBasis basis;
    basis.source_k = k1;
    basis.target_k = k2;
    double largest_kept = 0.0;
    double smallest_discarded = std::numeric_limits<double>::infinity();
    for (int i = 0; i < sv.size(); ++i) {
        if (sv(i) <= thr) {
            largest_kept = std::max(largest_kept, sv(i));
            ComplexMatrix a(k2, k1);
            for (int p = 0; p < k2; ++p)
                for (int q = 0; q < k1; ++q) a.at(p, q) = svd.matrixV()(p * k1 + q, i);
            // Deterministic phase: largest-modulus entry made real positive.
            int bp = 0, bq = 0;
            double bm = -1.0;
            for (int p = 0; p < k2; ++p)
                for (int q = 0; q < k1; ++q)
                    if (std::abs(a.at(p, q)) > bm) {
                        bm = std::abs(a.at(p, q));
                        bp = p;
                        bq = q;
                    }
            if (bm > 0.0) a *= std::conj(a.at(bp, bq)) / cd(bm, 0.0);
            basis.elements.push_back(std::move(a));
        } else {
            smallest_discarded = std::min(smallest_discarded, sv(i));
        }
    }
    if (basis.elements.empty() || largest_kept == 0.0 || !std::isfinite(smallest_discarded))
        basis.sv_gap = std::numeric_limits<double>::infinity();
    else
        basis.sv_gap = smallest_discarded / largest_kept;
    return basis;
}

}  // namespace detail

CheckReport right_rep_check(const ComplexMatrix& s, int k, const MultiplicativeUnitary& m,
                            double tol) {
    if (!s.is_square() || s.rows() != k * m.dim)
        throw std::invalid_argument("right_rep_check: operator must act on K(x)H");
    CheckReport r;
    r.name = "right_representation";
    r.tolerance = tol;
    r.add(CheckReport::leaf("1_unitarity", unitarity_residual(s), tol));
    r.add(CheckReport::leaf("2_corep_equation", right_rep_residual(s, k, m.w, m.dim), tol));
    return r;
}

CheckReport left_rep_check(const ComplexMatrix& v, int k, const MultiplicativeUnitary& m,
                           double tol) {
    if (!v.is_square() || v.rows() != m.dim * k)
        throw std::invalid_argument("left_rep_check: operator must act on H(x)K");
    CheckReport r;
    r.name = "left_representation";
    r.tolerance = tol;
    r.add(CheckReport::leaf("1_unitarity", unitarity_residual(v), tol));
    r.add(CheckReport::leaf("2_corep_equation", left_rep_residual(v, k, m.w, m.dim), tol));
    return r;
}

Representation make_rep(Side side, ComplexMatrix op, int k, const MultiplicativeUnitary& m,
                        double tol) {
    const CheckReport rep = side == Side::Right ? right_rep_check(op, k, m, tol)
                                                : left_rep_check(op, k, m, tol);
    if (!rep.passed)
        throw std::invalid_argument("representation: validation failed (residual " +
                                    std::to_string(rep.residual) + ")");
    Representation r;
    r.side = side;
    r.carrier_dim = k;
    r.base = m;
    r.op = std::move(op);
    return r;
}

Representation make_rep_unchecked(Side side, ComplexMatrix op, int k,
                                  const MultiplicativeUnitary& m) {
    Representation r;
    r.side = side;
    r.carrier_dim = k;
    r.base = m;
    r.op = std::move(op);
    return r;
}

Representation trivial_rep(const MultiplicativeUnitary& m, int k, Side side) {
    return make_rep_unchecked(side, ComplexMatrix::identity(k * m.dim), k, m);
}

Representation tensor_rep(const Representation& a, const Representation& b) {
    if (a.side != b.side) throw std::invalid_argument("tensor_rep: mixed sides");
    if (a.base.dim != b.base.dim) throw std::invalid_argument("tensor_rep: different bases");
    const int d = a.base.dim;
    const int k1 = a.carrier_dim, k2 = b.carrier_dim;
    ComplexMatrix op;
    if (a.side == Side::Right) {
        const SpaceSignature sig{k1, k2, d};
        op = embed_legs(a.op, {1, 3}, sig) * embed_legs(b.op, {2, 3}, sig);
    } else {
        const SpaceSignature sig{d, k1, k2};
        op = embed_legs(b.op, {1, 3}, sig) * embed_legs(a.op, {1, 2}, sig);
    }
    return make_rep_unchecked(a.side, std::move(op), k1 * k2, a.base);
}

Representation direct_sum(const Representation& a, const Representation& b) {
    if (a.side != b.side) throw std::invalid_argument("direct_sum: mixed sides");
    if (a.base.dim != b.base.dim) throw std::invalid_argument("direct_sum: different bases");
    const int d = a.base.dim;
    const int k1 = a.carrier_dim, k2 = b.carrier_dim;
    const int k = k1 + k2;
    ComplexMatrix op(k * d, k * d);
    if (a.side == Side::Right) {
        // index (kappa, h); carrier blocks [0, k1) and [k1, k)
        for (int rk = 0; rk < k; ++rk)
            for (int rh = 0; rh < d; ++rh)
                for (int ck = 0; ck < k; ++ck)
                    for (int ch = 0; ch < d; ++ch) {
                        cd v = 0.0;
                        if (rk < k1 && ck < k1)
                            v = a.op.at(rk * d + rh, ck * d + ch);
                        else if (rk >= k1 && ck >= k1)
                            v = b.op.at((rk - k1) * d + rh, (ck - k1) * d + ch);
                        op.at(rk * d + rh, ck * d + ch) = v;
                    }
    } else {
        // index (h, kappa)
        for (int rh = 0; rh < d; ++rh)
            for (int rk = 0; rk < k; ++rk)
                for (int ch = 0; ch < d; ++ch)
                    for (int ck = 0; ck < k; ++ck) {
                        cd v = 0.0;
                        if (rk < k1 && ck < k1)
                            v = a.op.at(rh * k1 + rk, ch * k1 + ck);
                        else if (rk >= k1 && ck >= k1)
                            v = b.op.at(rh * k2 + (rk - k1), ch * k2 + (ck - k1));
                        op.at(rh * k + rk, ch * k + ck) = v;
                    }
    }
    return make_rep_unchecked(a.side, std::move(op), k, a.base);
}

Representation left_to_right_dual(const Representation& v) {
    if (v.side != Side::Left)
        throw std::invalid_argument("left_to_right_dual: expects a left representation");
    const int d = v.base.dim, k = v.carrier_dim;
    ComplexMatrix s = flip(d, k) * v.op.adjoint() * flip(k, d);
    return make_rep_unchecked(Side::Right, std::move(s), k, dual(v.base));
}

IntertwinerBasis intertwiner_basis_raw(Side side, const ComplexMatrix& op1, int k1,
                                       const ComplexMatrix& op2, int k2, int d,
                                       double rel_cutoff) {
    const int rows = detail::intertwiner_block_rows(k1, k2, d);
    EigenCMat M(rows, k2 * k1);
    detail::fill_intertwiner_rows(side, op1, k1, op2, k2, d, M, 0);
    return detail::null_space_basis(M, k1, k2, rel_cutoff);
}

IntertwinerBasis intertwiner_basis(const Representation& a, const Representation& b,
                                   double rel_cutoff) {
    if (a.side != b.side) throw std::invalid_argument("intertwiner_basis: mixed sides");
    if (a.base.dim != b.base.dim)
        throw std::invalid_argument("intertwiner_basis: different bases");
    return intertwiner_basis_raw(a.side, a.op, a.carrier_dim, b.op, b.carrier_dim, a.base.dim,
                                 rel_cutoff);
}

CheckReport anti_rep_check(const ComplexMatrix& x, int k, const ComplexMatrix& u_lambda, int d,
                           double tol) {
    if (!x.is_square() || x.rows() != d * k)
        throw std::invalid_argument("anti_rep_check: operator must act on H(x)K");
    if (!u_lambda.is_square() || u_lambda.rows() != d * d)
        throw std::invalid_argument("anti_rep_check: base must act on H(x)H");
    CheckReport r;
    r.name = "anti_representation";
    r.tolerance = tol;
    r.add(CheckReport::leaf("1_unitarity", unitarity_residual(x), tol));
    r.add(CheckReport::leaf("2_anti_corep_equation", anti_rep_residual(x, k, u_lambda, d), tol));
    return r;
}

ComplexMatrix tensor_anti(const ComplexMatrix& x, int kx, const ComplexMatrix& y, int ky,
                          int d) {
    const SpaceSignature sig{d, kx, ky};
    return embed_legs(y, {1, 3}, sig) * embed_legs(x, {1, 2}, sig);
}

TransferResult transfer(TransferDirection dir, const ComplexMatrix& in_op, int k,
                        const ComplexMatrix& v, const ComplexMatrix& w_mix, int d_hat, int d,
                        double tol) {
    const SpaceSignature sig{d_hat, k, d};
    TransferResult out;
    if (dir == TransferDirection::RepToAnti) {
        if (!in_op.is_square() || in_op.rows() != k * d)
            throw std::invalid_argument("transfer: representation must act on K(x)H");
        const ComplexMatrix w13 = embed_legs(w_mix, {1, 3}, sig);
        const ComplexMatrix s23 = embed_legs(in_op, {2, 3}, sig);
        const ComplexMatrix rhs = w13.adjoint() * s23.adjoint() * w13 * s23;
        const ExtractResult ex = extract_trivial_leg(rhs, sig, 3, tol);
        out.op = ex.op;
        out.extraction_residual = ex.residual;
        out.ok = ex.ok;
    } else {
        if (!in_op.is_square() || in_op.rows() != d_hat * k)
            throw std::invalid_argument("transfer: anti-representation must act on H^(x)K");
        const ComplexMatrix v13 = embed_legs(v, {1, 3}, sig);
        const ComplexMatrix x12 = embed_legs(in_op, {1, 2}, sig);
        const ComplexMatrix rhs = v13.adjoint() * x12.adjoint() * v13 * x12;
        const ExtractResult ex = extract_trivial_leg(rhs, sig, 1, tol);
        out.op = ex.op;
        out.extraction_residual = ex.residual;
        out.ok = ex.ok;
    }
    return out;
}

}  // namespace mulab
