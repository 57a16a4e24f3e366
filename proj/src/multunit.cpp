#include "mulab/multunit.hpp"

#include <stdexcept>

namespace mulab {

CheckReport pentagon_check(const ComplexMatrix& w, int d, double tol) {
    if (!w.is_square() || w.rows() != d * d)
        throw std::invalid_argument("pentagon_check: operator must act on H(x)H");
    CheckReport r;
    r.name = "multiplicative_unitary";
    r.tolerance = tol;
    r.add(CheckReport::leaf("1_unitarity", unitarity_residual(w), tol));
    const SpaceSignature sig{d, d, d};
    const ComplexMatrix w12 = embed_legs(w, {1, 2}, sig);
    const ComplexMatrix w13 = embed_legs(w, {1, 3}, sig);
    const ComplexMatrix w23 = embed_legs(w, {2, 3}, sig);
    r.add(CheckReport::leaf("2_pentagon", residual(w23 * w12, w12 * w13 * w23), tol));
    return r;
}

MultiplicativeUnitary make_multiplicative_unitary(ComplexMatrix w, int d, double tol) {
    const CheckReport rep = pentagon_check(w, d, tol);
    if (!rep.passed)
        throw std::invalid_argument("multiplicative unitary: validation failed (residual " +
                                    std::to_string(rep.residual) + ")");
    MultiplicativeUnitary m;
    m.dim = d;
    m.unitarity_res = rep.subs[0].residual;
    m.pentagon_res = rep.subs[1].residual;
    m.w = std::move(w);
    return m;
}

MultiplicativeUnitary make_multiplicative_unitary_unchecked(ComplexMatrix w, int d) {
    if (!w.is_square() || w.rows() != d * d)
        throw std::invalid_argument("multiplicative unitary: operator must act on H(x)H");
    MultiplicativeUnitary m;
    m.dim = d;
    m.unitarity_res = unitarity_residual(w);
    const SpaceSignature sig{d, d, d};
    const ComplexMatrix w12 = embed_legs(w, {1, 2}, sig);
    const ComplexMatrix w13 = embed_legs(w, {1, 3}, sig);
    const ComplexMatrix w23 = embed_legs(w, {2, 3}, sig);
    m.pentagon_res = residual(w23 * w12, w12 * w13 * w23);
    m.w = std::move(w);
    return m;
}

MultiplicativeUnitary from_group(const GroupTable& g) {
    g.validate();
    const int n = g.n;
    ComplexMatrix w(n * n, n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) w.at(a * n + g.op(a, b), a * n + b) = 1.0;
    return make_multiplicative_unitary(std::move(w), n, 0.0);
}

MultiplicativeUnitary dual(const MultiplicativeUnitary& m) {
    const ComplexMatrix sigma = flip(m.dim, m.dim);
    return make_multiplicative_unitary(sigma * m.w.adjoint() * sigma, m.dim);
}

CheckReport antimultiplicative_check(const ComplexMatrix& u, int d, double tol) {
    if (!u.is_square() || u.rows() != d * d)
        throw std::invalid_argument("antimultiplicative_check: operator must act on H(x)H");
    CheckReport r;
    r.name = "antimultiplicative_unitary";
    r.tolerance = tol;
    r.add(CheckReport::leaf("1_unitarity", unitarity_residual(u), tol));
    const SpaceSignature sig{d, d, d};
    const ComplexMatrix u12 = embed_legs(u, {1, 2}, sig);
    const ComplexMatrix u13 = embed_legs(u, {1, 3}, sig);
    const ComplexMatrix u23 = embed_legs(u, {2, 3}, sig);
    r.add(CheckReport::leaf("2_antimultiplicativity", residual(u12 * u23, u23 * u13 * u12), tol));
    return r;
}

double right_rep_residual(const ComplexMatrix& s, int k, const ComplexMatrix& w, int d) {
    const SpaceSignature sig{k, d, d};
    const ComplexMatrix s12 = embed_legs(s, {1, 2}, sig);
    const ComplexMatrix s13 = embed_legs(s, {1, 3}, sig);
    const ComplexMatrix w23 = embed_legs(w, {2, 3}, sig);
    return residual(w23 * s12, s12 * s13 * w23);
}

double left_rep_residual(const ComplexMatrix& v, int k, const ComplexMatrix& w, int d) {
    const SpaceSignature sig{d, d, k};
    const ComplexMatrix v23 = embed_legs(v, {2, 3}, sig);
    const ComplexMatrix v13 = embed_legs(v, {1, 3}, sig);
    const ComplexMatrix w12 = embed_legs(w, {1, 2}, sig);
    return residual(v23 * w12, w12 * v13 * v23);
}

double anti_rep_residual(const ComplexMatrix& x, int k, const ComplexMatrix& u, int d) {
    const SpaceSignature sig{d, d, k};
    const ComplexMatrix x23 = embed_legs(x, {2, 3}, sig);
    const ComplexMatrix x13 = embed_legs(x, {1, 3}, sig);
    const ComplexMatrix u12 = embed_legs(u, {1, 2}, sig);
    return residual(x23 * x13 * u12, u12 * x23);
}

MultiplicativeUnitary stabilize(const MultiplicativeUnitary& m, const ComplexMatrix& s_y,
                                int ky, double tol) {
    if (!s_y.is_square() || s_y.rows() != ky * m.dim)
        throw std::invalid_argument("stabilize: representation must act on Ky(x)H");
    const double rep_res = right_rep_residual(s_y, ky, m.w, m.dim);
    if (unitarity_residual(s_y) > tol || rep_res > tol)
        throw std::invalid_argument("stabilize: (s_y, ky) is not a right representation");
    const int d = m.dim;
    // Legs (2, 3) of (H, Ky, H, Ky) are exactly Ky (x) H, the carrier of s_y.
    const SpaceSignature sig{d, ky, d, ky};
    const ComplexMatrix w13 = embed_legs(m.w, {1, 3}, sig);
    const ComplexMatrix s23 = embed_legs(s_y, {2, 3}, sig);
    return make_multiplicative_unitary(w13 * s23, d * ky, tol);
}

}  // namespace mulab
