#include "mulab/braided.hpp"

#include <stdexcept>

#include "mulab/hom_detail.hpp"

namespace mulab {

namespace {

bool hom_affordable(long long rows, long long cols) {
    return rows * cols * cols <= 5'000'000'000LL;
}

void check_bmu_shapes(const BraidedMU& b) {
    if (b.dH <= 0 || b.dL <= 0) throw std::invalid_argument("braided mu: bad dimensions");
    if (!b.w.is_square() || b.w.rows() != b.dH * b.dH)
        throw std::invalid_argument("braided mu: w must act on H(x)H");
    if (!b.u.is_square() || b.u.rows() != b.dL * b.dH)
        throw std::invalid_argument("braided mu: u must act on L(x)H");
    if (!b.v.is_square() || b.v.rows() != b.dH * b.dL)
        throw std::invalid_argument("braided mu: v must act on H(x)L");
    if (!b.f.is_square() || b.f.rows() != b.dL * b.dL)
        throw std::invalid_argument("braided mu: f must act on L(x)L");
}

}  // namespace

BraidedMU make_braided_mu_unchecked(ComplexMatrix w, ComplexMatrix u, ComplexMatrix v,
                                    ComplexMatrix f, int dH, int dL) {
    BraidedMU b;
    b.dH = dH;
    b.dL = dL;
    b.w = std::move(w);
    b.u = std::move(u);
    b.v = std::move(v);
    b.f = std::move(f);
    check_bmu_shapes(b);
    return b;
}

BraidedMU make_braided_mu(ComplexMatrix w, ComplexMatrix u, ComplexMatrix v, ComplexMatrix f,
                          int dH, int dL, double tol) {
    BraidedMU b = make_braided_mu_unchecked(std::move(w), std::move(u), std::move(v),
                                            std::move(f), dH, dL);
    const CheckReport r = bmu_validity_check(b, tol);
    if (!r.passed)
        throw std::invalid_argument("braided mu: validation failed (residual " +
                                    std::to_string(r.residual) + ")");
    return b;
}

BraidedMU trivial_bmu(const MultiplicativeUnitary& m) {
    return make_braided_mu_unchecked(m.w, ComplexMatrix::identity(m.dim),
                                     ComplexMatrix::identity(m.dim), ComplexMatrix::identity(1),
                                     m.dim, 1);
}

BraidedMU product_bmu(const MultiplicativeUnitary& w, const MultiplicativeUnitary& f) {
    return make_braided_mu_unchecked(w.w, ComplexMatrix::identity(f.dim * w.dim),
                                     ComplexMatrix::identity(w.dim * f.dim), f.w, w.dim, f.dim);
}

Braiding braiding(const ComplexMatrix& s, int k, const BraidedMU& bmu, double tol) {
    check_bmu_shapes(bmu);
    if (!s.is_square() || s.rows() != k * bmu.dH)
        throw std::invalid_argument("braiding: representation must act on K(x)H");
    const SpaceSignature sig{k, bmu.dH, bmu.dL};
    const ComplexMatrix v23 = embed_legs(bmu.v, {2, 3}, sig);
    const ComplexMatrix s12 = embed_legs(s, {1, 2}, sig);
    const ComplexMatrix x = v23 * s12.adjoint() * v23.adjoint() * s12;
    const ExtractResult ex = extract_trivial_leg(x, sig, 2, tol);
    Braiding b;
    b.k = k;
    b.dL = bmu.dL;
    b.z = ex.op;
    b.extraction_residual = ex.residual;
    b.ok = ex.ok;
    b.braid = b.z * flip(bmu.dL, k);
    return b;
}

ComplexMatrix dual_braiding(const Braiding& b) { return b.braid.adjoint(); }

CheckReport braided_rep_check(const BraidedRep& r, const BraidedMU& bmu, double tol) {
    check_bmu_shapes(bmu);
    const int k = r.carrier_dim, dH = bmu.dH, dL = bmu.dL;
    if (!r.s.is_square() || r.s.rows() != k * dH)
        throw std::invalid_argument("braided_rep_check: s must act on K(x)H");
    if (!r.t.is_square() || r.t.rows() != k * dL)
        throw std::invalid_argument("braided_rep_check: t must act on K(x)L");
    CheckReport rep;
    rep.name = "braided_representation";
    rep.tolerance = tol;
    rep.add(CheckReport::leaf("1_unitarity_s", unitarity_residual(r.s), tol));
    rep.add(CheckReport::leaf("2_unitarity_t", unitarity_residual(r.t), tol));
    rep.add(CheckReport::leaf("3_s_corep", right_rep_residual(r.s, k, bmu.w, dH), tol));
    {
        const SpaceSignature sig{k, dL, dH};
        const auto s13 = embed_legs(r.s, {1, 3}, sig), u23 = embed_legs(bmu.u, {2, 3}, sig),
                   t12 = embed_legs(r.t, {1, 2}, sig);
        rep.add(CheckReport::leaf("4_t_su_invariance",
                                  residual(s13 * u23 * t12, t12 * s13 * u23), tol));
    }
    {
        const Braiding zl = braiding(bmu.u, dL, bmu, tol);
        rep.add(CheckReport::leaf("5a_braiding_extraction", zl.extraction_residual, tol));
        const SpaceSignature sig{k, dL, dL};
        const auto f23 = embed_legs(bmu.f, {2, 3}, sig), t12 = embed_legs(r.t, {1, 2}, sig),
                   t13 = embed_legs(r.t, {1, 3}, sig), z23 = embed_legs(zl.z, {2, 3}, sig);
        rep.add(CheckReport::leaf(
            "5_t_corep", residual(f23 * t12, t12 * z23 * t13 * z23.adjoint() * f23), tol));
    }
    return rep;
}

CheckReport bmu_validity_check(const BraidedMU& bmu, double tol) {
    check_bmu_shapes(bmu);
    CheckReport r;
    r.name = "braided_mu_validity";
    r.tolerance = tol;
    r.note = "necessary conditions on finite data";
    {
        CheckReport p = pentagon_check(bmu.w, bmu.dH, tol);
        p.name = "1_w_multiplicative";
        r.add(p);
    }
    r.add(CheckReport::leaf("2_u_unitarity", unitarity_residual(bmu.u), tol));
    r.add(CheckReport::leaf("3_u_right_rep", right_rep_residual(bmu.u, bmu.dL, bmu.w, bmu.dH),
                            tol));
    r.add(CheckReport::leaf("4_v_unitarity", unitarity_residual(bmu.v), tol));
    r.add(CheckReport::leaf("5_v_left_rep", left_rep_residual(bmu.v, bmu.dL, bmu.w, bmu.dH),
                            tol));
    {
        BraidedRep gen;
        gen.carrier_dim = bmu.dL;
        gen.s = bmu.u;
        gen.t = bmu.f;
        CheckReport g = braided_rep_check(gen, bmu, tol);
        g.name = "6_generator_braided_rep";
        r.add(g);
    }
    return r;
}

BraidedRep braided_unit(const BraidedMU& bmu, int k) {
    BraidedRep r;
    r.carrier_dim = k;
    r.s = ComplexMatrix::identity(k * bmu.dH);
    r.t = ComplexMatrix::identity(k * bmu.dL);
    return r;
}

BraidedRep braided_tensor(const BraidedRep& r1, const BraidedRep& r2, const BraidedMU& bmu) {
    const int k1 = r1.carrier_dim, k2 = r2.carrier_dim;
    BraidedRep out;
    out.carrier_dim = k1 * k2;
    {
        const SpaceSignature sig{k1, k2, bmu.dH};
        out.s = embed_legs(r1.s, {1, 3}, sig) * embed_legs(r2.s, {2, 3}, sig);
    }
    {
        const Braiding z2 = braiding(r2.s, k2, bmu);
        const SpaceSignature sig{k1, k2, bmu.dL};
        const ComplexMatrix z23 = embed_legs(z2.z, {2, 3}, sig);
        out.t = z23 * embed_legs(r1.t, {1, 3}, sig) * z23.adjoint() *
                embed_legs(r2.t, {2, 3}, sig);
    }
    return out;
}

CheckReport triple_tensor_check(const BraidedRep& r1, const BraidedRep& r2,
                                const BraidedRep& r3, const BraidedMU& bmu, double tol) {
    const int k1 = r1.carrier_dim, k2 = r2.carrier_dim, k3 = r3.carrier_dim;
    CheckReport rep;
    rep.name = "triple_tensor";
    rep.tolerance = tol;

    const BraidedRep t12 = braided_tensor(r1, r2, bmu);
    const BraidedRep t23 = braided_tensor(r2, r3, bmu);
    const BraidedRep left = braided_tensor(t12, r3, bmu);
    const BraidedRep right = braided_tensor(r1, t23, bmu);
    rep.add(CheckReport::leaf("1_assoc_s", residual(left.s, right.s), tol));
    rep.add(CheckReport::leaf("2_assoc_t", residual(left.t, right.t), tol));

    {
        const SpaceSignature sig{k1, k2, k3, bmu.dH};
        const ComplexMatrix explicit_s = embed_legs(r1.s, {1, 4}, sig) *
                                         embed_legs(r2.s, {2, 4}, sig) *
                                         embed_legs(r3.s, {3, 4}, sig);
        rep.add(CheckReport::leaf("3_explicit_s", residual(left.s, explicit_s), tol));
    }
    {
        const Braiding z23 = braiding(t23.s, k2 * k3, bmu);
        const Braiding z3 = braiding(r3.s, k3, bmu);
        const SpaceSignature sig{k1, k2, k3, bmu.dL};
        const ComplexMatrix z23e = embed_legs(z23.z, {2, 3, 4}, sig);
        const ComplexMatrix z3e = embed_legs(z3.z, {3, 4}, sig);
        const ComplexMatrix explicit_t = z23e * embed_legs(r1.t, {1, 4}, sig) * z23e.adjoint() *
                                         z3e * embed_legs(r2.t, {2, 4}, sig) * z3e.adjoint() *
                                         embed_legs(r3.t, {3, 4}, sig);
        rep.add(CheckReport::leaf("4_explicit_t", residual(left.t, explicit_t), tol));
    }
    {
        // Z-multiplicativity for the pair (r2, r3).
        const Braiding z2 = braiding(r2.s, k2, bmu);
        const Braiding z3 = braiding(r3.s, k3, bmu);
        const Braiding z23 = braiding(t23.s, k2 * k3, bmu);
        const SpaceSignature sig{k2, k3, bmu.dL};
        rep.add(CheckReport::leaf("5_z_multiplicative",
                                  residual(z23.z, embed_legs(z3.z, {2, 3}, sig) *
                                                      embed_legs(z2.z, {1, 3}, sig)),
                                  tol));
        rep.add(CheckReport::leaf("6_z_extraction",
                                  std::max({z2.extraction_residual, z3.extraction_residual,
                                            z23.extraction_residual}),
                                  tol));
    }
    {
        CheckReport sub = braided_rep_check(left, bmu, tol);
        sub.name = "7_tensor_is_braided_rep";
        rep.add(sub);
    }
    return rep;
}

IntertwinerBasis braided_intertwiner_basis(const BraidedRep& a, const BraidedRep& b,
                                           const BraidedMU& bmu, double rel_cutoff) {
    const int k1 = a.carrier_dim, k2 = b.carrier_dim;
    const int rows_s = detail::intertwiner_block_rows(k1, k2, bmu.dH);
    const int rows_t = detail::intertwiner_block_rows(k1, k2, bmu.dL);
    EigenCMat M(rows_s + rows_t, k2 * k1);
    detail::fill_intertwiner_rows(Side::Right, a.s, k1, b.s, k2, bmu.dH, M, 0);
    detail::fill_intertwiner_rows(Side::Right, a.t, k1, b.t, k2, bmu.dL, M, rows_s);
    return detail::null_space_basis(M, k1, k2, rel_cutoff);
}

SemidirectResult semidirect(const BraidedMU& bmu, double tol) {
    check_bmu_shapes(bmu);
    const int dH = bmu.dH, dL = bmu.dL;
    const SpaceSignature sig{dH, dL, dH, dL};
    const ComplexMatrix w13 = embed_legs(bmu.w, {1, 3}, sig);
    const ComplexMatrix u23 = embed_legs(bmu.u, {2, 3}, sig);
    const ComplexMatrix v34 = embed_legs(bmu.v, {3, 4}, sig);
    const ComplexMatrix f24 = embed_legs(bmu.f, {2, 4}, sig);
    const ComplexMatrix wc = w13 * u23 * v34.adjoint() * f24 * v34;

    SemidirectResult out;
    out.dH = dH;
    out.dL = dL;
    out.p = w13 * u23;
    out.report.name = "semidirect";
    out.report.tolerance = tol;
    {
        CheckReport p = pentagon_check(wc, dH * dL, tol);
        p.name = "1_wc_multiplicative";
        out.report.add(p);
    }
    {
        // Independent path: W_C must be the absorber operator Phi(rho) of the
        // generating braided representation rho = (C, w_13 u_23, f_23).
        const SpaceSignature s3{dH, dL, dH};
        const SpaceSignature t3{dH, dL, dL};
        BraidedRep rho;
        rho.carrier_dim = dH * dL;
        rho.s = embed_legs(bmu.w, {1, 3}, s3) * embed_legs(bmu.u, {2, 3}, s3);
        rho.t = embed_legs(bmu.f, {2, 3}, t3);
        const SpaceSignature psig{dH * dL, dH, dL};
        const ComplexMatrix v23 = embed_legs(bmu.v, {2, 3}, psig);
        const ComplexMatrix a = embed_legs(rho.s, {1, 2}, psig) * v23.adjoint() *
                                embed_legs(rho.t, {1, 3}, psig) * v23;
        out.report.add(CheckReport::leaf("2_absorber_path", residual(wc, a), tol));
    }
    out.wc = make_multiplicative_unitary_unchecked(wc, dH * dL);
    return out;
}

CheckReport projection_check(const SemidirectResult& sr, const BraidedMU& bmu, double tol) {
    const int dH = sr.dH, dL = sr.dL, c = dH * dL;
    const ComplexMatrix& wc = sr.wc.w;
    const ComplexMatrix& p = sr.p;
    CheckReport r;
    r.name = "projection";
    r.tolerance = tol;
    {
        const SpaceSignature s{c, c, c};
        const auto wc12 = embed_legs(wc, {1, 2}, s), wc23 = embed_legs(wc, {2, 3}, s),
                   p12 = embed_legs(p, {1, 2}, s), p13 = embed_legs(p, {1, 3}, s),
                   p23 = embed_legs(p, {2, 3}, s);
        r.add(CheckReport::leaf("a_p_represents_wc", residual(p23 * wc12, wc12 * p13 * p23), tol));
        r.add(CheckReport::leaf("b_p_absorbed_by_wc", residual(wc23 * p12, p12 * p13 * wc23), tol));
        r.add(CheckReport::leaf("c_p_multiplicative", residual(p23 * p12, p12 * p13 * p23), tol));
    }
    {
        // V1 = w_13 u_23 on C (x) H.
        const SpaceSignature v1s{dH, dL, dH};
        const ComplexMatrix v1 =
            embed_legs(bmu.w, {1, 3}, v1s) * embed_legs(bmu.u, {2, 3}, v1s);
        {
            const SpaceSignature s{c, dH, dH};
            const auto w23 = embed_legs(bmu.w, {2, 3}, s), v1_12 = embed_legs(v1, {1, 2}, s),
                       v1_13 = embed_legs(v1, {1, 3}, s);
            r.add(CheckReport::leaf("d1_v1_bichar_w",
                                    residual(w23 * v1_12, v1_12 * v1_13 * w23), tol));
        }
        {
            const SpaceSignature s{c, c, dH};
            const auto wc12 = embed_legs(wc, {1, 2}, s), v1_23 = embed_legs(v1, {2, 3}, s),
                       v1_13 = embed_legs(v1, {1, 3}, s);
            r.add(CheckReport::leaf("d2_v1_bichar_wc",
                                    residual(v1_23 * wc12, wc12 * v1_13 * v1_23), tol));
        }
        // V2 = w_12 on H (x) C.
        const SpaceSignature v2s{dH, dH, dL};
        const ComplexMatrix v2 = embed_legs(bmu.w, {1, 2}, v2s);
        {
            const SpaceSignature s{dH, c, c};
            const auto wc23 = embed_legs(wc, {2, 3}, s), v2_12 = embed_legs(v2, {1, 2}, s),
                       v2_13 = embed_legs(v2, {1, 3}, s);
            r.add(CheckReport::leaf("d3_v2_bichar_wc",
                                    residual(wc23 * v2_12, v2_12 * v2_13 * wc23), tol));
        }
        {
            const SpaceSignature s{dH, dH, c};
            const auto w12 = embed_legs(bmu.w, {1, 2}, s), v2_23 = embed_legs(v2, {2, 3}, s),
                       v2_13 = embed_legs(v2, {1, 3}, s);
            r.add(CheckReport::leaf("d4_v2_bichar_w",
                                    residual(v2_23 * w12, w12 * v2_13 * v2_23), tol));
        }
    }
    {
        const SpaceSignature s{dH, dL, dH, dH};
        const auto w34 = embed_legs(bmu.w, {3, 4}, s), w13 = embed_legs(bmu.w, {1, 3}, s),
                   u23 = embed_legs(bmu.u, {2, 3}, s), w14 = embed_legs(bmu.w, {1, 4}, s),
                   u24 = embed_legs(bmu.u, {2, 4}, s);
        r.add(CheckReport::leaf(
            "e_p_composition",
            residual(w34 * (w13 * u23), (w13 * u23) * (w14 * u24) * w34), tol));
    }
    return r;
}

Representation phi(const BraidedMU& bmu, const SemidirectResult& sr, const BraidedRep& r) {
    const int k = r.carrier_dim;
    const SpaceSignature sig{k, bmu.dH, bmu.dL};
    const ComplexMatrix v23 = embed_legs(bmu.v, {2, 3}, sig);
    const ComplexMatrix a = embed_legs(r.s, {1, 2}, sig) * v23.adjoint() *
                            embed_legs(r.t, {1, 3}, sig) * v23;
    return make_rep_unchecked(Side::Right, a, k, sr.wc);
}

ReconstructResult reconstruct(const BraidedMU& bmu, const SemidirectResult& sr,
                              const ComplexMatrix& a, int k, double tol) {
    const int dH = bmu.dH, dL = bmu.dL;
    if (!a.is_square() || a.rows() != k * dH * dL)
        throw std::invalid_argument("reconstruct: representation must act on K(x)C");
    ReconstructResult out;
    out.report.name = "reconstruct";
    out.report.tolerance = tol;
    out.rep.carrier_dim = k;

    {
        const SpaceSignature sig{k, dH, dL, dH};
        const ComplexMatrix a123 = embed_legs(a, {1, 2, 3}, sig);
        const ComplexMatrix shift =
            embed_legs(bmu.w, {2, 4}, sig) * embed_legs(bmu.u, {3, 4}, sig);
        const ComplexMatrix s14 = a123.adjoint() * shift * a123 * shift.adjoint();
        const ExtractResult e1 = extract_trivial_leg(s14, sig, 2, tol);
        const SpaceSignature sig2{k, dL, dH};
        const ExtractResult e2 = extract_trivial_leg(e1.op, sig2, 2, tol);
        out.s_extraction = std::max(e1.residual, e2.residual);
        out.rep.s = e2.op;
        out.report.add(CheckReport::leaf("1_s_extraction", out.s_extraction, tol));
    }
    {
        const SpaceSignature sig{k, dH, dL};
        const ComplexMatrix v23 = embed_legs(bmu.v, {2, 3}, sig);
        const ComplexMatrix s12 = embed_legs(out.rep.s, {1, 2}, sig);
        const ComplexMatrix t13 = v23 * s12.adjoint() * a * v23.adjoint();
        const ExtractResult ex = extract_trivial_leg(t13, sig, 2, tol);
        out.t_extraction = ex.residual;
        out.rep.t = ex.op;
        out.report.add(CheckReport::leaf("2_t_extraction", out.t_extraction, tol));
    }
    {
        CheckReport sub = braided_rep_check(out.rep, bmu, tol);
        sub.name = "3_braided_rep";
        out.report.add(sub);
    }
    {
        const Representation img = phi(bmu, sr, out.rep);
        out.report.add(CheckReport::leaf("4_phi_roundtrip", residual(img.op, a), tol));
    }
    return out;
}

AbsorberCandidate braided_absorber_candidate(const BraidedMU& bmu) {
    const int dH = bmu.dH, dL = bmu.dL, c = dH * dL;
    const SemidirectResult sr = semidirect(bmu);

    BraidedRep unit = braided_unit(bmu, 1);
    BraidedRep unit2 = braided_unit(bmu, 2);
    BraidedRep luf;
    luf.carrier_dim = dL;
    luf.s = bmu.u;
    luf.t = bmu.f;
    BraidedRep rho;
    rho.carrier_dim = c;
    {
        const SpaceSignature s3{dH, dL, dH};
        const SpaceSignature t3{dH, dL, dL};
        rho.s = embed_legs(bmu.w, {1, 3}, s3) * embed_legs(bmu.u, {2, 3}, s3);
        rho.t = embed_legs(bmu.f, {2, 3}, t3);
    }
    const BraidedRep rho_rho = braided_tensor(rho, rho, bmu);

    const std::vector<std::pair<std::string, const BraidedRep*>> members = {
        {"unit", &unit}, {"unit2", &unit2}, {"luf", &luf}, {"rho", &rho}, {"rho_rho", &rho_rho}};

    AbsorberCandidate cand;
    cand.side = Side::Right;
    cand.object_id = "rho";
    for (const auto& [id, r] : members) {
        AbsorberEntry e;
        e.id = id;
        e.carrier_dim = r->carrier_dim;
        e.trivial = (id == "unit" || id == "unit2");
        e.op = phi(bmu, sr, *r).op;
        cand.family.push_back(std::move(e));
    }
    for (const auto& [id1, r1] : members)
        for (const auto& [id2, r2] : members) {
            const long long cols =
                static_cast<long long>(r1->carrier_dim) * r2->carrier_dim;
            const long long rows = cols * (static_cast<long long>(dH) * dH + dL * dL);
            if (!hom_affordable(rows, cols)) continue;
            const IntertwinerBasis basis = braided_intertwiner_basis(*r1, *r2, bmu);
            for (const auto& a : basis.elements) cand.intertwiners.push_back({id1, id2, a});
        }
    cand.tensor_pairs = {{"unit", "unit", "unit"},     {"unit", "rho", "rho"},
                         {"rho", "unit", "rho"},       {"rho", "rho", "rho_rho"},
                         {"unit", "luf", "luf"},       {"luf", "unit", "luf"},
                         {"unit", "unit2", "unit2"},   {"unit2", "unit", "unit2"}};
    return cand;
}

}  // namespace mulab
