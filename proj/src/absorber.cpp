#include "mulab/absorber.hpp"

#include <stdexcept>

#include "mulab/hom_detail.hpp"

namespace mulab {

namespace {

// Cost guard for hom-space computations: rows * cols^2 of the SVD input.
bool hom_affordable(long long rows, long long cols) {
    return rows * cols * cols <= 5'000'000'000LL;
}

ComplexMatrix id_kron_left(const ComplexMatrix& a, int n) {  // I_n (x) a
    return kron(ComplexMatrix::identity(n), a);
}
ComplexMatrix id_kron_right(const ComplexMatrix& a, int n) {  // a (x) I_n
    return kron(a, ComplexMatrix::identity(n));
}

}  // namespace

const AbsorberEntry* AbsorberCandidate::find(const std::string& id) const {
    for (const auto& e : family)
        if (e.id == id) return &e;
    return nullptr;
}

const AbsorberEntry& AbsorberCandidate::entry(const std::string& id) const {
    if (const AbsorberEntry* e = find(id)) return *e;
    throw std::invalid_argument("absorber: family member '" + id + "' is missing");
}

int AbsorberCandidate::object_dim() const { return entry(object_id).carrier_dim; }

CheckReport verify_absorber(const AbsorberCandidate& c, double tol) {
    const int kobj = c.object_dim();
    CheckReport r;
    r.name = c.side == Side::Right ? "right_absorber" : "left_absorber";
    r.tolerance = tol;

    for (const auto& e : c.family) {
        const int expect = c.side == Side::Right ? e.carrier_dim * kobj : kobj * e.carrier_dim;
        if (!e.op.is_square() || e.op.rows() != expect)
            throw std::invalid_argument("absorber: operator of '" + e.id +
                                        "' has the wrong shape");
        r.add(CheckReport::leaf("1_unitarity[" + e.id + "]", unitarity_residual(e.op), tol));
        if (e.trivial) {
            r.add(CheckReport::leaf("2_triviality[" + e.id + "]",
                                    residual(e.op, ComplexMatrix::identity(e.op.rows())), tol));
        }
    }

    for (const auto& edge : c.intertwiners) {
        const AbsorberEntry& x1 = c.entry(edge.from);
        const AbsorberEntry& x2 = c.entry(edge.to);
        if (edge.a.rows() != x2.carrier_dim || edge.a.cols() != x1.carrier_dim)
            throw std::invalid_argument("absorber: intertwiner " + edge.from + "->" + edge.to +
                                        " has the wrong shape");
        ComplexMatrix lhs, rhs;
        if (c.side == Side::Right) {
            const ComplexMatrix ai = id_kron_right(edge.a, kobj);
            lhs = ai * x1.op;
            rhs = x2.op * ai;
        } else {
            const ComplexMatrix ia = id_kron_left(edge.a, kobj);
            lhs = ia * x1.op;
            rhs = x2.op * ia;
        }
        r.add(CheckReport::leaf("3_naturality[" + edge.from + "->" + edge.to + "]",
                                residual(lhs, rhs), tol));
    }

    for (const auto& t : c.tensor_pairs) {
        const AbsorberEntry& x1 = c.entry(t.left);
        const AbsorberEntry& x2 = c.entry(t.right);
        const AbsorberEntry& xp = c.entry(t.product);
        if (xp.carrier_dim != x1.carrier_dim * x2.carrier_dim)
            throw std::invalid_argument("absorber: tensor pair " + t.left + "(x)" + t.right +
                                        " does not match carrier of " + t.product);
        ComplexMatrix formula;
        if (c.side == Side::Right) {
            const SpaceSignature sig{x1.carrier_dim, x2.carrier_dim, kobj};
            formula = embed_legs(x1.op, {1, 3}, sig) * embed_legs(x2.op, {2, 3}, sig);
        } else {
            const SpaceSignature sig{kobj, x1.carrier_dim, x2.carrier_dim};
            formula = embed_legs(x2.op, {1, 3}, sig) * embed_legs(x1.op, {1, 2}, sig);
        }
        r.add(CheckReport::leaf("4_tensor[" + t.left + "," + t.right + "]",
                                residual(xp.op, formula), tol));
    }
    return r;
}

AbsorberMuResult absorber_to_mu(const AbsorberCandidate& c, double tol) {
    if (c.side != Side::Right)
        throw std::invalid_argument("absorber_to_mu: expects a right absorber");
    const int d = c.object_dim();
    AbsorberMuResult out;
    out.report.name = "absorber_to_mu";
    out.report.tolerance = tol;

    const ComplexMatrix& w = c.entry(c.object_id).op;
    CheckReport pent = pentagon_check(w, d, tol);
    pent.name = "1_object_multiplicative";
    out.report.add(pent);
    out.mu = make_multiplicative_unitary_unchecked(w, d);

    for (const auto& e : c.family) {
        out.report.add(CheckReport::leaf("2_right_rep[" + e.id + "]",
                                         right_rep_residual(e.op, e.carrier_dim, w, d), tol));
        out.reps.emplace(e.id,
                         make_rep_unchecked(Side::Right, e.op, e.carrier_dim, out.mu));
    }

    // Fullness on the family: recorded edges from x1 to x2 must span the
    // whole hom-space of the images.  Pairs beyond the SVD cost guard are
    // skipped.
    for (const auto& e1 : c.family)
        for (const auto& e2 : c.family) {
            const long long rows = static_cast<long long>(e1.carrier_dim) * e2.carrier_dim * d * d;
            const long long cols = static_cast<long long>(e1.carrier_dim) * e2.carrier_dim;
            if (!hom_affordable(rows, cols)) continue;
            int recorded = 0;
            for (const auto& edge : c.intertwiners)
                if (edge.from == e1.id && edge.to == e2.id) ++recorded;
            const IntertwinerBasis basis = intertwiner_basis_raw(
                Side::Right, e1.op, e1.carrier_dim, e2.op, e2.carrier_dim, d);
            const int dim = static_cast<int>(basis.elements.size());
            out.report.add(CheckReport::leaf(
                "3_fullness[" + e1.id + "->" + e2.id + "]",
                static_cast<double>(std::abs(dim - recorded)), tol,
                "hom dimension " + std::to_string(dim) + ", recorded " +
                    std::to_string(recorded)));
        }
    return out;
}

CheckReport compare_absorbers(const AbsorberCandidate& c1, const AbsorberCandidate& c2,
                              double tol) {
    if (c1.side != Side::Right || c2.side != Side::Right)
        throw std::invalid_argument("compare_absorbers: expects two right absorbers");
    const int dh = c1.object_dim();   // H
    const int dc = c2.object_dim();   // H^
    const ComplexMatrix& u = c1.entry(c1.object_id).op;
    const ComplexMatrix& ud = c2.entry(c2.object_id).op;
    const ComplexMatrix& v = c1.entry(c2.object_id).op;  // on H^ (x) H
    const ComplexMatrix& w = c2.entry(c1.object_id).op;  // on H (x) H^
    if (v.rows() != dc * dh || w.rows() != dh * dc)
        throw std::invalid_argument("compare_absorbers: cross operators have the wrong shape");

    CheckReport r;
    r.name = "compare_absorbers";
    r.tolerance = tol;
    {
        const SpaceSignature s{dc, dh, dh};
        const auto u23 = embed_legs(u, {2, 3}, s), v12 = embed_legs(v, {1, 2}, s),
                   v13 = embed_legs(v, {1, 3}, s);
        r.add(CheckReport::leaf("1_v_represents_u", residual(u23 * v12, v12 * v13 * u23), tol));
    }
    {
        const SpaceSignature s{dh, dc, dc};
        const auto ud23 = embed_legs(ud, {2, 3}, s), w12 = embed_legs(w, {1, 2}, s),
                   w13 = embed_legs(w, {1, 3}, s);
        r.add(CheckReport::leaf("2_w_represents_ud", residual(ud23 * w12, w12 * w13 * ud23), tol));
    }
    {
        const SpaceSignature s{dc, dc, dh};
        const auto v23 = embed_legs(v, {2, 3}, s), ud12 = embed_legs(ud, {1, 2}, s),
                   v13 = embed_legs(v, {1, 3}, s);
        r.add(CheckReport::leaf("3_v_absorbed_by_ud", residual(v23 * ud12, ud12 * v13 * v23), tol));
    }
    {
        const SpaceSignature s{dh, dh, dc};
        const auto w23 = embed_legs(w, {2, 3}, s), u12 = embed_legs(u, {1, 2}, s),
                   w13 = embed_legs(w, {1, 3}, s);
        r.add(CheckReport::leaf("4_w_absorbed_by_u", residual(w23 * u12, u12 * w13 * w23), tol));
    }
    {
        const SpaceSignature s{dh, dc, dh};
        const auto v23 = embed_legs(v, {2, 3}, s), w12 = embed_legs(w, {1, 2}, s),
                   u13 = embed_legs(u, {1, 3}, s);
        r.add(CheckReport::leaf("5_exchange_vw", residual(v23 * w12, w12 * u13 * v23), tol));
    }
    {
        const SpaceSignature s{dc, dh, dc};
        const auto w23 = embed_legs(w, {2, 3}, s), v12 = embed_legs(v, {1, 2}, s),
                   ud13 = embed_legs(ud, {1, 3}, s);
        r.add(CheckReport::leaf("6_exchange_wv", residual(w23 * v12, v12 * ud13 * w23), tol));
    }
    return r;
}

CheckReport mixed_system_check(const AbsorberCandidate& rho, const AbsorberCandidate& lam,
                               double tol) {
    if (rho.side != Side::Right || lam.side != Side::Left)
        throw std::invalid_argument("mixed_system_check: expects (right, left) absorbers");
    const int dh = rho.object_dim();  // H
    const int dc = lam.object_dim();  // H^
    const ComplexMatrix& u = rho.entry(rho.object_id).op;
    const ComplexMatrix& ud = lam.entry(lam.object_id).op;
    const ComplexMatrix& v = rho.entry(lam.object_id).op;  // U^rho at lambda, on H^ (x) H
    const ComplexMatrix& w = lam.entry(rho.object_id).op;  // U~^lambda at rho, on H^ (x) H
    if (v.rows() != dc * dh || w.rows() != dc * dh)
        throw std::invalid_argument("mixed_system_check: cross operators have the wrong shape");

    CheckReport r;
    r.name = "mixed_system";
    r.tolerance = tol;
    {
        CheckReport pent = pentagon_check(u, dh, tol);
        pent.name = "0_pentagon_u";
        r.add(pent);
        CheckReport am = antimultiplicative_check(ud, dc, tol);
        am.name = "0_antimultiplicative_ud";
        r.add(am);
    }
    const SpaceSignature sHH{dc, dc, dh};  // (H^, H^, H)
    const SpaceSignature sHh{dc, dh, dh};  // (H^, H, H)
    const auto ud12 = embed_legs(ud, {1, 2}, sHH);
    const auto v13h = embed_legs(v, {1, 3}, sHH), v23h = embed_legs(v, {2, 3}, sHH);
    const auto w13h = embed_legs(w, {1, 3}, sHH), w23h = embed_legs(w, {2, 3}, sHH);
    const auto u23 = embed_legs(u, {2, 3}, sHh);
    const auto v12 = embed_legs(v, {1, 2}, sHh), v13 = embed_legs(v, {1, 3}, sHh);
    const auto w12 = embed_legs(w, {1, 2}, sHh), w13 = embed_legs(w, {1, 3}, sHh);

    r.add(CheckReport::leaf("1_v_anti_absorbed", residual(ud12 * v13h * v23h, v13h * ud12), tol));
    r.add(CheckReport::leaf("2_w_represents_ud", residual(ud12 * w23h, w23h * w13h * ud12), tol));
    r.add(CheckReport::leaf("3_v_represents_u", residual(u23 * v12, v12 * v13 * u23), tol));
    r.add(CheckReport::leaf("4_w_absorbed_by_u", residual(u23 * w13 * w12, w13 * u23), tol));
    r.add(CheckReport::leaf("5_exchange_vw", residual(v13 * w12, w12 * v13 * u23), tol));
    r.add(CheckReport::leaf("6_exchange_wv", residual(w13h * v23h, v23h * w13h * ud12), tol));
    return r;
}

BicharacterResult functor_bicharacter(const std::map<std::string, std::string>& phi,
                                      const AbsorberCandidate& c1, const AbsorberCandidate& c2,
                                      double tol) {
    if (c1.side != Side::Right || c2.side != Side::Right)
        throw std::invalid_argument("functor_bicharacter: expects right absorbers");
    auto image = [&](const std::string& id) -> const AbsorberEntry& {
        const auto it = phi.find(id);
        if (it == phi.end())
            throw std::invalid_argument("functor_bicharacter: phi undefined on '" + id + "'");
        return c2.entry(it->second);
    };
    for (const auto& e : c1.family)
        if (image(e.id).carrier_dim != e.carrier_dim)
            throw std::invalid_argument("functor_bicharacter: phi does not preserve the carrier of '" +
                                        e.id + "'");

    const int d1 = c1.object_dim(), d2 = c2.object_dim();
    const ComplexMatrix& u1 = c1.entry(c1.object_id).op;
    const ComplexMatrix& u2 = c2.entry(c2.object_id).op;
    const ComplexMatrix& vphi = image(c1.object_id).op;  // on H1 (x) H2
    if (vphi.rows() != d1 * d2)
        throw std::invalid_argument("functor_bicharacter: image of the object has the wrong shape");

    BicharacterResult out;
    out.v = vphi;
    out.d1 = d1;
    out.d2 = d2;
    out.report.name = "functor_bicharacter";
    out.report.tolerance = tol;
    {
        const SpaceSignature s{d1, d2, d2};
        const auto u2_23 = embed_legs(u2, {2, 3}, s), v12 = embed_legs(vphi, {1, 2}, s),
                   v13 = embed_legs(vphi, {1, 3}, s);
        out.report.add(CheckReport::leaf("1_v_represents_u2",
                                         residual(u2_23 * v12, v12 * v13 * u2_23), tol));
    }
    {
        const SpaceSignature s{d1, d1, d2};
        const auto v23 = embed_legs(vphi, {2, 3}, s), u1_12 = embed_legs(u1, {1, 2}, s),
                   v13 = embed_legs(vphi, {1, 3}, s);
        out.report.add(CheckReport::leaf("2_v_absorbed_by_u1",
                                         residual(v23 * u1_12, u1_12 * v13 * v23), tol));
    }
    for (const auto& e : c1.family) {
        const AbsorberEntry& img = image(e.id);
        const SpaceSignature s{e.carrier_dim, d1, d2};
        const auto v23 = embed_legs(vphi, {2, 3}, s), x12 = embed_legs(e.op, {1, 2}, s),
                   y13 = embed_legs(img.op, {1, 3}, s);
        out.report.add(CheckReport::leaf("3_interchange[" + e.id + "]",
                                         residual(v23 * x12, x12 * y13 * v23), tol));
    }
    for (const auto& edge : c1.intertwiners) {
        const AbsorberEntry& i1 = image(edge.from);
        const AbsorberEntry& i2 = image(edge.to);
        const ComplexMatrix ai = kron(edge.a, ComplexMatrix::identity(d2));
        out.report.add(CheckReport::leaf("4_edge_image[" + edge.from + "->" + edge.to + "]",
                                         residual(i2.op * ai, ai * i1.op), tol));
    }
    for (const auto& t : c1.tensor_pairs) {
        const AbsorberEntry& il = image(t.left);
        const AbsorberEntry& ir = image(t.right);
        const AbsorberEntry& ip = image(t.product);
        const SpaceSignature s{il.carrier_dim, ir.carrier_dim, d2};
        const ComplexMatrix formula = embed_legs(il.op, {1, 3}, s) * embed_legs(ir.op, {2, 3}, s);
        out.report.add(CheckReport::leaf("5_tensor_image[" + t.left + "," + t.right + "]",
                                         residual(ip.op, formula), tol));
    }
    return out;
}

AbsorberCandidate canonical_absorber(const MultiplicativeUnitary& m) {
    const int d = m.dim;
    AbsorberCandidate c;
    c.side = Side::Right;
    c.object_id = "rho";
    c.family.push_back({"unit", 1, true, ComplexMatrix::identity(d)});
    c.family.push_back({"unit2", 2, true, ComplexMatrix::identity(2 * d)});
    c.family.push_back({"rho", d, false, m.w});
    {
        const SpaceSignature sig{d, d, d};
        c.family.push_back(
            {"rho_rho", d * d, false, embed_legs(m.w, {1, 3}, sig) * embed_legs(m.w, {2, 3}, sig)});
    }
    // Record full hom bases where the SVD is affordable; the same guard is
    // applied by the fullness check in absorber_to_mu, so skipped pairs do
    // not show up as missing edges there.
    for (const auto& e1 : c.family)
        for (const auto& e2 : c.family) {
            const long long rows = static_cast<long long>(e1.carrier_dim) * e2.carrier_dim * d * d;
            const long long cols = static_cast<long long>(e1.carrier_dim) * e2.carrier_dim;
            if (!hom_affordable(rows, cols)) continue;
            const IntertwinerBasis basis = intertwiner_basis_raw(
                Side::Right, e1.op, e1.carrier_dim, e2.op, e2.carrier_dim, d);
            for (const auto& a : basis.elements) c.intertwiners.push_back({e1.id, e2.id, a});
        }
    c.tensor_pairs = {{"unit", "unit", "unit"},   {"unit", "rho", "rho"},
                      {"rho", "unit", "rho"},     {"rho", "rho", "rho_rho"},
                      {"unit", "unit2", "unit2"}, {"unit2", "unit", "unit2"}};
    return c;
}

StabilizedPair stabilize_candidate(const AbsorberCandidate& canonical, const std::string& y_id,
                                   const std::string& stab_id) {
    if (canonical.side != Side::Right)
        throw std::invalid_argument("stabilize_candidate: expects a right absorber");
    if (canonical.find(stab_id) != nullptr)
        throw std::invalid_argument("stabilize_candidate: id '" + stab_id + "' already in use");
    const int d = canonical.object_dim();
    const AbsorberEntry& y = canonical.entry(y_id);
    const AbsorberEntry& obj = canonical.entry(canonical.object_id);

    StabilizedPair out;
    out.base = canonical;

    // New object rho-check = rho (x) y, with operator given by the tensor law.
    const SpaceSignature tsig{d, y.carrier_dim, d};
    AbsorberEntry stab;
    stab.id = stab_id;
    stab.carrier_dim = d * y.carrier_dim;
    stab.trivial = false;
    stab.op = embed_legs(obj.op, {1, 3}, tsig) * embed_legs(y.op, {2, 3}, tsig);
    out.base.family.push_back(stab);
    out.base.tensor_pairs.push_back({canonical.object_id, y_id, stab_id});
    {
        const IntertwinerBasis basis = intertwiner_basis_raw(Side::Right, stab.op,
                                                             stab.carrier_dim, stab.op,
                                                             stab.carrier_dim, d);
        for (const auto& a : basis.elements)
            out.base.intertwiners.push_back({stab_id, stab_id, a});
    }

    // Stabilized candidate: same category, object rho-check, operators
    // U^x (x) 1_y.
    out.stabilized.side = Side::Right;
    out.stabilized.object_id = stab_id;
    for (const auto& e : out.base.family) {
        const SpaceSignature esig{e.carrier_dim, d, y.carrier_dim};
        AbsorberEntry se;
        se.id = e.id;
        se.carrier_dim = e.carrier_dim;
        se.trivial = e.trivial;
        se.op = embed_legs(e.op, {1, 2}, esig);
        out.stabilized.family.push_back(std::move(se));
    }
    out.stabilized.intertwiners = out.base.intertwiners;
    out.stabilized.tensor_pairs = out.base.tensor_pairs;
    return out;
}

}  // namespace mulab
