// Generates the committed fixture corpus.  Every fixture is validated
// before it is written: positive fixtures must pass their checks (most with
// residual exactly zero), corrupted fixtures must fail the check they
// target while still loading cleanly.
#include <cstdio>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "mulab/braided.hpp"
#include "mulab/examples.hpp"
#include "mulab/fixtures.hpp"
#include "mulab/leg_expr.hpp"

using namespace mulab;
namespace fs = std::filesystem;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error("fixture validation failed: " + what);
}

ComplexMatrix corrupt(ComplexMatrix m) {
    m.at(0, 0) += cd(1e-3, 0.0);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string arg = argc > 1 ? argv[1] : "";
    if (arg == "-h" || arg == "--help") {
        std::printf("usage: mulab-gen [output-dir]   (default: fixtures)\n");
        return 0;
    }
    const fs::path root = argc > 1 ? argv[1] : "fixtures";
    for (const char* sub : {"groups", "reps", "braided", "absorber", "mixed", "corpus", "corrupted"})
        fs::create_directories(root / sub);
    int written = 0;
    auto save = [&](auto&& fn, const fs::path& p, auto&&... args) {
        fn((root / p).string(), args...);
        std::printf("wrote %s\n", (root / p).string().c_str());
        ++written;
    };

    // --- group multiplicative unitaries (pentagon residual exactly zero) ---
    const MultiplicativeUnitary z2 = examples::z2_mu();
    const MultiplicativeUnitary z3 = examples::z3_mu();
    const MultiplicativeUnitary s3 = examples::s3_mu();
    for (const auto* m : {&z2, &z3, &s3})
        require(m->unitarity_res == 0.0 && m->pentagon_res == 0.0, "group unitary not exact");
    save(save_mu_fixture, "groups/z2_w.json", "z2_w", z2);
    save(save_mu_fixture, "groups/z3_w.json", "z3_w", z3);
    save(save_mu_fixture, "groups/s3_w.json", "s3_w", s3);

    // The regular operator is a right representation of itself (k = d).
    require(right_rep_check(z2.w, 2, z2).passed, "regular right representation");
    save(save_matrix_fixture, "reps/z2_reg_right.json", "z2_reg_right", z2.w);

    // --- braided multiplicative unitaries ---
    const BraidedMU triv = trivial_bmu(z3);
    const BraidedMU prod = product_bmu(z2, z2);
    const BraidedMU oracle = examples::z2_on_z3_bmu();
    for (const auto* b : {&triv, &prod, &oracle}) {
        require(bmu_validity_check(*b).passed, "braided validity");
        SemidirectResult sr = semidirect(*b);
        require(sr.report.passed, "semidirect pentagon");
        require(projection_check(sr, *b).passed, "projection identities");
    }
    const SemidirectResult triv_sr = semidirect(triv);
    const SemidirectResult prod_sr = semidirect(prod);
    const SemidirectResult oracle_sr = semidirect(oracle);
    require(residual(triv_sr.wc.w, triv.w) == 0.0, "trivial semidirect collapse");
    save(save_bmu_fixture, "braided/trivial_z3.json", "trivial_z3", triv);
    save(save_bmu_fixture, "braided/product_z2.json", "product_z2", prod);
    save(save_bmu_fixture, "braided/oracle_z2.json", "oracle_z2", oracle);

    // Induction image of (L, u, f); reconstruct must invert it exactly.
    const BraidedRep luf{oracle.dL, oracle.u, oracle.f};
    require(braided_rep_check(luf, oracle).passed, "(L,u,f) braided representation");
    const Representation a_luf = phi(oracle, oracle_sr, luf);
    {
        ReconstructResult rr = reconstruct(oracle, oracle_sr, a_luf.op, oracle.dL);
        require(rr.report.passed && residual(rr.rep.s, oracle.u) == 0.0 &&
                    residual(rr.rep.t, oracle.f) == 0.0,
                "reconstruction round trip");
    }
    save(save_matrix_fixture, "braided/oracle_phi_luf.json", "oracle_phi_luf", a_luf.op);

    // --- absorbers ---
    const AbsorberCandidate canonical = canonical_absorber(z3);
    require(verify_absorber(canonical).passed, "canonical absorber axioms");
    {
        AbsorberMuResult mu = absorber_to_mu(canonical);
        require(mu.report.passed && residual(mu.mu.w, z3.w) == 0.0, "canonical induced unitary");
    }
    save(save_candidate_fixture, "absorber/canonical_z3.json", "canonical_z3", canonical);

    const StabilizedPair sp = stabilize_candidate(canonical, "unit2");
    require(verify_absorber(sp.base).passed && verify_absorber(sp.stabilized).passed &&
                compare_absorbers(sp.base, sp.stabilized).passed,
            "stabilized pair");
    save(save_pair_fixture, "absorber/stabilized_z3.json", "stabilized_z3", sp.base,
         sp.stabilized);

    const examples::MixedPair mp = examples::mixed_pair_z2();
    require(verify_absorber(mp.rho).passed && verify_absorber(mp.lam).passed &&
                mixed_system_check(mp.rho, mp.lam).passed,
            "mixed pair");
    save(save_mixed_fixture, "mixed/mixed_z2.json", "mixed_z2", mp.rho, mp.lam);

    // --- equation corpus ---
    EquationCorpus corpus;
    corpus.name = "leg_equations";
    auto& M = corpus.matrices;
    M.emplace("z2_w", z2.w);
    M.emplace("z3_w", z3.w);
    M.emplace("oracle_w", oracle.w);
    M.emplace("oracle_u", oracle.u);
    M.emplace("oracle_v", oracle.v);
    M.emplace("oracle_f", oracle.f);
    M.emplace("oracle_wc", oracle_sr.wc.w);
    M.emplace("oracle_p", oracle_sr.p);
    M.emplace("oracle_phi_luf", a_luf.op);
    M.emplace("trivial_wc", triv_sr.wc.w);
    M.emplace("product_wc", prod_sr.wc.w);
    M.emplace("id1", ComplexMatrix::identity(1));
    M.emplace("id3", ComplexMatrix::identity(3));
    M.emplace("id4", ComplexMatrix::identity(4));
    M.emplace("z3_flip", flip(3, 3));
    M.emplace("z3_what", dual(z3).w);
    M.emplace("mixed_ud", mp.lam.entry("rho").op);
    M.emplace("z3_wst", stabilize(z3, ComplexMatrix::identity(6), 2).w);
    M.emplace("z3_rr", canonical.entry("rho_rho").op);
    M.emplace("st_v", sp.base.entry("rho_st").op);
    M.emplace("st_w", sp.stabilized.entry("rho").op);
    M.emplace("st_ud", sp.stabilized.entry("rho_st").op);
    M.emplace("z2_what", dual(z2).w);
    M.emplace("z2_shat", left_to_right_dual(make_rep_unchecked(Side::Left, z2.w, 2, z2)).op);

    auto eq = [&corpus](std::string name, std::vector<int> sig, std::string lhs, std::string rhs,
                        std::map<std::string, std::string> bind) {
        corpus.equations.push_back(
            {std::move(name), std::move(sig), std::move(lhs), std::move(rhs), std::move(bind)});
    };
    eq("pentagon_q", {2, 2, 2}, "w[2,3] w[1,2]", "w[1,2] w[1,3] w[2,3]", {{"w", "oracle_w"}});
    eq("pentagon_n", {3, 3, 3}, "f[2,3] f[1,2]", "f[1,2] f[1,3] f[2,3]", {{"f", "oracle_f"}});
    eq("u_right_rep", {3, 2, 2}, "w[2,3] u[1,2]", "u[1,2] u[1,3] w[2,3]",
       {{"w", "oracle_w"}, {"u", "oracle_u"}});
    eq("v_left_rep", {2, 2, 3}, "v[2,3] w[1,2]", "w[1,2] v[1,3] v[2,3]",
       {{"v", "oracle_v"}, {"w", "oracle_w"}});
    eq("semidirect_oracle", {2, 3, 2, 3}, "wc[1,2,3,4]", "w[1,3] u[2,3] v*[3,4] f[2,4] v[3,4]",
       {{"wc", "oracle_wc"},
        {"w", "oracle_w"},
        {"u", "oracle_u"},
        {"v", "oracle_v"},
        {"f", "oracle_f"}});
    eq("semidirect_trivial", {3, 1, 3, 1}, "wc[1,2,3,4]", "w[1,3] u[2,3] v*[3,4] f[2,4] v[3,4]",
       {{"wc", "trivial_wc"}, {"w", "z3_w"}, {"u", "id3"}, {"v", "id3"}, {"f", "id1"}});
    eq("semidirect_product", {2, 2, 2, 2}, "wc[1,2,3,4]", "w[1,3] u[2,3] v*[3,4] f[2,4] v[3,4]",
       {{"wc", "product_wc"}, {"w", "z2_w"}, {"u", "id4"}, {"v", "id4"}, {"f", "z2_w"}});
    eq("pentagon_wc", {6, 6, 6}, "wc[2,3] wc[1,2]", "wc[1,2] wc[1,3] wc[2,3]",
       {{"wc", "oracle_wc"}});
    eq("projection_absorbs", {6, 6, 6}, "p[2,3] wc[1,2]", "wc[1,2] p[1,3] p[2,3]",
       {{"p", "oracle_p"}, {"wc", "oracle_wc"}});
    eq("projection_multiplicative", {6, 6, 6}, "p[2,3] p[1,2]", "p[1,2] p[1,3] p[2,3]",
       {{"p", "oracle_p"}});
    eq("dual_by_flip", {3, 3}, "sigma[1,2] w*[1,2] sigma[1,2]", "what[1,2]",
       {{"sigma", "z3_flip"}, {"w", "z3_w"}, {"what", "z3_what"}});
    eq("antimultiplicative_ud", {2, 2, 2}, "ud[1,2] ud[2,3]", "ud[2,3] ud[1,3] ud[1,2]",
       {{"ud", "mixed_ud"}});
    eq("mixed_exchange", {2, 2, 2}, "v[1,3] m[1,2]", "m[1,2] v[1,3] u[2,3]",
       {{"v", "z2_w"}, {"m", "mixed_ud"}, {"u", "z2_w"}});
    eq("stabilized_collapse", {3, 2, 3, 2}, "s[1,2,3,4]", "w[1,3]",
       {{"s", "z3_wst"}, {"w", "z3_w"}});
    eq("tensor_square", {3, 3, 3}, "r[1,2,3]", "w[1,3] w[2,3]", {{"r", "z3_rr"}, {"w", "z3_w"}});
    eq("induction_formula", {3, 2, 3}, "a[1,2,3]", "u[1,2] v*[2,3] f[1,3] v[2,3]",
       {{"a", "oracle_phi_luf"}, {"u", "oracle_u"}, {"v", "oracle_v"}, {"f", "oracle_f"}});
    eq("projection_bicharacter", {2, 3, 2, 2}, "w[3,4] w[1,3] u[2,3]",
       "w[1,3] u[2,3] w[1,4] u[2,4] w[3,4]", {{"w", "oracle_w"}, {"u", "oracle_u"}});
    eq("stabilized_exchange", {6, 3, 6}, "m[2,3] v[1,2]", "v[1,2] d[1,3] m[2,3]",
       {{"v", "st_v"}, {"m", "st_w"}, {"d", "st_ud"}});
    eq("dual_rep", {2, 2, 2}, "h[2,3] s[1,2]", "s[1,2] s[1,3] h[2,3]",
       {{"h", "z2_what"}, {"s", "z2_shat"}});

    for (const CorpusEquation& e : corpus.equations) {
        BoundEquation b = bind_equation(corpus, e);
        CheckReport r = check_equation(b.lhs, b.rhs, b.sig, b.table);
        require(r.passed, "corpus equation " + e.name);
        require(parse_word(print_word(b.lhs)) == b.lhs && parse_word(print_word(b.rhs)) == b.rhs,
                "round trip of " + e.name);
    }
    std::printf("corpus: %zu equations validated\n", corpus.equations.size());
    save(save_corpus_fixture, "corpus/equations.json", corpus);

    // --- corrupted variants: one per checker, each must fail its check ---
    {
        MultiplicativeUnitary bad = make_multiplicative_unitary_unchecked(corrupt(z3.w), 3);
        require(!pentagon_check(bad.w, 3).passed, "corrupted pentagon still passes");
        save(save_mu_fixture, "corrupted/pentagon.json", "z3_w_corrupted", bad);
    }
    {
        ComplexMatrix bad = corrupt(z2.w);
        require(!right_rep_check(bad, 2, z2).passed, "corrupted rep still passes");
        save(save_matrix_fixture, "corrupted/rep_op.json", "z2_reg_right_corrupted", bad);
    }
    {
        BraidedMU bad = make_braided_mu_unchecked(oracle.w, corrupt(oracle.u), oracle.v,
                                                  oracle.f, oracle.dH, oracle.dL);
        require(!bmu_validity_check(bad).passed, "corrupted braided still passes");
        save(save_bmu_fixture, "corrupted/braided.json", "oracle_z2_corrupted_u", bad);
    }
    {
        BraidedMU bad = make_braided_mu_unchecked(corrupt(oracle.w), oracle.u, oracle.v,
                                                  oracle.f, oracle.dH, oracle.dL);
        require(!semidirect(bad).report.passed, "corrupted semidirect still passes");
        save(save_bmu_fixture, "corrupted/semidirect.json", "oracle_z2_corrupted_w", bad);
    }
    {
        // A corrupted v stays control-diagonal and the projection identities
        // tolerate it; corrupting w breaks the multiplicativity of P.
        BraidedMU bad = make_braided_mu_unchecked(corrupt(oracle.w), oracle.u, oracle.v,
                                                  oracle.f, oracle.dH, oracle.dL);
        SemidirectResult sr = semidirect(bad);
        require(!projection_check(sr, bad).passed, "corrupted projection still passes");
        save(save_bmu_fixture, "corrupted/projection.json", "oracle_z2_corrupted_w", bad);
    }
    {
        ComplexMatrix bad = corrupt(a_luf.op);
        require(!reconstruct(oracle, oracle_sr, bad, oracle.dL).report.passed,
                "corrupted reconstruction still passes");
        save(save_matrix_fixture, "corrupted/reconstruct_a.json", "oracle_phi_luf_corrupted",
             bad);
    }
    {
        AbsorberCandidate bad = canonical;
        for (auto& e : bad.family)
            if (e.id == "rho") e.op = corrupt(e.op);
        require(!verify_absorber(bad).passed, "corrupted absorber still passes");
        save(save_candidate_fixture, "corrupted/absorber.json", "canonical_z3_corrupted", bad);
    }
    {
        AbsorberCandidate bad = sp.stabilized;
        for (auto& e : bad.family)
            if (e.id == "rho_st") e.op = corrupt(e.op);
        require(!compare_absorbers(sp.base, bad).passed, "corrupted pair still passes");
        save(save_pair_fixture, "corrupted/compare.json", "stabilized_z3_corrupted", sp.base,
             bad);
    }
    {
        AbsorberCandidate bad = mp.lam;
        for (auto& e : bad.family)
            if (e.id == "rho") e.op = corrupt(e.op);
        require(!mixed_system_check(mp.rho, bad).passed, "corrupted mixed still passes");
        save(save_mixed_fixture, "corrupted/mixed.json", "mixed_z2_corrupted", mp.rho, bad);
    }
    {
        EquationCorpus bad = corpus;
        bad.name = "leg_equations_corrupted";
        bad.matrices.at("oracle_w") = corrupt(bad.matrices.at("oracle_w"));
        bool any_fail = false;
        for (const CorpusEquation& e : bad.equations) {
            BoundEquation b = bind_equation(bad, e);
            if (!check_equation(b.lhs, b.rhs, b.sig, b.table).passed) any_fail = true;
        }
        require(any_fail, "corrupted corpus still passes");
        save(save_corpus_fixture, "corrupted/corpus.json", bad);
    }

    std::printf("done: %d fixtures under %s\n", written, root.string().c_str());
    return 0;
}
