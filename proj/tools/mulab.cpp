// Command-line front end: loads JSON fixtures, runs one verification, and
// prints the check report.  Exit status: 0 all checks passed, 1 a check
// failed, 2 malformed input or usage.
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "mulab/braided.hpp"
#include "mulab/examples.hpp"
#include "mulab/fixtures.hpp"
#include "mulab/kernels.hpp"
#include "mulab/leg_expr.hpp"

using namespace mulab;
using nlohmann::json;

namespace {

void print_text(const CheckReport& r, int depth) {
    std::printf("%*s[%s] %-40s residual %.6e  tol %.1e%s%s\n", 2 * depth, "",
                r.passed ? "PASS" : "FAIL", r.name.c_str(), r.residual, r.tolerance,
                r.note.empty() ? "" : "  -- ", r.note.c_str());
    for (const CheckReport& s : r.subs) print_text(s, depth + 1);
}

json report_to_json(const CheckReport& r) {
    json j{{"name", r.name},
           {"residual", r.residual},
           {"tolerance", r.tolerance},
           {"passed", r.passed}};
    if (!r.note.empty()) j["note"] = r.note;
    if (!r.subs.empty()) {
        json subs = json::array();
        for (const CheckReport& s : r.subs) subs.push_back(report_to_json(s));
        j["subs"] = std::move(subs);
    }
    return j;
}

int finish(const CheckReport& r, const std::string& format) {
    if (format == "json") {
        std::printf("%s\n", report_to_json(r).dump(1).c_str());
    } else {
        print_text(r, 0);
    }
    return r.passed ? 0 : 1;
}

int infer_factor(int rows, int d, const char* what) {
    if (d <= 0 || rows % d != 0) {
        throw FixtureError(std::string(what) + ": operator side " + std::to_string(rows) +
                           " is not a multiple of the base dimension " + std::to_string(d));
    }
    return rows / d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mulab: finite-dimensional laboratory for multiplicative unitaries"};
    app.require_subcommand(1);

    double tol = kDefaultTol;
    if (const char* env = std::getenv("MULAB_TOL")) tol = std::atof(env);
    std::string format = "text";
    app.add_option("--tol", tol, "residual tolerance")->capture_default_str();
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file1, file2, eq_name, side = "right", out_path, eval_side = "lhs";
    int k = 0;

    CLI::App* c_pent = app.add_subcommand("pentagon", "pentagon + unitarity of a fixture");
    c_pent->add_option("mu", file1, "multiplicative_unitary fixture")->required();

    CLI::App* c_rep = app.add_subcommand("rep-check", "representation equation for one operator");
    c_rep->add_option("mu", file1, "multiplicative_unitary fixture")->required();
    c_rep->add_option("op", file2, "matrix fixture with the representation operator")->required();
    c_rep->add_option("--side", side, "right|left")->check(CLI::IsMember({"right", "left"}));
    c_rep->add_option("--k", k, "carrier dimension (inferred when omitted)");

    CLI::App* c_bmu = app.add_subcommand("braided-check", "validity of a braided fixture");
    c_bmu->add_option("bmu", file1, "braided_mu fixture")->required();

    CLI::App* c_semi = app.add_subcommand("semidirect", "semidirect-product unitary checks");
    c_semi->add_option("bmu", file1, "braided_mu fixture")->required();

    CLI::App* c_proj = app.add_subcommand("projection", "projection identities of the semidirect product");
    c_proj->add_option("bmu", file1, "braided_mu fixture")->required();

    CLI::App* c_rec = app.add_subcommand("reconstruct", "recover a braided representation from one of the semidirect product");
    c_rec->add_option("bmu", file1, "braided_mu fixture")->required();
    c_rec->add_option("rep", file2, "matrix fixture with the representation operator")->required();
    c_rec->add_option("--k", k, "carrier dimension (inferred when omitted)");

    CLI::App* c_abs = app.add_subcommand("absorber-verify", "natural-absorber axioms for a candidate");
    c_abs->add_option("candidate", file1, "absorber_candidate fixture")->required();
    bool to_mu = false;
    c_abs->add_flag("--to-mu", to_mu, "also check the induced multiplicative unitary and fullness");

    CLI::App* c_cmp = app.add_subcommand("compare-absorbers", "six exchange relations of a right/right pair");
    c_cmp->add_option("pair", file1, "absorber_pair fixture")->required();

    CLI::App* c_mix = app.add_subcommand("mixed-system", "six relations of a right/left pair");
    c_mix->add_option("pair", file1, "mixed_system fixture")->required();

    CLI::App* c_chk = app.add_subcommand("check-eq", "evaluate equations of a corpus");
    c_chk->add_option("corpus", file1, "equation_corpus fixture")->required();
    c_chk->add_option("--equation", eq_name, "check a single named equation");

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate one side of a corpus equation");
    c_eval->add_option("corpus", file1, "equation_corpus fixture")->required();
    c_eval->add_option("--equation", eq_name, "equation name")->required();
    c_eval->add_option("--side", eval_side, "lhs|rhs")->check(CLI::IsMember({"lhs", "rhs"}));
    c_eval->add_option("--out", out_path, "save the result as a matrix fixture");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_pent->parsed()) {
            MuFixture f = load_mu_fixture(load_json_file(file1));
            return finish(pentagon_check(f.w, f.dim, tol), format);
        }
        if (c_rep->parsed()) {
            MuFixture f = load_mu_fixture(load_json_file(file1));
            ComplexMatrix op = load_matrix_fixture(load_json_file(file2));
            MultiplicativeUnitary m = make_multiplicative_unitary_unchecked(f.w, f.dim);
            if (k == 0) k = infer_factor(op.rows(), f.dim, "rep-check");
            CheckReport r = side == "right" ? right_rep_check(op, k, m, tol)
                                            : left_rep_check(op, k, m, tol);
            return finish(r, format);
        }
        if (c_bmu->parsed()) {
            BraidedMU bmu = load_bmu_fixture(load_json_file(file1));
            return finish(bmu_validity_check(bmu, tol), format);
        }
        if (c_semi->parsed()) {
            BraidedMU bmu = load_bmu_fixture(load_json_file(file1));
            return finish(semidirect(bmu, tol).report, format);
        }
        if (c_proj->parsed()) {
            BraidedMU bmu = load_bmu_fixture(load_json_file(file1));
            SemidirectResult sr = semidirect(bmu, tol);
            return finish(projection_check(sr, bmu, tol), format);
        }
        if (c_rec->parsed()) {
            BraidedMU bmu = load_bmu_fixture(load_json_file(file1));
            ComplexMatrix a = load_matrix_fixture(load_json_file(file2));
            SemidirectResult sr = semidirect(bmu, tol);
            if (k == 0) k = infer_factor(a.rows(), bmu.dH * bmu.dL, "reconstruct");
            return finish(reconstruct(bmu, sr, a, k, tol).report, format);
        }
        if (c_abs->parsed()) {
            AbsorberCandidate c = load_candidate_fixture(load_json_file(file1));
            CheckReport r = verify_absorber(c, tol);
            if (to_mu) {
                CheckReport all;
                all.name = "absorber";
                all.tolerance = tol;
                r.name = "1_axioms";
                all.add(std::move(r));
                CheckReport mu = absorber_to_mu(c, tol).report;
                mu.name = "2_induced_unitary";
                all.add(std::move(mu));
                return finish(all, format);
            }
            return finish(r, format);
        }
        if (c_cmp->parsed()) {
            auto [first, second] = load_pair_fixture(load_json_file(file1));
            CheckReport all;
            all.name = "absorber_pair";
            all.tolerance = tol;
            CheckReport v1 = verify_absorber(first, tol);
            v1.name = "1_first_axioms";
            all.add(std::move(v1));
            CheckReport v2 = verify_absorber(second, tol);
            v2.name = "2_second_axioms";
            all.add(std::move(v2));
            CheckReport cmp = compare_absorbers(first, second, tol);
            cmp.name = "3_exchange_relations";
            all.add(std::move(cmp));
            return finish(all, format);
        }
        if (c_mix->parsed()) {
            auto [rho, lam] = load_mixed_fixture(load_json_file(file1));
            CheckReport all;
            all.name = "mixed_pair";
            all.tolerance = tol;
            CheckReport v1 = verify_absorber(rho, tol);
            v1.name = "1_right_axioms";
            all.add(std::move(v1));
            CheckReport v2 = verify_absorber(lam, tol);
            v2.name = "2_left_axioms";
            all.add(std::move(v2));
            CheckReport sys = mixed_system_check(rho, lam, tol);
            sys.name = "3_mixed_system";
            all.add(std::move(sys));
            return finish(all, format);
        }
        if (c_chk->parsed()) {
            EquationCorpus corpus = load_corpus_fixture(load_json_file(file1));
            CheckReport all;
            all.name = "corpus[" + corpus.name + "]";
            all.tolerance = tol;
            bool found = eq_name.empty();
            for (const CorpusEquation& eq : corpus.equations) {
                if (!eq_name.empty() && eq.name != eq_name) continue;
                found = true;
                BoundEquation b = bind_equation(corpus, eq);
                CheckReport r = check_equation(b.lhs, b.rhs, b.sig, b.table, tol);
                r.name = eq.name;
                all.add(std::move(r));
            }
            if (!found) throw FixtureError("corpus has no equation named '" + eq_name + "'");
            return finish(all, format);
        }
        if (c_eval->parsed()) {
            EquationCorpus corpus = load_corpus_fixture(load_json_file(file1));
            for (const CorpusEquation& eq : corpus.equations) {
                if (eq.name != eq_name) continue;
                BoundEquation b = bind_equation(corpus, eq);
                const LegWord& word = eval_side == "lhs" ? b.lhs : b.rhs;
                ComplexMatrix m = evaluate(word, b.sig, b.table);
                std::printf("equation  %s\nword      %s\nsignature %s\nside      %d x %d\n"
                            "max |entry| %.17g\n",
                            eq.name.c_str(), print_word(word).c_str(), b.sig.str().c_str(),
                            m.rows(), m.cols(), max_abs(m));
                if (!out_path.empty()) {
                    save_matrix_fixture(out_path, eq.name + "_" + eval_side, m);
                    std::printf("saved     %s\n", out_path.c_str());
                }
                return 0;
            }
            throw FixtureError("corpus has no equation named '" + eq_name + "'");
        }
        std::fprintf(stderr, "error: no subcommand selected\n");
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
