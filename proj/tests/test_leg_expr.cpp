#include <doctest.h>

#include "mulab/examples.hpp"
#include "mulab/leg_expr.hpp"

using namespace mulab;

TEST_CASE("parsing and canonical printing round-trip") {
    const char* sources[] = {
        "w[1,2]",
        "w[1,3] u[2,3] v*[3,4] f[2,4] v[3,4]",
        "  a_1 [ 1 , 2 ]   b* [2, 3 ]  ",
        "X[1,2,3,4] Y*[2,4]",
    };
    for (const char* src : sources) {
        LegWord w = parse_word(src);
        std::string canon = print_word(w);
        CHECK(parse_word(canon) == w);
        CHECK(print_word(parse_word(canon)) == canon);  // printing is idempotent
    }
    LegWord w = parse_word("w[1,3] u*[2,3]");
    REQUIRE(w.terms.size() == 2);
    CHECK(w.terms[0].symbol == "w");
    CHECK_FALSE(w.terms[0].adjoint);
    CHECK(w.terms[1].adjoint);
    CHECK(w.terms[1].legs == std::vector<int>{2, 3});
    CHECK(print_word(w) == "w[1,3] u*[2,3]");
}

TEST_CASE("parse errors carry the offending position") {
    auto expect_error = [](const std::string& src) {
        try {
            parse_word(src);
            FAIL_CHECK("expected ParseError for: ", src);
        } catch (const ParseError& e) {
            CHECK(e.position <= src.size());
            CHECK(std::string(e.what()).find("offset") != std::string::npos);
        }
    };
    expect_error("");
    expect_error("w");            // missing leg list
    expect_error("w[");           // unterminated
    expect_error("w[]");          // empty legs
    expect_error("w[1,2] +");     // stray token
    expect_error("w[0]");         // legs are 1-based
    expect_error("w[2,2]");       // not strictly increasing
    expect_error("w[3,1]");       // decreasing
    expect_error("w[1,a]");       // non-integer
    expect_error("1w[1]");        // bad name
    expect_error("w*[1,2000000]");  // implausible leg index
}

TEST_CASE("evaluation matches direct embedding") {
    BraidedMU b = examples::z2_on_z3_bmu();
    SpaceSignature sig{2, 3, 2, 3};
    SymbolTable tab;
    tab.ops["w"] = b.w;
    tab.ops["u"] = b.u;
    tab.ops["v"] = b.v;
    tab.ops["f"] = b.f;

    ComplexMatrix direct = embed_legs(b.w, {1, 3}, sig) * embed_legs(b.u, {2, 3}, sig) *
                           embed_legs(b.v.adjoint(), {3, 4}, sig) *
                           embed_legs(b.f, {2, 4}, sig) * embed_legs(b.v, {3, 4}, sig);
    ComplexMatrix via_word = evaluate(parse_word("w[1,3] u[2,3] v*[3,4] f[2,4] v[3,4]"), sig, tab);
    CHECK(residual(via_word, direct) == 0.0);

    // The same word evaluates to the semidirect unitary, bitwise.
    SemidirectResult sr = semidirect(b);
    CHECK(residual(via_word, sr.wc.w) == 0.0);

    // Single term, whole space: the matrix itself.
    SymbolTable one;
    one.ops["a"] = random_unitary(6, 15);
    CHECK(residual(evaluate(parse_word("a[1,2]"), SpaceSignature{2, 3}, one),
                   one.ops["a"]) == 0.0);
    // Adjoint marker conjugates before embedding.
    CHECK(residual(evaluate(parse_word("a*[1,2]"), SpaceSignature{2, 3}, one),
                   one.ops["a"].adjoint()) == 0.0);
}

TEST_CASE("evaluation reports typed errors") {
    SymbolTable tab;
    tab.ops["a"] = random_unitary(4, 3);
    SpaceSignature sig{2, 2, 3};
    CHECK_THROWS_AS(evaluate(parse_word("b[1,2]"), sig, tab), EvalError);   // unknown symbol
    CHECK_THROWS_AS(evaluate(parse_word("a[1,4]"), sig, tab), EvalError);   // leg out of range
    CHECK_THROWS_AS(evaluate(parse_word("a[1,3]"), sig, tab), EvalError);   // 4 != 2*3
    SymbolTable rect;
    rect.ops["r"] = ComplexMatrix(3, 4);
    CHECK_THROWS_AS(evaluate(parse_word("r[1]"), SpaceSignature{3}, rect), EvalError);
}

TEST_CASE("equation checks report unitarity separately from the identity") {
    MultiplicativeUnitary m = from_group(GroupTable::cyclic(2));
    SymbolTable tab;
    tab.ops["w"] = m.w;
    SpaceSignature sig{2, 2, 2};
    CheckReport ok = check_equation(parse_word("w[2,3] w[1,2]"),
                                    parse_word("w[1,2] w[1,3] w[2,3]"), sig, tab);
    CHECK(ok.passed);
    CHECK(ok.residual == 0.0);

    // A true identity bound to a non-unitary symbol: the equation leaf
    // passes but the unitarity leaf pulls the overall verdict down.
    SymbolTable scaled;
    scaled.ops["w"] = 2.0 * m.w;
    CheckReport mixed = check_equation(parse_word("w[1,2]"), parse_word("w[1,2]"),
                                       SpaceSignature{2, 2}, scaled);
    CHECK_FALSE(mixed.passed);
    bool equation_leaf_passed = false, unitarity_leaf_failed = false;
    for (const auto& sub : mixed.subs) {
        if (sub.name.find("equation") != std::string::npos && sub.passed)
            equation_leaf_passed = true;
        if (sub.name.find("unitary") != std::string::npos && !sub.passed)
            unitarity_leaf_failed = true;
    }
    CHECK(equation_leaf_passed);
    CHECK(unitarity_leaf_failed);

    // A false identity with unitary bindings fails on the equation leaf.
    CheckReport wrong = check_equation(parse_word("w[1,2]"), parse_word("w[1,3]"), sig, tab);
    CHECK_FALSE(wrong.passed);
}
