#include "mulab/leg_expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mulab {

namespace {

struct Lexer {
    const std::string& src;
    std::size_t pos = 0;

    explicit Lexer(const std::string& s) : src(s) {}

    void skip_ws() {
        while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= src.size();
    }

    char peek() {
        skip_ws();
        return pos < src.size() ? src[pos] : '\0';
    }

    std::string name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= src.size() || !std::isalpha(static_cast<unsigned char>(src[pos]))) {
            throw ParseError("expected operator name", pos);
        }
        ++pos;
        while (pos < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
            ++pos;
        }
        return src.substr(start, pos - start);
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos >= src.size() || src[pos] != c) {
            throw ParseError(std::string("expected '") + c + "' " + what, pos);
        }
        ++pos;
    }

    bool accept(char c) {
        skip_ws();
        if (pos < src.size() && src[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
        if (pos == start) throw ParseError("expected leg number", pos);
        long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (src[i] - '0');
            if (v > 1'000'000) throw ParseError("leg number out of range", start);
        }
        return static_cast<int>(v);
    }
};

}  // namespace

LegWord parse_word(const std::string& src) {
    Lexer lex(src);
    LegWord word;
    if (lex.at_end()) throw ParseError("empty word", 0);
    while (!lex.at_end()) {
        LegTerm term;
        std::size_t term_start = lex.pos;
        term.symbol = lex.name();
        term.adjoint = lex.accept('*');
        lex.expect('[', "to open leg list");
        term.legs.push_back(lex.integer());
        while (lex.accept(',')) term.legs.push_back(lex.integer());
        lex.expect(']', "to close leg list");
        for (int leg : term.legs) {
            if (leg < 1) throw ParseError("legs are 1-based", term_start);
        }
        for (std::size_t i = 1; i < term.legs.size(); ++i) {
            if (term.legs[i] <= term.legs[i - 1]) {
                throw ParseError("legs must be strictly increasing in " + term.symbol,
                                 term_start);
            }
        }
        word.terms.push_back(std::move(term));
    }
    return word;
}

std::string print_word(const LegWord& w) {
    std::ostringstream out;
    for (std::size_t t = 0; t < w.terms.size(); ++t) {
        if (t) out << ' ';
        const LegTerm& term = w.terms[t];
        out << term.symbol;
        if (term.adjoint) out << '*';
        out << '[';
        for (std::size_t i = 0; i < term.legs.size(); ++i) {
            if (i) out << ',';
            out << term.legs[i];
        }
        out << ']';
    }
    return out.str();
}

ComplexMatrix evaluate(const LegWord& w, const SpaceSignature& sig, const SymbolTable& tab) {
    if (w.terms.empty()) throw EvalError("cannot evaluate an empty word");
    ComplexMatrix acc;
    bool first = true;
    for (const LegTerm& term : w.terms) {
        auto it = tab.ops.find(term.symbol);
        if (it == tab.ops.end()) throw EvalError("unknown symbol '" + term.symbol + "'");
        const ComplexMatrix& base = it->second;
        if (base.rows() != base.cols()) {
            throw EvalError("operator '" + term.symbol + "' is not square");
        }
        for (int leg : term.legs) {
            if (leg > static_cast<int>(sig.dims.size())) {
                throw EvalError("leg " + std::to_string(leg) + " in '" + term.symbol +
                                "' exceeds signature rank " + std::to_string(sig.dims.size()));
            }
        }
        std::size_t expect = 1;
        for (int leg : term.legs) expect *= static_cast<std::size_t>(sig.dim(leg));
        if (static_cast<std::size_t>(base.rows()) != expect) {
            throw EvalError("operator '" + term.symbol + "' has side " +
                            std::to_string(base.rows()) + " but its legs span dimension " +
                            std::to_string(expect));
        }
        ComplexMatrix op = term.adjoint ? base.adjoint() : base;
        ComplexMatrix embedded = embed_legs(op, term.legs, sig);
        if (first) {
            acc = std::move(embedded);
            first = false;
        } else {
            acc = acc * embedded;
        }
    }
    return acc;
}

CheckReport check_equation(const LegWord& lhs, const LegWord& rhs, const SpaceSignature& sig,
                           const SymbolTable& tab, double tol) {
    CheckReport rep;
    rep.name = "equation";
    rep.tolerance = tol;
    rep.passed = true;
    std::set<std::string> symbols;
    for (const LegTerm& t : lhs.terms) symbols.insert(t.symbol);
    for (const LegTerm& t : rhs.terms) symbols.insert(t.symbol);
    for (const std::string& sym : symbols) {
        auto it = tab.ops.find(sym);
        if (it == tab.ops.end()) throw EvalError("unknown symbol '" + sym + "'");
        rep.add(CheckReport::leaf("1_unitary[" + sym + "]", unitarity_residual(it->second), tol));
    }
    ComplexMatrix l = evaluate(lhs, sig, tab);
    ComplexMatrix r = evaluate(rhs, sig, tab);
    rep.add(CheckReport::leaf("2_equation", residual(l, r), tol));
    return rep;
}

}  // namespace mulab
