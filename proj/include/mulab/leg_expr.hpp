#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mulab/report.hpp"
#include "mulab/tensor.hpp"

namespace mulab {

// Leg-notation words over named operators:
//   word := term+
//   term := NAME '*'? '[' INT (',' INT)* ']'
// NAME matches [A-Za-z][A-Za-z0-9_]*; '*' takes the adjoint before
// embedding; leg lists are 1-based and strictly increasing.  Textual
// left-to-right order is operator composition: the leftmost term acts last,
// i.e. it is the leftmost factor of the matrix product.
struct LegTerm {
    std::string symbol;
    bool adjoint = false;
    std::vector<int> legs;

    bool operator==(const LegTerm&) const = default;
};

struct LegWord {
    std::vector<LegTerm> terms;

    bool operator==(const LegWord&) const = default;
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

struct EvalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

LegWord parse_word(const std::string& src);

// Canonical form; parse_word(print_word(w)) == w.
std::string print_word(const LegWord& w);

struct SymbolTable {
    std::map<std::string, ComplexMatrix> ops;
};

// Embeds each term into `sig` and multiplies left to right.  Throws
// EvalError for unknown symbols, out-of-range legs, or shape mismatches.
ComplexMatrix evaluate(const LegWord& w, const SpaceSignature& sig, const SymbolTable& tab);

// Residual between two words on a common signature.  Unitarity of each
// bound symbol is reported as a sub-check rather than an input error.
CheckReport check_equation(const LegWord& lhs, const LegWord& rhs, const SpaceSignature& sig,
                           const SymbolTable& tab, double tol = kDefaultTol);

}  // namespace mulab
