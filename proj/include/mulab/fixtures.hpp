#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "mulab/absorber.hpp"
#include "mulab/braided.hpp"
#include "mulab/leg_expr.hpp"
#include "mulab/multunit.hpp"

namespace mulab {

// JSON on-disk formats.  Every file carries {"name", "kind", ...}; matrices
// are {"rows", "cols", "entries"} with entries a row-major list of [re, im]
// pairs.  Doubles are serialized with round-trip precision, so save/load is
// bit-exact.
struct FixtureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& what);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Peeks at the "kind" field.
std::string fixture_kind(const nlohmann::json& j);

// kind = "matrix"
void save_matrix_fixture(const std::string& path, const std::string& name,
                         const ComplexMatrix& m);
ComplexMatrix load_matrix_fixture(const nlohmann::json& j);

// kind = "multiplicative_unitary"; meta.dim
void save_mu_fixture(const std::string& path, const std::string& name,
                     const MultiplicativeUnitary& m);
struct MuFixture {
    std::string name;
    int dim = 0;
    ComplexMatrix w;
};
MuFixture load_mu_fixture(const nlohmann::json& j);

// kind = "braided_mu"; meta.dim_h, meta.dim_l
void save_bmu_fixture(const std::string& path, const std::string& name, const BraidedMU& bmu);
BraidedMU load_bmu_fixture(const nlohmann::json& j);

// kind = "absorber_candidate"
nlohmann::json candidate_to_json(const AbsorberCandidate& c);
AbsorberCandidate candidate_from_json(const nlohmann::json& j);
void save_candidate_fixture(const std::string& path, const std::string& name,
                            const AbsorberCandidate& c);
AbsorberCandidate load_candidate_fixture(const nlohmann::json& j);

// kind = "absorber_pair" (fields "first", "second"); also used for the
// stabilization pair.
void save_pair_fixture(const std::string& path, const std::string& name,
                       const AbsorberCandidate& first, const AbsorberCandidate& second);
std::pair<AbsorberCandidate, AbsorberCandidate> load_pair_fixture(const nlohmann::json& j);

// kind = "mixed_system" (fields "rho" right, "lambda" left)
void save_mixed_fixture(const std::string& path, const std::string& name,
                        const AbsorberCandidate& rho, const AbsorberCandidate& lam);
std::pair<AbsorberCandidate, AbsorberCandidate> load_mixed_fixture(const nlohmann::json& j);

// kind = "equation_corpus": named matrices plus equations
//   {"name", "signature": [d...], "lhs", "rhs", "bindings": {symbol: matrix}}
struct CorpusEquation {
    std::string name;
    std::vector<int> signature;
    std::string lhs, rhs;
    std::map<std::string, std::string> bindings;
};
struct EquationCorpus {
    std::string name;
    std::map<std::string, ComplexMatrix> matrices;
    std::vector<CorpusEquation> equations;
};
void save_corpus_fixture(const std::string& path, const EquationCorpus& corpus);
EquationCorpus load_corpus_fixture(const nlohmann::json& j);

// Resolves one equation of a corpus into the pieces check_equation needs.
struct BoundEquation {
    std::string name;
    SpaceSignature sig;
    LegWord lhs, rhs;
    SymbolTable table;
};
BoundEquation bind_equation(const EquationCorpus& corpus, const CorpusEquation& eq);

}  // namespace mulab
