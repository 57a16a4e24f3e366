#include "mulab/fixtures.hpp"

#include <fstream>

namespace mulab {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw FixtureError(what + ": missing field '" + key + "'");
    return *it;
}

void expect_kind(const json& j, const std::string& kind) {
    std::string got = fixture_kind(j);
    if (got != kind) {
        throw FixtureError("expected fixture kind '" + kind + "', found '" + got + "'");
    }
}

Side side_from_string(const std::string& s) {
    if (s == "right") return Side::Right;
    if (s == "left") return Side::Left;
    throw FixtureError("unknown side '" + s + "' (expected 'right' or 'left')");
}

std::string side_to_string(Side s) { return s == Side::Right ? "right" : "left"; }

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    const std::size_t n = static_cast<std::size_t>(m.rows()) * m.cols();
    for (std::size_t i = 0; i < n; ++i) {
        const cd& z = m.data()[i];
        entries.push_back(json::array({z.real(), z.imag()}));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_object()) throw FixtureError(what + ": matrix must be an object");
    int rows = field(j, "rows", what).get<int>();
    int cols = field(j, "cols", what).get<int>();
    if (rows <= 0 || cols <= 0) throw FixtureError(what + ": non-positive matrix shape");
    const json& entries = field(j, "entries", what);
    if (!entries.is_array() ||
        entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        throw FixtureError(what + ": expected " + std::to_string(rows * cols) + " entries");
    }
    ComplexMatrix m(rows, cols);
    std::size_t i = 0;
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 2) {
            throw FixtureError(what + ": entries must be [re, im] pairs");
        }
        m.data()[i++] = cd(e[0].get<double>(), e[1].get<double>());
    }
    return m;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw FixtureError("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw FixtureError("cannot write fixture '" + path + "'");
    out << j.dump(1) << '\n';
}

std::string fixture_kind(const json& j) {
    if (!j.is_object()) throw FixtureError("fixture root must be an object");
    return field(j, "kind", "fixture").get<std::string>();
}

void save_matrix_fixture(const std::string& path, const std::string& name,
                         const ComplexMatrix& m) {
    json j = matrix_to_json(m);
    j["name"] = name;
    j["kind"] = "matrix";
    save_json_file(path, j);
}

ComplexMatrix load_matrix_fixture(const json& j) {
    expect_kind(j, "matrix");
    return matrix_from_json(j, "matrix fixture");
}

void save_mu_fixture(const std::string& path, const std::string& name,
                     const MultiplicativeUnitary& m) {
    json j{{"name", name},
           {"kind", "multiplicative_unitary"},
           {"meta", {{"dim", m.dim}}},
           {"w", matrix_to_json(m.w)}};
    save_json_file(path, j);
}

MuFixture load_mu_fixture(const json& j) {
    expect_kind(j, "multiplicative_unitary");
    MuFixture f;
    f.name = field(j, "name", "mu fixture").get<std::string>();
    f.dim = field(field(j, "meta", "mu fixture"), "dim", "mu fixture meta").get<int>();
    f.w = matrix_from_json(field(j, "w", "mu fixture"), "mu fixture w");
    if (f.dim <= 0 || f.w.rows() != f.dim * f.dim || f.w.cols() != f.dim * f.dim) {
        throw FixtureError("mu fixture: w must be square of side dim^2");
    }
    return f;
}

void save_bmu_fixture(const std::string& path, const std::string& name, const BraidedMU& bmu) {
    json j{{"name", name},
           {"kind", "braided_mu"},
           {"meta", {{"dim_h", bmu.dH}, {"dim_l", bmu.dL}}},
           {"w", matrix_to_json(bmu.w)},
           {"u", matrix_to_json(bmu.u)},
           {"v", matrix_to_json(bmu.v)},
           {"f", matrix_to_json(bmu.f)}};
    save_json_file(path, j);
}

BraidedMU load_bmu_fixture(const json& j) {
    expect_kind(j, "braided_mu");
    const json& meta = field(j, "meta", "braided fixture");
    int dh = field(meta, "dim_h", "braided fixture meta").get<int>();
    int dl = field(meta, "dim_l", "braided fixture meta").get<int>();
    return make_braided_mu_unchecked(
        matrix_from_json(field(j, "w", "braided fixture"), "braided w"),
        matrix_from_json(field(j, "u", "braided fixture"), "braided u"),
        matrix_from_json(field(j, "v", "braided fixture"), "braided v"),
        matrix_from_json(field(j, "f", "braided fixture"), "braided f"), dh, dl);
}

json candidate_to_json(const AbsorberCandidate& c) {
    json family = json::array();
    for (const AbsorberEntry& e : c.family) {
        family.push_back(json{{"id", e.id},
                              {"carrier_dim", e.carrier_dim},
                              {"trivial", e.trivial},
                              {"op", matrix_to_json(e.op)}});
    }
    json edges = json::array();
    for (const IntertwinerEdge& e : c.intertwiners) {
        edges.push_back(json{{"from", e.from}, {"to", e.to}, {"a", matrix_to_json(e.a)}});
    }
    json triples = json::array();
    for (const TensorTriple& t : c.tensor_pairs) {
        triples.push_back(json::array({t.left, t.right, t.product}));
    }
    return json{{"side", side_to_string(c.side)},
                {"object_id", c.object_id},
                {"family", std::move(family)},
                {"intertwiners", std::move(edges)},
                {"tensor_pairs", std::move(triples)}};
}

AbsorberCandidate candidate_from_json(const json& j) {
    AbsorberCandidate c;
    c.side = side_from_string(field(j, "side", "candidate").get<std::string>());
    c.object_id = field(j, "object_id", "candidate").get<std::string>();
    for (const json& e : field(j, "family", "candidate")) {
        AbsorberEntry entry;
        entry.id = field(e, "id", "family entry").get<std::string>();
        entry.carrier_dim = field(e, "carrier_dim", "family entry").get<int>();
        entry.trivial = field(e, "trivial", "family entry").get<bool>();
        entry.op = matrix_from_json(field(e, "op", "family entry"), "family op " + entry.id);
        c.family.push_back(std::move(entry));
    }
    for (const json& e : field(j, "intertwiners", "candidate")) {
        IntertwinerEdge edge;
        edge.from = field(e, "from", "edge").get<std::string>();
        edge.to = field(e, "to", "edge").get<std::string>();
        edge.a = matrix_from_json(field(e, "a", "edge"), "edge " + edge.from + "->" + edge.to);
        c.intertwiners.push_back(std::move(edge));
    }
    for (const json& t : field(j, "tensor_pairs", "candidate")) {
        if (!t.is_array() || t.size() != 3) {
            throw FixtureError("tensor_pairs entries must be [left, right, product]");
        }
        c.tensor_pairs.push_back(
            TensorTriple{t[0].get<std::string>(), t[1].get<std::string>(),
                         t[2].get<std::string>()});
    }
    return c;
}

void save_candidate_fixture(const std::string& path, const std::string& name,
                            const AbsorberCandidate& c) {
    json j = candidate_to_json(c);
    j["name"] = name;
    j["kind"] = "absorber_candidate";
    save_json_file(path, j);
}

AbsorberCandidate load_candidate_fixture(const json& j) {
    expect_kind(j, "absorber_candidate");
    return candidate_from_json(j);
}

void save_pair_fixture(const std::string& path, const std::string& name,
                       const AbsorberCandidate& first, const AbsorberCandidate& second) {
    json j{{"name", name},
           {"kind", "absorber_pair"},
           {"first", candidate_to_json(first)},
           {"second", candidate_to_json(second)}};
    save_json_file(path, j);
}

std::pair<AbsorberCandidate, AbsorberCandidate> load_pair_fixture(const json& j) {
    expect_kind(j, "absorber_pair");
    return {candidate_from_json(field(j, "first", "pair fixture")),
            candidate_from_json(field(j, "second", "pair fixture"))};
}

void save_mixed_fixture(const std::string& path, const std::string& name,
                        const AbsorberCandidate& rho, const AbsorberCandidate& lam) {
    json j{{"name", name},
           {"kind", "mixed_system"},
           {"rho", candidate_to_json(rho)},
           {"lambda", candidate_to_json(lam)}};
    save_json_file(path, j);
}

std::pair<AbsorberCandidate, AbsorberCandidate> load_mixed_fixture(const json& j) {
    expect_kind(j, "mixed_system");
    return {candidate_from_json(field(j, "rho", "mixed fixture")),
            candidate_from_json(field(j, "lambda", "mixed fixture"))};
}

void save_corpus_fixture(const std::string& path, const EquationCorpus& corpus) {
    json matrices = json::array();
    for (const auto& [name, m] : corpus.matrices) {
        json jm = matrix_to_json(m);
        jm["name"] = name;
        matrices.push_back(std::move(jm));
    }
    json equations = json::array();
    for (const CorpusEquation& eq : corpus.equations) {
        equations.push_back(json{{"name", eq.name},
                                 {"signature", eq.signature},
                                 {"lhs", eq.lhs},
                                 {"rhs", eq.rhs},
                                 {"bindings", eq.bindings}});
    }
    json j{{"name", corpus.name},
           {"kind", "equation_corpus"},
           {"matrices", std::move(matrices)},
           {"equations", std::move(equations)}};
    save_json_file(path, j);
}

EquationCorpus load_corpus_fixture(const json& j) {
    expect_kind(j, "equation_corpus");
    EquationCorpus corpus;
    corpus.name = field(j, "name", "corpus").get<std::string>();
    for (const json& jm : field(j, "matrices", "corpus")) {
        std::string name = field(jm, "name", "corpus matrix").get<std::string>();
        corpus.matrices.emplace(name, matrix_from_json(jm, "corpus matrix " + name));
    }
    for (const json& je : field(j, "equations", "corpus")) {
        CorpusEquation eq;
        eq.name = field(je, "name", "corpus equation").get<std::string>();
        eq.signature = field(je, "signature", "corpus equation").get<std::vector<int>>();
        eq.lhs = field(je, "lhs", "corpus equation").get<std::string>();
        eq.rhs = field(je, "rhs", "corpus equation").get<std::string>();
        for (const auto& [k, v] : field(je, "bindings", "corpus equation").items()) {
            eq.bindings.emplace(k, v.get<std::string>());
        }
        corpus.equations.push_back(std::move(eq));
    }
    return corpus;
}

BoundEquation bind_equation(const EquationCorpus& corpus, const CorpusEquation& eq) {
    BoundEquation bound;
    bound.name = eq.name;
    bound.sig = SpaceSignature{eq.signature};
    bound.sig.validate();
    try {
        bound.lhs = parse_word(eq.lhs);
        bound.rhs = parse_word(eq.rhs);
    } catch (const ParseError& e) {
        throw FixtureError("equation '" + eq.name + "': " + e.what());
    }
    for (const auto& [symbol, matrix_name] : eq.bindings) {
        auto it = corpus.matrices.find(matrix_name);
        if (it == corpus.matrices.end()) {
            throw FixtureError("equation '" + eq.name + "' binds '" + symbol +
                               "' to unknown matrix '" + matrix_name + "'");
        }
        bound.table.ops.emplace(symbol, it->second);
    }
    return bound;
}

}  // namespace mulab
