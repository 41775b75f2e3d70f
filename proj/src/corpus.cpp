#include "qact/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qact {

const CaseSpec* Corpus::find(const std::string& id) const {
    for (const auto& c : cases) {
        if (c.id == id) return &c;
    }
    return nullptr;
}

std::vector<const CaseSpec*> Corpus::family(int fam) const {
    std::vector<const CaseSpec*> out;
    for (const auto& c : cases) {
        if (c.family == fam) out.push_back(&c);
    }
    return out;
}

namespace {

std::vector<std::vector<std::string>> grid_from_json(const Json& j, int n,
                                                     const std::string& where) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) {
        throw CorpusError(where + ": pattern grid must be " + std::to_string(n) + " rows");
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != n) {
            throw CorpusError(where + ": pattern row must have " + std::to_string(n) +
                              " cells");
        }
        std::vector<std::string> r;
        for (const auto& cell : row) r.push_back(cell.get<std::string>());
        cells.push_back(std::move(r));
    }
    return cells;
}

Json grid_to_json(const std::vector<std::vector<std::string>>& cells) {
    Json rows = Json::array();
    for (const auto& r : cells) {
        Json row = Json::array();
        for (const auto& c : r) row.push_back(c);
        rows.push_back(std::move(row));
    }
    return rows;
}

PatternSpec pattern_from_json(const Json& j, const std::string& where) {
    PatternSpec p;
    if (j.is_string()) {
        if (j.get<std::string>() != "scalars") {
            throw CorpusError(where + ": unknown pattern keyword " + j.get<std::string>());
        }
        p.type = PatternSpec::Type::Scalars;
        return p;
    }
    if (j.is_object() && j.contains("kron")) {
        p.type = PatternSpec::Type::Kron;
        const Json& k = j.at("kron");
        p.kron_left = grid_from_json(k.at("left"), 2, where);
        p.kron_right = grid_from_json(k.at("right"), 2, where);
        p.coarse = k.at("coarse").get<std::string>();
        if (p.coarse != "left" && p.coarse != "right") {
            throw CorpusError(where + ": kron coarse must be 'left' or 'right'");
        }
        return p;
    }
    p.type = PatternSpec::Type::Grid;
    p.cells = grid_from_json(j, 4, where);
    return p;
}

Json pattern_to_json(const PatternSpec& p) {
    switch (p.type) {
        case PatternSpec::Type::Scalars: return Json("scalars");
        case PatternSpec::Type::Kron: {
            Json k;
            k["left"] = grid_to_json(p.kron_left);
            k["right"] = grid_to_json(p.kron_right);
            k["coarse"] = p.coarse;
            Json out;
            out["kron"] = std::move(k);
            return out;
        }
        case PatternSpec::Type::Grid: return grid_to_json(p.cells);
    }
    throw Error("unreachable");
}

std::vector<std::pair<std::string, std::string>> assigns_from_json(const Json& j,
                                                                   const std::string& where) {
    std::vector<std::pair<std::string, std::string>> out;
    if (j.is_null()) return out;
    if (!j.is_array()) throw CorpusError(where + ": assign must be an array");
    for (const auto& a : j) {
        out.emplace_back(a.at("param").get<std::string>(), a.at("expr").get<std::string>());
    }
    return out;
}

Json assigns_to_json(const std::vector<std::pair<std::string, std::string>>& assigns) {
    Json arr = Json::array();
    for (const auto& [p, e] : assigns) {
        Json a;
        a["param"] = p;
        a["expr"] = e;
        arr.push_back(std::move(a));
    }
    return arr;
}

Branch branch_from_json(const Json& b, const std::string& where) {
    Branch br;
    br.name = b.value("name", std::string("generic"));
    br.assigns = assigns_from_json(b.contains("assign") ? b.at("assign") : Json(), where);
    if (b.contains("nonequal")) {
        for (const auto& ne : b.at("nonequal")) {
            br.nonequal.emplace_back(ne.at(0).get<std::string>(),
                                     ne.at(1).get<std::string>());
        }
    }
    return br;
}

Json branch_to_json(const Branch& b) {
    Json bj;
    bj["name"] = b.name;
    if (!b.assigns.empty()) bj["assign"] = assigns_to_json(b.assigns);
    if (!b.nonequal.empty()) {
        Json ne = Json::array();
        for (const auto& [l, r] : b.nonequal) ne.push_back(Json::array({l, r}));
        bj["nonequal"] = std::move(ne);
    }
    return bj;
}

CaseSpec case_from_json(const Json& j, int family, const std::string& d_src) {
    CaseSpec c;
    c.id = j.at("id").get<std::string>();
    const std::string where = "case " + c.id;
    c.family = family;
    c.d_src = d_src;
    c.c12_src = j.at("c12").get<std::string>();
    c.c21_src = j.at("c21").get<std::string>();
    c.c11_src = j.at("c11").get<std::string>();
    c.c22_src = j.at("c22").get<std::string>();
    try {
        c.d = parse_matrix(c.d_src);
        c.c12 = parse_matrix(c.c12_src);
        c.c21 = parse_matrix(c.c21_src);
        c.c11 = parse_matrix(c.c11_src);
        c.c22 = parse_matrix(c.c22_src);
    } catch (const Error& e) {
        throw CorpusError(where + ": " + e.what());
    }
    for (const auto& p : j.at("params")) c.params.push_back(p.get<std::string>());

    if (j.contains("branches")) {
        for (const auto& b : j.at("branches")) {
            c.branches.push_back(branch_from_json(b, where));
        }
    }
    if (c.branches.empty()) c.branches.push_back(Branch{"generic", {}, {}});

    c.dim_R = j.at("dim_R").get<int>();
    c.dim_I = j.at("dim_I").get<int>();
    if (j.contains("R_pattern") && !j.at("R_pattern").is_null()) {
        c.r_pattern = pattern_from_json(j.at("R_pattern"), where + " R_pattern");
    }
    if (j.contains("I_pattern") && !j.at("I_pattern").is_null()) {
        c.i_pattern = pattern_from_json(j.at("I_pattern"), where + " I_pattern");
    }
    c.pert_src = j.at("perturbation").get<std::string>();
    if (c.pert_src != "zero") {
        try {
            c.perturbation = parse_matrix(c.pert_src);
        } catch (const Error& e) {
            throw CorpusError(where + " perturbation: " + e.what());
        }
    }
    if (j.contains("errata")) {
        for (const auto& e : j.at("errata")) {
            Erratum er;
            er.id = e.at("id").get<std::string>();
            er.field = e.at("field").get<std::string>();
            if (e.contains("covers")) {
                for (const auto& k : e.at("covers")) er.covers.push_back(k.get<std::string>());
            }
            er.corrected = e.contains("corrected") ? e.at("corrected") : Json();
            er.assigns = assigns_from_json(e.contains("assign") ? e.at("assign") : Json(),
                                           where + " erratum " + er.id);
            if (e.contains("branches")) {
                for (const auto& b : e.at("branches")) {
                    er.replace_branches.push_back(branch_from_json(b, where));
                }
            }
            er.note = e.value("note", std::string());
            c.errata.push_back(std::move(er));
        }
    }
    if (j.contains("notes")) {
        for (const auto& nline : j.at("notes")) c.notes.push_back(nline.get<std::string>());
    }

    // validation: every parameter used anywhere must be declared
    std::set<std::string> declared = c.param_set();
    auto check_params = [&](const MatExpr& m, const std::string& what) {
        std::vector<std::string> used;
        collect_params(m, used);
        for (const auto& u : used) {
            if (!declared.count(u)) {
                throw CorpusError(where + ": undeclared parameter " + u + " in " + what);
            }
        }
    };
    check_params(c.d, "d");
    check_params(c.c12, "c12");
    check_params(c.c21, "c21");
    check_params(c.c11, "c11");
    check_params(c.c22, "c22");
    if (c.perturbation) check_params(*c.perturbation, "perturbation");
    for (const auto& br : c.branches) {
        for (const auto& [p, e] : br.assigns) {
            if (!declared.count(p)) {
                throw CorpusError(where + ": branch assigns undeclared parameter " + p);
            }
            (void)e;
        }
    }

    // patterns must parse
    std::set<std::string> pset = c.param_set();
    try {
        if (c.r_pattern) pattern_spec_space(*c.r_pattern, pset, {});
    } catch (const UnboundParameter&) {
        // pattern coefficients may reference case parameters; checked at draw time
    } catch (const Error& e) {
        throw CorpusError(where + " R_pattern: " + e.what());
    }
    try {
        if (c.i_pattern) pattern_spec_space(*c.i_pattern, pset, {});
    } catch (const UnboundParameter&) {
    } catch (const Error& e) {
        throw CorpusError(where + " I_pattern: " + e.what());
    }
    return c;
}

Json case_to_json(const CaseSpec& c) {
    Json j;
    j["id"] = c.id;
    j["c12"] = c.c12_src;
    j["c21"] = c.c21_src;
    j["c11"] = c.c11_src;
    j["c22"] = c.c22_src;
    j["params"] = c.params;
    Json branches = Json::array();
    for (const auto& b : c.branches) branches.push_back(branch_to_json(b));
    j["branches"] = std::move(branches);
    j["dim_R"] = c.dim_R;
    j["dim_I"] = c.dim_I;
    j["R_pattern"] = c.r_pattern ? pattern_to_json(*c.r_pattern) : Json();
    j["I_pattern"] = c.i_pattern ? pattern_to_json(*c.i_pattern) : Json();
    j["perturbation"] = c.pert_src;
    if (!c.errata.empty()) {
        Json errata = Json::array();
        for (const auto& e : c.errata) {
            Json ej;
            ej["id"] = e.id;
            ej["field"] = e.field;
            if (!e.covers.empty()) ej["covers"] = e.covers;
            if (!e.corrected.is_null()) ej["corrected"] = e.corrected;
            if (!e.assigns.empty()) ej["assign"] = assigns_to_json(e.assigns);
            if (!e.replace_branches.empty()) {
                Json bs = Json::array();
                for (const auto& b : e.replace_branches) bs.push_back(branch_to_json(b));
                ej["branches"] = std::move(bs);
            }
            if (!e.note.empty()) ej["note"] = e.note;
            errata.push_back(std::move(ej));
        }
        j["errata"] = std::move(errata);
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

}  // namespace

std::vector<CaseSpec> load_family_json(const Json& j) {
    if (j.value("format", std::string()) != "qact-corpus-v1") {
        throw CorpusError("unknown corpus format (want qact-corpus-v1)");
    }
    int family = j.at("family").get<int>();
    std::string d_src = j.at("d").get<std::string>();
    std::vector<CaseSpec> out;
    for (const auto& cj : j.at("cases")) out.push_back(case_from_json(cj, family, d_src));
    return out;
}

std::vector<CaseSpec> load_family_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CorpusError("cannot open corpus file: " + path);
    Json j;
    try {
        j = Json::parse(f);
    } catch (const nlohmann::json::exception& e) {
        throw CorpusError(path + ": " + e.what());
    }
    return load_family_json(j);
}

Json family_to_json(int family, const std::string& d_src, const std::vector<CaseSpec>& cases) {
    Json j;
    j["format"] = "qact-corpus-v1";
    j["family"] = family;
    j["d"] = d_src;
    Json arr = Json::array();
    for (const auto& c : cases) arr.push_back(case_to_json(c));
    j["cases"] = std::move(arr);
    return j;
}

std::string family_file_text(int family, const std::string& d_src,
                             const std::vector<CaseSpec>& cases) {
    return family_to_json(family, d_src, cases).dump(2) + "\n";
}

Corpus load_corpus(const std::string& dir) {
    Corpus corpus;
    static const int kFamilySizes[7] = {8, 15, 20, 8, 4, 7, 18};
    for (int fam = 1; fam <= 7; ++fam) {
        std::string path = dir + "/family-" + std::to_string(fam) + "/cases.json";
        auto cases = load_family_file(path);
        int expected = kFamilySizes[fam - 1];
        if (static_cast<int>(cases.size()) != expected) {
            throw CorpusError("family " + std::to_string(fam) + " has " +
                              std::to_string(cases.size()) + " cases, expected " +
                              std::to_string(expected));
        }
        for (auto& c : cases) {
            if (c.family != fam) {
                throw CorpusError("case " + c.id + " in family file " + std::to_string(fam));
            }
            corpus.cases.push_back(std::move(c));
        }
    }
    if (corpus.cases.size() != 80) {
        throw CorpusError("corpus has " + std::to_string(corpus.cases.size()) +
                          " cases, expected 80");
    }
    std::set<std::string> ids;
    std::vector<std::string> with_pert;
    for (const auto& c : corpus.cases) {
        if (!ids.insert(c.id).second) throw CorpusError("duplicate case id " + c.id);
        if (c.has_nonzero_perturbation()) with_pert.push_back(c.id);
    }
    if (with_pert != std::vector<std::string>{"2.2", "2.8", "2.11"}) {
        std::string got;
        for (const auto& s : with_pert) got += s + " ";
        throw CorpusError("nonzero perturbation tags must be exactly 2.2, 2.8, 2.11; got " +
                          got);
    }
    return corpus;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mix_key(const CaseSpec& cs, int branch, std::uint64_t seed, int draw,
                      int attempt) {
    std::uint64_t h = seed;
    for (char ch : cs.id) h = h * 1099511628211ULL + static_cast<unsigned char>(ch);
    h = h * 1099511628211ULL + static_cast<std::uint64_t>(branch + 1);
    h = h * 1099511628211ULL + static_cast<std::uint64_t>(draw + 1);
    h = h * 1099511628211ULL + static_cast<std::uint64_t>(attempt + 1);
    return h;
}

// Small nonzero rationals, never 0 or +-1; numerators 2..19, denominators 1..3.
Rat draw_rational(std::uint64_t& state) {
    long num = 2 + static_cast<long>(splitmix64(state) % 18);
    long den = 1 + static_cast<long>(splitmix64(state) % 3);
    bool negative = (splitmix64(state) & 1) != 0;
    Rat r(negative ? -num : num, den);
    r.canonicalize();
    if (r == 1 || r == -1) r += (negative ? -1 : 1);
    return r;
}

}  // namespace

ParamEnv assign_params_with(const CaseSpec& cs, int branch, std::uint64_t seed, int draw,
                            const std::vector<std::pair<std::string, std::string>>& extra) {
    if (branch < 0 || branch >= static_cast<int>(cs.branches.size())) {
        throw CorpusError("case " + cs.id + ": branch index " + std::to_string(branch) +
                          " out of range");
    }
    const Branch& br = cs.branches[static_cast<std::size_t>(branch)];

    std::set<std::string> assigned;
    for (const auto& [p, e] : br.assigns) assigned.insert(p);
    for (const auto& [p, e] : extra) assigned.insert(p);

    for (int attempt = 0; attempt < 100; ++attempt) {
        std::uint64_t state = mix_key(cs, branch, seed, draw, attempt);
        ParamEnv env;
        std::set<std::string> used_values;
        bool ok = true;
        for (const auto& p : cs.params) {
            if (assigned.count(p)) continue;
            Rat v;
            for (int k = 0; k < 64; ++k) {
                v = draw_rational(state);
                if (!used_values.count(v.get_str())) break;
            }
            used_values.insert(v.get_str());
            env[p] = Scalar(Coeff(v));
        }
        try {
            for (const auto& [p, e] : br.assigns) env[p] = eval_expr(parse_expr(e), env);
            for (const auto& [p, e] : extra) env[p] = eval_expr(parse_expr(e), env);
        } catch (const Error&) {
            ok = false;
        }
        // drawn values are nonzero by construction; assigned values may be
        // explicitly zero
        if (ok) {
            for (const auto& [l, r] : br.nonequal) {
                Scalar lv = eval_expr(parse_expr(l), env);
                Scalar rv = eval_expr(parse_expr(r), env);
                if (lv == rv) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) return env;
    }
    throw CorpusError("case " + cs.id + ": branch " + std::to_string(branch) +
                      " constraints unsatisfiable after 100 attempts");
}

ParamEnv assign_params(const CaseSpec& cs, int branch, std::uint64_t seed, int draw) {
    return assign_params_with(cs, branch, seed, draw, {});
}

Pattern parse_pattern_spec_grid(const std::vector<std::vector<std::string>>& cells,
                                const std::set<std::string>& params) {
    return parse_pattern(cells, params);
}

Basis pattern_spec_space(const PatternSpec& spec, const std::set<std::string>& params,
                         const ParamEnv& env) {
    switch (spec.type) {
        case PatternSpec::Type::Scalars: {
            return rref_mats({Mat::identity(4)});
        }
        case PatternSpec::Type::Grid: {
            Pattern p = parse_pattern(spec.cells, params);
            return pattern_space(p, env);
        }
        case PatternSpec::Type::Kron: {
            Pattern left = parse_pattern(spec.kron_left, params);
            Pattern right = parse_pattern(spec.kron_right, params);
            Basis lb = pattern_space(left, env);
            Basis rb = pattern_space(right, env);
            std::vector<Mat> mats;
            for (const auto& a : lb.matrices()) {
                for (const auto& b : rb.matrices()) {
                    mats.push_back(spec.coarse == "left" ? kron(a, b) : kron(b, a));
                }
            }
            if (mats.empty()) return Basis(16);
            return rref_mats(mats);
        }
    }
    throw Error("unreachable");
}

}  // namespace qact
