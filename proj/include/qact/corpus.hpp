#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qact/algebra.hpp"
#include "qact/mat.hpp"

namespace qact {

using Json = nlohmann::ordered_json;

// A constraint branch: ordered parameter assignments (expressions over q and
// previously drawn parameters) plus inequations that every draw must satisfy.
struct Branch {
    std::string name;
    std::vector<std::pair<std::string, std::string>> assigns;  // param -> expr source
    std::vector<std::pair<std::string, std::string>> nonequal;  // expr != expr
};

// Shape of the printed operator/invariant algebra: a 4x4 grid pattern, a
// Kronecker product of two 2x2 patterns, or the scalar matrices.
struct PatternSpec {
    enum class Type { Grid, Kron, Scalars };
    Type type = Type::Grid;
    std::vector<std::vector<std::string>> cells;                 // Grid
    std::vector<std::vector<std::string>> kron_left, kron_right;  // Kron
    std::string coarse;  // "left" or "right": which factor carries the block level
};

// Machine-checked annotation for a table entry that disagrees with the
// recomputation. `covers` lists the discrepancy kinds it explains. A value
// erratum carries a corrected expectation (or generator source for fields
// c11/c12/c21/c22/d); a constraint erratum carries extra parameter
// assignments or replacement branches that restore agreement.
struct Erratum {
    std::string id;
    std::string field;
    std::vector<std::string> covers;
    Json corrected;  // null when not a value correction
    std::vector<std::pair<std::string, std::string>> assigns;
    std::vector<Branch> replace_branches;
    std::string note;
};

struct CaseSpec {
    std::string id;
    int family = 0;
    std::string d_src, c12_src, c21_src, c11_src, c22_src;
    MatExpr d, c12, c21, c11, c22;
    std::vector<std::string> params;
    std::vector<Branch> branches;
    int dim_R = 0;
    int dim_I = 0;
    std::optional<PatternSpec> r_pattern;
    std::optional<PatternSpec> i_pattern;
    std::string pert_src;  // "zero" or a matrix expression
    std::optional<MatExpr> perturbation;
    std::vector<Erratum> errata;
    std::vector<std::string> notes;

    std::set<std::string> param_set() const {
        return std::set<std::string>(params.begin(), params.end());
    }
    bool has_nonzero_perturbation() const { return perturbation.has_value(); }
};

struct Corpus {
    std::vector<CaseSpec> cases;
    const CaseSpec* find(const std::string& id) const;
    std::vector<const CaseSpec*> family(int fam) const;
};

// One corpus file holds one family.
std::vector<CaseSpec> load_family_json(const Json& j);
std::vector<CaseSpec> load_family_file(const std::string& path);
Json family_to_json(int family, const std::string& d_src,
                    const std::vector<CaseSpec>& cases);
std::string family_file_text(int family, const std::string& d_src,
                             const std::vector<CaseSpec>& cases);

// Loads corpus/family-N/cases.json for N = 1..7 and validates the whole
// corpus (unique ids, case count, family sizes, declared parameters,
// perturbation tags).
Corpus load_corpus(const std::string& dir);

struct DrawPlan {
    std::uint64_t seed = 20250801;
    int draws = 3;
};

// Deterministic parameter assignment for (case, branch, seed, draw): free
// parameters get distinct small nonzero rationals (never 0 or +-1), assigned
// parameters are evaluated from their expressions, and every inequation is
// checked. Draws that violate a constraint advance deterministically.
ParamEnv assign_params(const CaseSpec& cs, int branch, std::uint64_t seed, int draw);

// Extra assignments appended by constraint errata (applied after the draw).
ParamEnv assign_params_with(const CaseSpec& cs, int branch, std::uint64_t seed, int draw,
                            const std::vector<std::pair<std::string, std::string>>& extra);

Pattern parse_pattern_spec_grid(const std::vector<std::vector<std::string>>& cells,
                                const std::set<std::string>& params);

// Span of the pattern at env; for Kron patterns the space is spanned by the
// Kronecker products of the two factor spaces, with `coarse` naming the
// factor that carries the block structure.
Basis pattern_spec_space(const PatternSpec& spec, const std::set<std::string>& params,
                         const ParamEnv& env);

}  // namespace qact
