#pragma once

#include "qact/corpus.hpp"
#include "qact/presentation.hpp"

namespace qact {

struct Discrepancy {
    std::string kind;     // relation | dim_R | dim_I | R_pattern | I_pattern |
                          // perturbation | det | invertibility | rank_instability
    std::string detail;
    bool covered = false;
    std::string erratum_id;
};

struct RelationOutcome {
    std::string name;
    bool zero = false;  // residual vanished on every draw
};

// Checks for one branch, aggregated over the plan's draws.
struct BranchResult {
    int branch = 0;
    std::string branch_name;
    std::vector<std::string> envs;  // one rendered assignment per draw
    std::vector<RelationOutcome> relations;
    bool relations_ok = false;
    int dim_R = 0;
    int dim_I = 0;
    bool rank_stable = true;
    int r_pattern_match = -1;  // 1 match, 0 mismatch, -1 not encoded
    int i_pattern_match = -1;
    std::string perturbation;  // rendered computed C12*C21 from the first draw
    bool perturbation_match = false;
    bool det_equals_d = false;
    std::string det;  // rendered computed C11*C22 - C12*C21 from the first draw
    bool invertible = false;
};

struct CaseReport {
    std::string id;
    int expected_dim_R = 0;
    int expected_dim_I = 0;
    std::vector<BranchResult> printed;    // the case exactly as tabulated
    std::vector<BranchResult> corrected;  // with errata applied (errata mode only)
    std::vector<Discrepancy> discrepancies;
    bool corrected_clean = false;  // errata run agreed with corrected expectations
    bool reconciled = false;       // no uncovered discrepancy
};

struct VerifyOptions {
    bool errata = false;       // also run the corrected variant
    bool flip_q = false;       // evaluate relations with q -> 1/q
};

struct DetCheck {
    Mat computed;
    bool equals_d;
};

// The quantum determinant hypothesis: C11*C22 - C12*C21 against the family d.
DetCheck det_check(const CaseSpec& cs, const ParamEnv& env);

CaseReport verify_case(const CaseSpec& cs, const DrawPlan& plan,
                       const std::vector<Relation>& rels, const VerifyOptions& opts = {});

struct VerifySummary {
    int total = 0;
    int reconciled = 0;
    int unexplained = 0;
    int dim_R_matches = 0;
    int dim_I_matches = 0;
    int perturbation_matches = 0;
    int det_matches = 0;
    int relation_failures = 0;
};

struct VerifyRun {
    std::vector<CaseReport> reports;
    VerifySummary summary;
};

VerifyRun verify_all(const Corpus& corpus, const DrawPlan& plan,
                     const std::vector<Relation>& rels, const VerifyOptions& opts = {},
                     int jobs = 1);

// Renders a matrix as a sum of coeff*e(i,j) terms ("0" when zero).
std::string render_mat(const Mat& m);

}  // namespace qact
