#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qact/report.hpp"
#include "qact/verify.hpp"

using namespace qact;

namespace {
const char* kRoot = QACT_REPO_ROOT;
Corpus shipped() { return load_corpus(std::string(kRoot) + "/corpus"); }
std::vector<Relation> rels() {
    return load_relations(std::string(kRoot) + "/relations/dipper-donkin-gl2");
}
}  // namespace

TEST_CASE("case 2.2 reproduces the tabulated row exactly") {
    Corpus c = shipped();
    CaseReport r = verify_case(*c.find("2.2"), DrawPlan{1, 3}, rels());
    REQUIRE(r.printed.size() == 1);
    const BranchResult& b = r.printed[0];
    CHECK(b.relations_ok);
    CHECK(b.dim_R == 9);
    CHECK(b.dim_I == 1);
    CHECK(b.rank_stable);
    CHECK(b.r_pattern_match == 0);  // the printed kron factors do not match
    CHECK(b.i_pattern_match == 1);
    CHECK(b.perturbation_match);
    CHECK(b.det_equals_d);
    CHECK(b.invertible);
}

TEST_CASE("case 7.17 is fully consistent as printed") {
    Corpus c = shipped();
    CaseReport r = verify_case(*c.find("7.17"), DrawPlan{1, 3}, rels());
    CHECK(r.discrepancies.empty());
    CHECK(r.reconciled);
    CHECK(r.printed[0].dim_R == 4);
    CHECK(r.printed[0].dim_I == 4);
    CHECK(r.printed[0].det_equals_d);
}

TEST_CASE("case 2.7 diagonal family row matches") {
    Corpus c = shipped();
    CaseReport r = verify_case(*c.find("2.7"), DrawPlan{5, 3}, rels());
    CHECK(r.printed[0].dim_R == 3);
    CHECK(r.printed[0].dim_I == 6);
    CHECK(r.printed[0].relations_ok);
    CHECK(r.printed[0].det_equals_d);
    CHECK(r.discrepancies.empty());
}

TEST_CASE("case 3.15 matches including both patterns") {
    Corpus c = shipped();
    CaseReport r = verify_case(*c.find("3.15"), DrawPlan{5, 3}, rels());
    CHECK(r.printed[0].dim_R == 5);
    CHECK(r.printed[0].dim_I == 3);
    CHECK(r.printed[0].r_pattern_match == 1);
    CHECK(r.printed[0].i_pattern_match == 1);
    CHECK(r.discrepancies.empty());
}

TEST_CASE("det examples") {
    Corpus c = shipped();
    SUBCASE("1.3: diagonal product") {
        ParamEnv env = assign_params(*c.find("1.3"), 0, 3, 0);
        DetCheck dc = det_check(*c.find("1.3"), env);
        CHECK(dc.equals_d);
        CHECK(dc.computed == eval_matrix(c.find("1.3")->d, env));
    }
    SUBCASE("2.8: the e32 terms cancel") {
        ParamEnv env = assign_params(*c.find("2.8"), 0, 3, 0);
        DetCheck dc = det_check(*c.find("2.8"), env);
        CHECK(dc.equals_d);
        Mat d = eval_matrix(c.find("2.8")->d, env);
        CHECK(dc.computed == d);
        CHECK(d.at(2, 3).is_zero());
    }
    SUBCASE("6.1 as printed fails; the erratum constraint restores it") {
        const CaseSpec& c61 = *c.find("6.1");
        ParamEnv env = assign_params(c61, 0, 3, 0);
        CHECK_FALSE(det_check(c61, env).equals_d);
        ParamEnv fixed = assign_params_with(c61, 0, 3, 0, {{"d_", "q*g"}});
        CHECK(fixed.at("d_") == fixed.at("g") * Scalar::q());
        CHECK(det_check(c61, fixed).equals_d);
    }
}

TEST_CASE("6.1 discrepancies are recorded and covered") {
    Corpus c = shipped();
    VerifyOptions opts;
    opts.errata = true;
    CaseReport r = verify_case(*c.find("6.1"), DrawPlan{1, 3}, rels(), opts);
    bool saw_det = false, saw_rel = false;
    for (const auto& d : r.discrepancies) {
        if (d.kind == "det") saw_det = true;
        if (d.kind == "relation") saw_rel = true;
        CHECK(d.covered);
    }
    CHECK(saw_det);
    CHECK(saw_rel);
    CHECK(r.corrected_clean);
    CHECK(r.reconciled);
}

TEST_CASE("centralizer of the closure equals centralizer of the generators") {
    Corpus c = shipped();
    for (const char* id : {"1.1", "2.2", "3.5", "4.6", "5.2", "6.3", "7.9"}) {
        const CaseSpec& cs = *c.find(id);
        ParamEnv env = assign_params(cs, 0, 9, 0);
        std::vector<Mat> gens = {eval_matrix(cs.c11, env), eval_matrix(cs.c12, env),
                                 eval_matrix(cs.c21, env), eval_matrix(cs.c22, env)};
        Basis closure = unital_closure(gens);
        Basis cent_closure = centralizer(closure);
        Basis cent_gens = centralizer(rref_mats(gens));
        CAPTURE(id);
        CHECK(subspace_equal(cent_closure, cent_gens));
        // the invariants always contain the scalars
        CHECK(cent_closure.dim() >= 1);
        CHECK(cent_closure.contains(Mat::identity(4)));
    }
}

TEST_CASE("dimensions are stable across draws") {
    Corpus c = shipped();
    for (const char* id : {"1.5", "2.1", "3.18", "7.13"}) {
        CaseReport r = verify_case(*c.find(id), DrawPlan{77, 4}, rels());
        CAPTURE(id);
        for (const auto& b : r.printed) CHECK(b.rank_stable);
    }
}

TEST_CASE("tampered generators trip the relation checker") {
    Corpus c = shipped();
    CaseSpec broken = *c.find("1.1");
    broken.c12_src = "a*e(2,1)";
    broken.c12 = parse_matrix(broken.c12_src);
    CaseReport r = verify_case(broken, DrawPlan{1, 2}, rels());
    CHECK_FALSE(r.printed[0].relations_ok);
    bool saw_rel = false;
    for (const auto& d : r.discrepancies) {
        if (d.kind == "relation" && !d.covered) saw_rel = true;
    }
    CHECK(saw_rel);
    CHECK_FALSE(r.reconciled);
}

TEST_CASE("json report is deterministic for a fixed seed") {
    Corpus c = shipped();
    Corpus two;
    two.cases.push_back(*c.find("2.2"));
    two.cases.push_back(*c.find("7.17"));
    DrawPlan plan{123, 3};
    VerifyOptions opts;
    auto rl = rels();
    Json a = report_json(verify_all(two, plan, rl, opts), plan, opts);
    Json b = report_json(verify_all(two, plan, rl, opts, /*jobs=*/2), plan, opts);
    CHECK(a.dump(2) == b.dump(2));
}
