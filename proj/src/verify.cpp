#include "qact/verify.hpp"

#include <atomic>
#include <thread>

namespace qact {

std::string render_mat(const Mat& m) {
    std::string out;
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = 1; j <= m.n(); ++j) {
            const Scalar& s = m.at(i, j);
            if (s.is_zero()) continue;
            std::string cs = s.str();
            std::string term;
            if (cs == "1") {
                term = "e(" + std::to_string(i) + "," + std::to_string(j) + ")";
            } else if (cs == "-1") {
                term = "-e(" + std::to_string(i) + "," + std::to_string(j) + ")";
            } else {
                bool atomic = cs.find_first_of("+- ") == std::string::npos ||
                              (cs[0] == '-' && cs.find_first_of("+- ", 1) == std::string::npos);
                term = (atomic ? cs : "(" + cs + ")") + "*e(" + std::to_string(i) + "," +
                       std::to_string(j) + ")";
            }
            if (out.empty()) {
                out = term;
            } else if (term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
    }
    return out.empty() ? "0" : out;
}

DetCheck det_check(const CaseSpec& cs, const ParamEnv& env) {
    Mat c11 = eval_matrix(cs.c11, env);
    Mat c22 = eval_matrix(cs.c22, env);
    Mat c12 = eval_matrix(cs.c12, env);
    Mat c21 = eval_matrix(cs.c21, env);
    Mat d = eval_matrix(cs.d, env);
    Mat computed = c11 * c22 - c12 * c21;
    bool equal = computed == d;
    return DetCheck{std::move(computed), equal};
}

namespace {

std::string render_env(const CaseSpec& cs, const ParamEnv& env) {
    std::string out;
    for (const auto& p : cs.params) {
        auto it = env.find(p);
        if (it == env.end()) continue;
        if (!out.empty()) out += ", ";
        out += p + "=" + it->second.str();
    }
    return out;
}

struct Expectations {
    int dim_R;
    int dim_I;
    std::optional<PatternSpec> r_pattern;
    std::optional<PatternSpec> i_pattern;
    std::optional<MatExpr> perturbation;  // nullopt = zero expected
};

Expectations printed_expectations(const CaseSpec& cs) {
    return Expectations{cs.dim_R, cs.dim_I, cs.r_pattern, cs.i_pattern, cs.perturbation};
}

Expectations corrected_expectations(const CaseSpec& cs) {
    Expectations e = printed_expectations(cs);
    for (const auto& er : cs.errata) {
        if (er.corrected.is_null()) continue;
        if (er.field == "dim_R") {
            e.dim_R = er.corrected.get<int>();
        } else if (er.field == "dim_I") {
            e.dim_I = er.corrected.get<int>();
        } else if (er.field == "R_pattern" || er.field == "I_pattern") {
            PatternSpec p;
            if (er.corrected.is_string() && er.corrected.get<std::string>() == "scalars") {
                p.type = PatternSpec::Type::Scalars;
            } else if (er.corrected.is_object() && er.corrected.contains("kron")) {
                p.type = PatternSpec::Type::Kron;
                const Json& k = er.corrected.at("kron");
                for (const auto& row : k.at("left")) {
                    std::vector<std::string> r;
                    for (const auto& c : row) r.push_back(c.get<std::string>());
                    p.kron_left.push_back(std::move(r));
                }
                for (const auto& row : k.at("right")) {
                    std::vector<std::string> r;
                    for (const auto& c : row) r.push_back(c.get<std::string>());
                    p.kron_right.push_back(std::move(r));
                }
                p.coarse = k.at("coarse").get<std::string>();
            } else {
                p.type = PatternSpec::Type::Grid;
                for (const auto& row : er.corrected) {
                    std::vector<std::string> r;
                    for (const auto& c : row) r.push_back(c.get<std::string>());
                    p.cells.push_back(std::move(r));
                }
            }
            if (er.field == "R_pattern") {
                e.r_pattern = p;
            } else {
                e.i_pattern = p;
            }
        } else if (er.field == "perturbation") {
            std::string src = er.corrected.get<std::string>();
            if (src == "zero") {
                e.perturbation.reset();
            } else {
                e.perturbation = parse_matrix(src);
            }
        }
    }
    return e;
}

std::vector<std::pair<std::string, std::string>> errata_assigns(const CaseSpec& cs) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& er : cs.errata) {
        for (const auto& a : er.assigns) out.push_back(a);
    }
    return out;
}

// The case with generator-correction and branch-replacement errata applied.
CaseSpec corrected_case(const CaseSpec& cs) {
    CaseSpec c = cs;
    for (const auto& er : cs.errata) {
        if (!er.corrected.is_null() && er.corrected.is_string()) {
            std::string src = er.corrected.get<std::string>();
            if (er.field == "c11") {
                c.c11_src = src;
                c.c11 = parse_matrix(src);
            } else if (er.field == "c12") {
                c.c12_src = src;
                c.c12 = parse_matrix(src);
            } else if (er.field == "c21") {
                c.c21_src = src;
                c.c21 = parse_matrix(src);
            } else if (er.field == "c22") {
                c.c22_src = src;
                c.c22 = parse_matrix(src);
            } else if (er.field == "d") {
                c.d_src = src;
                c.d = parse_matrix(src);
            }
        }
        if (!er.replace_branches.empty()) c.branches = er.replace_branches;
    }
    return c;
}

BranchResult run_branch(const CaseSpec& cs, int branch, const DrawPlan& plan,
                        const std::vector<Relation>& rels, const Expectations& want,
                        const std::vector<std::pair<std::string, std::string>>& extra) {
    BranchResult r;
    r.branch = branch;
    r.branch_name = cs.branches[static_cast<std::size_t>(branch)].name;
    r.relations.clear();
    for (const auto& rel : rels) r.relations.push_back(RelationOutcome{rel.name, true});
    r.rank_stable = true;
    r.r_pattern_match = want.r_pattern ? 1 : -1;
    r.i_pattern_match = want.i_pattern ? 1 : -1;
    r.perturbation_match = true;
    r.det_equals_d = true;
    r.invertible = true;

    std::set<std::string> pset = cs.param_set();
    int prev_dim_R = -1, prev_dim_I = -1;

    for (int draw = 0; draw < plan.draws; ++draw) {
        ParamEnv env = assign_params_with(cs, branch, plan.seed, draw, extra);
        r.envs.push_back(render_env(cs, env));

        Assignment asg;
        asg[GenSymbol::c11] = eval_matrix(cs.c11, env);
        asg[GenSymbol::c12] = eval_matrix(cs.c12, env);
        asg[GenSymbol::c21] = eval_matrix(cs.c21, env);
        asg[GenSymbol::c22] = eval_matrix(cs.c22, env);
        Mat d = eval_matrix(cs.d, env);

        auto statuses = check_all(rels, asg);
        for (std::size_t k = 0; k < statuses.size(); ++k) {
            if (!statuses[k].is_zero) r.relations[k].zero = false;
        }

        Basis closure = unital_closure(
            {asg[GenSymbol::c11], asg[GenSymbol::c12], asg[GenSymbol::c21],
             asg[GenSymbol::c22]});
        Basis inv = centralizer(closure);
        int dim_R = closure.dim();
        int dim_I = inv.dim();
        if (draw == 0) {
            r.dim_R = dim_R;
            r.dim_I = dim_I;
        } else if (dim_R != prev_dim_R || dim_I != prev_dim_I) {
            r.rank_stable = false;
            r.dim_R = std::max(r.dim_R, dim_R);
            r.dim_I = std::max(r.dim_I, dim_I);
        }
        prev_dim_R = dim_R;
        prev_dim_I = dim_I;

        if (want.r_pattern && r.r_pattern_match != 0) {
            try {
                Basis ps = pattern_spec_space(*want.r_pattern, pset, env);
                if (!subspace_equal(closure, ps)) r.r_pattern_match = 0;
            } catch (const Error&) {
                r.r_pattern_match = 0;
            }
        }
        if (want.i_pattern && r.i_pattern_match != 0) {
            try {
                Basis ps = pattern_spec_space(*want.i_pattern, pset, env);
                if (!subspace_equal(inv, ps)) r.i_pattern_match = 0;
            } catch (const Error&) {
                r.i_pattern_match = 0;
            }
        }

        Mat pert = asg[GenSymbol::c12] * asg[GenSymbol::c21];
        if (draw == 0) r.perturbation = render_mat(pert);
        Mat expected_pert(4);
        if (want.perturbation) expected_pert = eval_matrix(*want.perturbation, env);
        if (pert != expected_pert) r.perturbation_match = false;

        Mat det = asg[GenSymbol::c11] * asg[GenSymbol::c22] -
                  asg[GenSymbol::c12] * asg[GenSymbol::c21];
        if (draw == 0) r.det = render_mat(det);
        if (det != d) r.det_equals_d = false;

        if (!asg[GenSymbol::c11].is_invertible() || !asg[GenSymbol::c22].is_invertible() ||
            !d.is_invertible()) {
            r.invertible = false;
        }
    }

    r.relations_ok = true;
    for (const auto& rel : r.relations) {
        if (!rel.zero) r.relations_ok = false;
    }
    return r;
}

void compare_against(const CaseSpec& cs, const std::vector<BranchResult>& branches,
                     const Expectations& want, std::vector<Discrepancy>& out) {
    for (const auto& b : branches) {
        std::string tag = " [branch " + std::to_string(b.branch) + "]";
        for (const auto& rel : b.relations) {
            if (!rel.zero) {
                out.push_back(
                    Discrepancy{"relation", rel.name + " residual nonzero" + tag});
            }
        }
        if (!b.rank_stable) {
            out.push_back(Discrepancy{"rank_instability",
                                      "computed dimensions vary across draws" + tag});
        }
        if (b.dim_R != want.dim_R) {
            out.push_back(Discrepancy{
                "dim_R", "table dim R " + std::to_string(want.dim_R) + ", computed " +
                             std::to_string(b.dim_R) + tag});
        }
        if (b.dim_I != want.dim_I) {
            out.push_back(Discrepancy{
                "dim_I", "table dim I " + std::to_string(want.dim_I) + ", computed " +
                             std::to_string(b.dim_I) + tag});
        }
        if (b.r_pattern_match == 0) {
            out.push_back(
                Discrepancy{"R_pattern", "computed R differs from tabulated shape" + tag});
        }
        if (b.i_pattern_match == 0) {
            out.push_back(
                Discrepancy{"I_pattern", "computed I differs from tabulated shape" + tag});
        }
        if (!b.perturbation_match) {
            out.push_back(Discrepancy{"perturbation",
                                      "C12*C21 = " + b.perturbation + " does not match" + tag});
        }
        if (!b.det_equals_d) {
            out.push_back(Discrepancy{
                "det", "C11*C22 - C12*C21 = " + b.det + " differs from d" + tag});
        }
        if (!b.invertible) {
            out.push_back(Discrepancy{"invertibility",
                                      "C11, C22 or d not invertible" + tag});
        }
    }
    (void)cs;
}

void mark_coverage(const CaseSpec& cs, std::vector<Discrepancy>& ds) {
    for (auto& d : ds) {
        for (const auto& er : cs.errata) {
            for (const auto& k : er.covers) {
                if (k == d.kind) {
                    d.covered = true;
                    d.erratum_id = er.id;
                    break;
                }
            }
            if (d.covered) break;
        }
    }
}

}  // namespace

CaseReport verify_case(const CaseSpec& cs, const DrawPlan& plan,
                       const std::vector<Relation>& rels, const VerifyOptions& opts) {
    std::vector<Relation> active = opts.flip_q ? flip_q_convention(rels) : rels;
    CaseReport report;
    report.id = cs.id;
    report.expected_dim_R = cs.dim_R;
    report.expected_dim_I = cs.dim_I;

    Expectations printed = printed_expectations(cs);
    for (int b = 0; b < static_cast<int>(cs.branches.size()); ++b) {
        report.printed.push_back(run_branch(cs, b, plan, active, printed, {}));
    }
    compare_against(cs, report.printed, printed, report.discrepancies);
    mark_coverage(cs, report.discrepancies);

    if (opts.errata && !cs.errata.empty()) {
        CaseSpec fixed = corrected_case(cs);
        Expectations corrected = corrected_expectations(cs);
        auto extra = errata_assigns(cs);
        for (int b = 0; b < static_cast<int>(fixed.branches.size()); ++b) {
            report.corrected.push_back(run_branch(fixed, b, plan, active, corrected, extra));
        }
        std::vector<Discrepancy> residue;
        compare_against(fixed, report.corrected, corrected, residue);
        report.corrected_clean = residue.empty();
        if (!report.corrected_clean) {
            for (auto& d : residue) {
                report.discrepancies.push_back(Discrepancy{
                    "erratum_failure", "after errata: " + d.kind + ": " + d.detail});
            }
        }
    }

    report.reconciled = true;
    for (const auto& d : report.discrepancies) {
        if (!d.covered) report.reconciled = false;
    }
    return report;
}

VerifyRun verify_all(const Corpus& corpus, const DrawPlan& plan,
                     const std::vector<Relation>& rels, const VerifyOptions& opts, int jobs) {
    VerifyRun run;
    run.reports.resize(corpus.cases.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t k = 0; k < corpus.cases.size(); ++k) {
            run.reports[k] = verify_case(corpus.cases[k], plan, rels, opts);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                std::size_t k = next.fetch_add(1);
                if (k >= corpus.cases.size()) return;
                run.reports[k] = verify_case(corpus.cases[k], plan, rels, opts);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    auto& s = run.summary;
    s.total = static_cast<int>(run.reports.size());
    for (std::size_t k = 0; k < run.reports.size(); ++k) {
        const CaseReport& r = run.reports[k];
        if (r.reconciled) ++s.reconciled;
        bool dim_R_ok = true, dim_I_ok = true, pert_ok = true, det_ok = true, rel_ok = true;
        for (const auto& d : r.discrepancies) {
            if (!d.covered) ++s.unexplained;
            if (d.kind == "dim_R") dim_R_ok = false;
            if (d.kind == "dim_I") dim_I_ok = false;
            if (d.kind == "perturbation") pert_ok = false;
            if (d.kind == "det") det_ok = false;
            if (d.kind == "relation") rel_ok = false;
        }
        if (dim_R_ok) ++s.dim_R_matches;
        if (dim_I_ok) ++s.dim_I_matches;
        if (pert_ok) ++s.perturbation_matches;
        if (det_ok) ++s.det_matches;
        if (!rel_ok) ++s.relation_failures;
    }
    return run;
}

}  // namespace qact
