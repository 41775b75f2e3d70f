#include "qact/report.hpp"

#include <iomanip>
#include <sstream>

namespace qact {

namespace {

Json branch_json(const BranchResult& b) {
    Json j;
    j["branch"] = b.branch;
    j["name"] = b.branch_name;
    j["envs"] = b.envs;
    Json rels = Json::array();
    for (const auto& r : b.relations) {
        Json rj;
        rj["name"] = r.name;
        rj["zero"] = r.zero;
        rels.push_back(std::move(rj));
    }
    j["relations"] = std::move(rels);
    j["dim_R"] = b.dim_R;
    j["dim_I"] = b.dim_I;
    j["rank_stable"] = b.rank_stable;
    j["R_pattern_match"] =
        b.r_pattern_match < 0 ? Json() : Json(b.r_pattern_match == 1);
    j["I_pattern_match"] =
        b.i_pattern_match < 0 ? Json() : Json(b.i_pattern_match == 1);
    j["perturbation"] = b.perturbation;
    j["perturbation_match"] = b.perturbation_match;
    j["det"] = b.det;
    j["det_equals_d"] = b.det_equals_d;
    j["invertible"] = b.invertible;
    return j;
}

}  // namespace

Json report_json(const VerifyRun& run, const DrawPlan& plan, const VerifyOptions& opts) {
    Json j;
    j["schema"] = "qact-report-v1";
    j["seed"] = plan.seed;
    j["draws"] = plan.draws;
    j["errata"] = opts.errata;
    j["convention"] = opts.flip_q ? "q-flipped" : "primary";
    Json cases = Json::array();
    for (const auto& r : run.reports) {
        Json cj;
        cj["id"] = r.id;
        cj["expected_dim_R"] = r.expected_dim_R;
        cj["expected_dim_I"] = r.expected_dim_I;
        Json printed = Json::array();
        for (const auto& b : r.printed) printed.push_back(branch_json(b));
        cj["printed"] = std::move(printed);
        if (!r.corrected.empty()) {
            Json corrected = Json::array();
            for (const auto& b : r.corrected) corrected.push_back(branch_json(b));
            cj["corrected"] = std::move(corrected);
            cj["corrected_clean"] = r.corrected_clean;
        }
        Json ds = Json::array();
        for (const auto& d : r.discrepancies) {
            Json dj;
            dj["kind"] = d.kind;
            dj["detail"] = d.detail;
            dj["covered"] = d.covered;
            if (!d.erratum_id.empty()) dj["erratum"] = d.erratum_id;
            ds.push_back(std::move(dj));
        }
        cj["discrepancies"] = std::move(ds);
        cj["reconciled"] = r.reconciled;
        cases.push_back(std::move(cj));
    }
    j["cases"] = std::move(cases);
    Json s;
    s["total"] = run.summary.total;
    s["reconciled"] = run.summary.reconciled;
    s["unexplained_discrepancies"] = run.summary.unexplained;
    s["dim_R_matches"] = run.summary.dim_R_matches;
    s["dim_I_matches"] = run.summary.dim_I_matches;
    s["perturbation_matches"] = run.summary.perturbation_matches;
    s["det_matches"] = run.summary.det_matches;
    s["cases_with_relation_failures"] = run.summary.relation_failures;
    j["summary"] = std::move(s);
    return j;
}

std::string report_text(const VerifyRun& run, const DrawPlan& plan,
                        const VerifyOptions& opts) {
    std::ostringstream out;
    out << "verification run: seed=" << plan.seed << " draws=" << plan.draws
        << " errata=" << (opts.errata ? "on" : "off")
        << " convention=" << (opts.flip_q ? "q-flipped" : "primary") << "\n\n";
    for (const auto& r : run.reports) {
        out << "case " << r.id << ": ";
        const BranchResult& b0 = r.printed.front();
        out << "dim R " << b0.dim_R << " (table " << r.expected_dim_R << "), dim I "
            << b0.dim_I << " (table " << r.expected_dim_I << "), relations "
            << (b0.relations_ok ? "ok" : "VIOLATED") << ", perturbation " << b0.perturbation
            << ", det " << (b0.det_equals_d ? "= d" : "!= d");
        if (r.printed.size() > 1) out << " [+" << r.printed.size() - 1 << " more branches]";
        out << "\n";
        for (const auto& d : r.discrepancies) {
            out << "    " << (d.covered ? "[erratum " + d.erratum_id + "] " : "[UNEXPLAINED] ")
                << d.kind << ": " << d.detail << "\n";
        }
        if (!r.corrected.empty()) {
            out << "    with errata applied: dim R " << r.corrected.front().dim_R << ", dim I "
                << r.corrected.front().dim_I << ", "
                << (r.corrected_clean ? "all checks pass" : "STILL FAILING") << "\n";
        }
    }
    out << "\nsummary: " << run.summary.reconciled << "/" << run.summary.total
        << " cases reconciled, " << run.summary.unexplained << " unexplained discrepancies\n"
        << "dim R matches (as printed): " << run.summary.dim_R_matches << "/"
        << run.summary.total << ", dim I matches: " << run.summary.dim_I_matches << "/"
        << run.summary.total << "\n";
    return out.str();
}

std::string table_text(const Corpus& corpus, const VerifyRun& run) {
    std::ostringstream out;
    out << std::left << std::setw(7) << "case" << std::setw(9) << "dim R" << std::setw(9)
        << "comp." << std::setw(9) << "dim I" << std::setw(9) << "comp." << std::setw(14)
        << "perturbation" << "status\n";
    for (std::size_t k = 0; k < corpus.cases.size(); ++k) {
        const CaseSpec& c = corpus.cases[k];
        const CaseReport& r = run.reports[k];
        const BranchResult& b0 = r.printed.front();
        out << std::left << std::setw(7) << c.id << std::setw(9) << c.dim_R << std::setw(9)
            << b0.dim_R << std::setw(9) << c.dim_I << std::setw(9) << b0.dim_I
            << std::setw(14) << (c.pert_src == "zero" ? "zero" : "nonzero")
            << (r.reconciled ? (r.discrepancies.empty() ? "ok" : "errata") : "UNEXPLAINED")
            << "\n";
    }
    return out.str();
}

}  // namespace qact
