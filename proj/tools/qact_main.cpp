#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qact/clifford.hpp"
#include "qact/report.hpp"

namespace {

std::string default_root() {
    if (const char* env = std::getenv("QACT_CORPUS_DIR")) return env;
#ifdef QACT_REPO_ROOT
    return QACT_REPO_ROOT "/corpus";
#else
    return "corpus";
#endif
}

std::string default_relations() {
    if (const char* env = std::getenv("QACT_RELATIONS")) return env;
#ifdef QACT_REPO_ROOT
    return QACT_REPO_ROOT "/relations/dipper-donkin-gl2";
#else
    return "relations/dipper-donkin-gl2";
#endif
}

void emit(const std::string& text, const std::string& output) {
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(output);
        f << text;
    }
}

qact::Corpus filtered(const qact::Corpus& corpus, const std::string& case_id, int family) {
    if (case_id.empty() && family == 0) return corpus;
    qact::Corpus out;
    for (const auto& c : corpus.cases) {
        if (!case_id.empty() && c.id != case_id) continue;
        if (family != 0 && c.family != family) continue;
        out.cases.push_back(c);
    }
    if (out.cases.empty()) {
        throw qact::CorpusError(case_id.empty()
                                    ? "no cases in family " + std::to_string(family)
                                    : "unknown case id " + case_id);
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact recomputation of the GL2 inner-action classification on C(1,3)"};
    app.require_subcommand(1);

    std::string corpus_dir = default_root();
    std::string relations_path = default_relations();
    app.add_option("--corpus", corpus_dir, "corpus directory");
    app.add_option("--relations", relations_path, "relation file");

    std::string case_id;
    int family = 0;
    int draws = 3;
    std::uint64_t seed = 20250801;
    bool errata = false;
    bool flip = false;
    std::string format = "text";
    std::string output;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--case", case_id, "single case id, e.g. 2.2");
        cmd->add_option("--family", family, "restrict to one family 1..7");
        cmd->add_option("--draws", draws, "parameter draws per branch")->check(CLI::Range(1, 64));
        cmd->add_option("--seed", seed, "draw seed");
        cmd->add_flag("--errata", errata, "re-run failing checks under corrected constraints");
        cmd->add_flag("--flip-q", flip, "use the q <-> 1/q relation convention");
        cmd->add_option("--format", format, "text|json")->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--output", output, "write report to file");
        cmd->add_option("--jobs", jobs, "parallel case verifications")->check(CLI::Range(1, 64));
    };

    CLI::App* verify = app.add_subcommand("verify", "verify cases against the table");
    verify->add_flag("--all", "verify the whole corpus (default)");
    add_common(verify);

    CLI::App* table = app.add_subcommand("table", "print the dim R / dim I summary table");
    add_common(table);

    CLI::App* clifford = app.add_subcommand("clifford-check",
                                            "gamma-matrix certificate for C(1,3) = M4");
    clifford->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    clifford->add_option("--output", output, "write certificate to file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (clifford->parsed()) {
            qact::GammaSet gs = qact::build_dirac();
            bool anti = qact::check_anticommutation(gs);
            int rank = 0;
            bool complete = false;
            std::string complete_err;
            try {
                rank = qact::clifford_basis(gs).dim();
                complete = (rank == 16);
            } catch (const qact::DegenerateGammaSet& e) {
                complete_err = e.what();
            }
            bool ok = anti && complete;
            if (format == "json") {
                qact::Json j;
                j["schema"] = "qact-clifford-v1";
                j["anticommutation"] = anti;
                j["product_rank"] = rank;
                j["complete"] = complete;
                j["ok"] = ok;
                emit(j.dump(2) + "\n", output);
            } else {
                std::string text;
                text += "anticommutation {g_mu, g_nu} = 2 eta I: ";
                text += anti ? "ok\n" : "FAILED\n";
                text += "canonical products rank " + std::to_string(rank) + " / 16: ";
                text += complete ? "ok\n" : ("FAILED " + complete_err + "\n");
                emit(text, output);
            }
            return ok ? 0 : 1;
        }

        qact::Corpus corpus = qact::load_corpus(corpus_dir);
        qact::Corpus selected = filtered(corpus, case_id, family);
        auto rels = qact::load_relations(relations_path);
        qact::DrawPlan plan{seed, draws};
        qact::VerifyOptions opts;
        opts.errata = errata;
        opts.flip_q = flip;

        qact::VerifyRun run = qact::verify_all(selected, plan, rels, opts, jobs);
        if (table->parsed()) {
            emit(qact::table_text(selected, run), output);
        } else if (format == "json") {
            emit(qact::report_json(run, plan, opts).dump(2) + "\n", output);
        } else {
            emit(qact::report_text(run, plan, opts), output);
        }
        return run.summary.unexplained == 0 ? 0 : 1;
    } catch (const qact::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
}
