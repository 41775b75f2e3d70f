#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qact/corpus.hpp"

using namespace qact;

namespace {
const char* kRoot = QACT_REPO_ROOT;
Corpus shipped() { return load_corpus(std::string(kRoot) + "/corpus"); }
}  // namespace

TEST_CASE("shipped corpus loads and validates") {
    Corpus c = shipped();
    CHECK(c.cases.size() == 80);
    int sizes[7] = {8, 15, 20, 8, 4, 7, 18};
    for (int fam = 1; fam <= 7; ++fam) {
        CHECK(static_cast<int>(c.family(fam).size()) == sizes[fam - 1]);
    }
    CHECK(c.find("3.17") != nullptr);
    CHECK(c.find("9.9") == nullptr);
    // perturbation tags live on exactly 2.2, 2.8, 2.11 (validated at load)
    CHECK(c.find("2.2")->has_nonzero_perturbation());
    CHECK(c.find("2.8")->has_nonzero_perturbation());
    CHECK(c.find("2.11")->has_nonzero_perturbation());
    CHECK_FALSE(c.find("1.1")->has_nonzero_perturbation());
}

TEST_CASE("loader rejects malformed corpora") {
    Json fam;
    fam["format"] = "qact-corpus-v1";
    fam["family"] = 1;
    fam["d"] = "q*e(1,1)";
    Json good;
    good["id"] = "1.1";
    good["c12"] = "a*e(1,2)";
    good["c21"] = "0";
    good["c11"] = "e(1,1)+e(2,2)+e(3,3)+e(4,4)";
    good["c22"] = "q*e(1,1)+e(2,2)+e(3,3)+e(4,4)";
    good["params"] = Json::array({"a"});
    good["dim_R"] = 3;
    good["dim_I"] = 2;
    good["R_pattern"] = Json();
    good["I_pattern"] = "scalars";
    good["perturbation"] = "zero";
    fam["cases"] = Json::array({good});
    CHECK(load_family_json(fam).size() == 1);

    Json undeclared = fam;
    undeclared["cases"][0]["c12"] = "zz*e(1,2)";
    CHECK_THROWS_AS(load_family_json(undeclared), CorpusError);

    Json badexpr = fam;
    badexpr["cases"][0]["c21"] = "a*e(1,";
    CHECK_THROWS_AS(load_family_json(badexpr), CorpusError);

    Json badformat = fam;
    badformat["format"] = "something-else";
    CHECK_THROWS_AS(load_family_json(badformat), CorpusError);
}

TEST_CASE("save/load round trip is byte identical") {
    for (int fam = 1; fam <= 7; ++fam) {
        std::string path =
            std::string(kRoot) + "/corpus/family-" + std::to_string(fam) + "/cases.json";
        auto cases = load_family_file(path);
        std::ifstream in(path);
        std::string original((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
        Json j = Json::parse(original);
        std::string rewritten = family_file_text(fam, j.at("d").get<std::string>(), cases);
        CHECK_MESSAGE(rewritten == original, "family ", fam, " not canonical on disk");
    }
}

TEST_CASE("parameter draws are deterministic and respect constraints") {
    Corpus c = shipped();
    const CaseSpec& c26 = *c.find("2.6");  // pairwise-distinct constraints
    ParamEnv e1 = assign_params(c26, 0, 42, 0);
    ParamEnv e2 = assign_params(c26, 0, 42, 0);
    CHECK(e1 == e2);
    ParamEnv e3 = assign_params(c26, 0, 42, 1);
    CHECK(e1 != e3);  // different draw index
    ParamEnv e4 = assign_params(c26, 0, 43, 0);
    CHECK(e1 != e4);  // different seed

    for (int draw = 0; draw < 8; ++draw) {
        ParamEnv env = assign_params(c26, 0, 7, draw);
        CHECK(env.at("a") != env.at("b"));
        CHECK(env.at("b") != env.at("g"));
        CHECK(env.at("a") != env.at("g"));
        CHECK(env.at("a") != Scalar(1));
        for (const auto& [p, v] : env) {
            (void)p;
            CHECK_FALSE(v.is_zero());
        }
    }
}

TEST_CASE("branch equalities produce tied and q-power values") {
    Corpus c = shipped();
    const CaseSpec& c75 = *c.find("7.5");
    ParamEnv env = assign_params(c75, 0, 11, 0);
    CHECK(env.at("g") == env.at("d_"));  // gamma = delta branch

    const CaseSpec& c713 = *c.find("7.13");
    REQUIRE(c713.branches.size() == 2);
    ParamEnv chain = assign_params(c713, 1, 11, 0);
    // beta = gamma = q^-2 alpha: genuinely q-power-valued parameters
    CHECK(chain.at("b") == chain.at("g"));
    CHECK(chain.at("b") == chain.at("a") * Scalar::q().pow(-2));

    CHECK_THROWS_AS(assign_params(c713, 5, 11, 0), CorpusError);
}

TEST_CASE("every case has invertible d, C11, C22 at a draw") {
    Corpus c = shipped();
    for (const auto& cs : c.cases) {
        for (int b = 0; b < static_cast<int>(cs.branches.size()); ++b) {
            ParamEnv env = assign_params(cs, b, 20250801, 0);
            CAPTURE(cs.id);
            Mat d = eval_matrix(cs.d, env);
            Mat c11 = eval_matrix(cs.c11, env);
            Mat c22 = eval_matrix(cs.c22, env);
            CHECK(d * d.inverse() == Mat::identity(4));
            CHECK(c11 * c11.inverse() == Mat::identity(4));
            CHECK(c22 * c22.inverse() == Mat::identity(4));
        }
    }
}
