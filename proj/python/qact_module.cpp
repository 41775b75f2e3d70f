// Python bindings for the main operations: exact scalars, matrices, the
// closure/centralizer pair, relation checking, the gamma-matrix certificate,
// and corpus verification.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qact/clifford.hpp"
#include "qact/report.hpp"

namespace py = pybind11;
using namespace qact;

namespace {

Scalar scalar_from_string(const std::string& text) {
    return eval_expr(parse_expr(text), {});
}

ParamEnv env_from_dict(const py::dict& d) {
    ParamEnv env;
    for (auto item : d) {
        env[py::cast<std::string>(item.first)] =
            scalar_from_string(py::cast<std::string>(item.second));
    }
    return env;
}

}  // namespace

PYBIND11_MODULE(_qact, m) {
    m.doc() = "exact verification kernel for the GL2 inner-action classification";

    py::class_<Scalar>(m, "Scalar")
        .def(py::init(&scalar_from_string), py::arg("text"))
        .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
        .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
        .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
        .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("inverse", &Scalar::inverse)
        .def("is_zero", &Scalar::is_zero)
        .def("__repr__", &Scalar::str);

    py::class_<Mat>(m, "Mat")
        .def(py::init([](const std::string& text, const py::dict& env) {
                 return eval_matrix(parse_matrix(text), env_from_dict(env));
             }),
             py::arg("text"), py::arg("env") = py::dict())
        .def_static("identity", [] { return Mat::identity(4); })
        .def_static("unit", [](int i, int j) { return Mat::unit(i, j); })
        .def("__matmul__", [](const Mat& a, const Mat& b) { return a * b; })
        .def("__add__", [](const Mat& a, const Mat& b) { return a + b; })
        .def("__sub__", [](const Mat& a, const Mat& b) { return a - b; })
        .def("__eq__", [](const Mat& a, const Mat& b) { return a == b; })
        .def("is_zero", &Mat::is_zero)
        .def("inverse", &Mat::inverse)
        .def("entry", [](const Mat& m, int i, int j) { return m.at(i, j); })
        .def("__repr__", &Mat::str);

    m.def("commutator", &commutator);
    m.def("kron", &kron);

    m.def("closure_dim", [](const std::vector<Mat>& gens) {
        return unital_closure(gens).dim();
    });
    m.def("centralizer_dim", [](const std::vector<Mat>& gens) {
        return centralizer(unital_closure(gens)).dim();
    });

    m.def("clifford_certificate", [] {
        GammaSet gs = build_dirac();
        bool anti = check_anticommutation(gs);
        int rank = clifford_basis(gs).dim();
        return py::make_tuple(anti, rank);
    });

    m.def(
        "verify_case",
        [](const std::string& corpus_dir, const std::string& relations_path,
           const std::string& case_id, std::uint64_t seed, int draws, bool errata) {
            Corpus corpus = load_corpus(corpus_dir);
            const CaseSpec* cs = corpus.find(case_id);
            if (!cs) throw CorpusError("unknown case id " + case_id);
            auto rels = load_relations(relations_path);
            VerifyOptions opts;
            opts.errata = errata;
            CaseReport r = verify_case(*cs, DrawPlan{seed, draws}, rels, opts);
            py::dict out;
            out["id"] = r.id;
            out["dim_R"] = r.printed.front().dim_R;
            out["dim_I"] = r.printed.front().dim_I;
            out["expected_dim_R"] = r.expected_dim_R;
            out["expected_dim_I"] = r.expected_dim_I;
            out["relations_ok"] = r.printed.front().relations_ok;
            out["det_equals_d"] = r.printed.front().det_equals_d;
            out["perturbation"] = r.printed.front().perturbation;
            out["reconciled"] = r.reconciled;
            out["discrepancies"] = static_cast<int>(r.discrepancies.size());
            return out;
        },
        py::arg("corpus_dir"), py::arg("relations_path"), py::arg("case_id"),
        py::arg("seed") = 20250801, py::arg("draws") = 3, py::arg("errata") = true);
}
