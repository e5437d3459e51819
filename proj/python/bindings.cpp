#include "schouten/doc_io.hpp"
#include "schouten/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace schouten;

namespace {

AlgebroidSpec algebroid_from_text(const std::string& text) {
    StructureDoc doc = parse_doc(text);
    if (doc.kind != StructureDoc::Kind::Algebroid &&
        doc.kind != StructureDoc::Kind::JacobiAlgebroid)
        throw InputError("expected an algebroid or jacobi-algebroid document");
    return doc.primal->algebroid;
}

JacobiAlgebroid jacobi_from_text(const std::string& text) {
    StructureDoc doc = parse_doc(text);
    if (doc.kind != StructureDoc::Kind::JacobiAlgebroid)
        throw InputError("expected a jacobi-algebroid document");
    if (!doc.primal->cocycle_closed())
        throw InputError("cocycle is not closed");
    return *doc.primal;
}

GrassmannElement tensor_from_text(const std::string& text, const AlgebroidSpec& A,
                                  GenSpace space) {
    StructureDoc doc = parse_doc(text);
    if (doc.kind != StructureDoc::Kind::Tensor)
        throw InputError("expected a tensor document");
    if (doc.op_gens != (space == GenSpace::Section ? A.section_gens() : A.form_gens()) ||
        doc.chart != A.chart())
        throw InputError("tensor does not match the structure");
    return *doc.tensor;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact kernel for graded Lie brackets on Grassmann algebras";

    py::register_exception<InputError>(m, "InputError");

    py::class_<Chart>(m, "Chart")
        .def(py::init([](std::vector<std::string> base, std::vector<std::string> fiber,
                         std::vector<std::string> aux, std::optional<std::string> exp) {
                 return Chart::make(std::move(base), std::move(fiber), std::move(aux),
                                    std::move(exp));
             }),
             py::arg("base"), py::arg("fiber") = std::vector<std::string>{},
             py::arg("aux") = std::vector<std::string>{},
             py::arg("exp") = std::optional<std::string>{})
        .def("coords",
             [](const Chart& c) {
                 std::vector<std::string> out;
                 for (int i = 0; i < c.coord_count(); ++i)
                     out.push_back(c.coord_name(i));
                 return out;
             })
        .def("__eq__", [](const Chart& a, const Chart& b) { return a == b; });

    py::class_<Scalar>(m, "Scalar")
        .def_static("parse", &Scalar::parse, py::arg("chart"), py::arg("text"))
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; })
        .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
        .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
        .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
        .def("__neg__", [](const Scalar& a) { return -a; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("is_zero", &Scalar::is_zero)
        .def("degree", &Scalar::degree)
        .def("partial", py::overload_cast<const std::string&>(&Scalar::partial, py::const_),
             py::arg("coord"));

    // document-level operations mirroring the CLI
    m.def("canonical", [](const std::string& text) { return print_doc(parse_doc(text)); },
          "Parse a structure document and return its canonical form");

    m.def("check_algebroid", [](const std::string& text) {
        return algebroid_validate(algebroid_from_text(text)).text();
    });

    m.def("check_jacobi",
          [](const std::string& structure, const std::string& lambda_text,
             const std::string& gamma_text) {
              AlgebroidSpec A = algebroid_from_text(structure);
              GrassmannElement lambda = tensor_from_text(lambda_text, A, GenSpace::Section);
              GrassmannElement gamma = tensor_from_text(gamma_text, A, GenSpace::Section);
              JacobiStructureReport rep = jacobi_structure_check(lambda, gamma, A);
              return py::make_tuple(rep.pass, rep.text());
          });

    m.def("sn_bracket", [](const std::string& structure, const std::string& a,
                           const std::string& b) {
        AlgebroidSpec A = algebroid_from_text(structure);
        GrassmannElement X = tensor_from_text(a, A, GenSpace::Section);
        GrassmannElement Y = tensor_from_text(b, A, GenSpace::Section);
        return print_doc(doc_from_tensor(sn_bracket(X, Y, A)));
    });

    m.def("sj_bracket", [](const std::string& structure, const std::string& a,
                           const std::string& b) {
        JacobiAlgebroid J = jacobi_from_text(structure);
        GrassmannElement X = tensor_from_text(a, J.algebroid, GenSpace::Section);
        GrassmannElement Y = tensor_from_text(b, J.algebroid, GenSpace::Section);
        return print_doc(doc_from_tensor(sj_bracket(X, Y, J)));
    });

    m.def("exterior_d", [](const std::string& structure, const std::string& mu) {
        AlgebroidSpec A = algebroid_from_text(structure);
        GrassmannElement m0 = tensor_from_text(mu, A, GenSpace::Form);
        return print_doc(doc_from_tensor(exterior_d(m0, A)));
    });

    m.def("lift", [](const std::string& kind, const std::string& structure,
                     const std::string& x) {
        if (kind == "vertical" || kind == "complete") {
            AlgebroidSpec A = algebroid_from_text(structure);
            GrassmannElement X = tensor_from_text(x, A, GenSpace::Section);
            TotalSpace ts = TotalSpace::make(A);
            return print_doc(doc_from_tensor(kind == "vertical" ? ts.vertical_lift(X)
                                                                : ts.complete_lift(X)));
        }
        JacobiAlgebroid J = jacobi_from_text(structure);
        GrassmannElement X = tensor_from_text(x, J.algebroid, GenSpace::Section);
        TotalSpace ts = TotalSpace::make(J.algebroid);
        if (kind == "jacobi") {
            FirstOrderOp hat = jacobi_lift(X, J, ts);
            return print_doc(doc_from_first_order(hat, ts.chart(),
                                                  ts.tangent().section_gens()));
        }
        if (kind == "poisson")
            return print_doc(doc_from_tensor(poisson_lift(X, J, ts)));
        throw InputError("unknown lift kind '" + kind + "'");
    });

    m.def("poissonize", [](const std::string& structure, const std::string& x) {
        JacobiAlgebroid J = jacobi_from_text(structure);
        GrassmannElement X = tensor_from_text(x, J.algebroid, GenSpace::Section);
        Poissonization P = Poissonization::make(J);
        return print_doc(doc_from_tensor(P.tilde_embed(X)));
    });

    m.def("suite_names", &suite_names);

    m.def(
        "run_suite",
        [](const std::string& name, std::uint64_t seed, int cases, int degree,
           int coeff_degree) {
            SuiteConfig cfg;
            cfg.suite = name;
            cfg.seed = seed;
            cfg.cases = cases;
            cfg.max_tensor_degree = degree;
            cfg.max_coeff_degree = coeff_degree;
            SuiteReport rep = run_suite(cfg);
            return py::make_tuple(rep.pass, rep.text());
        },
        py::arg("name"), py::arg("seed") = 42, py::arg("cases") = 25, py::arg("degree") = 3,
        py::arg("coeff_degree") = 2);
}
