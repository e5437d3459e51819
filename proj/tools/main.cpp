#include "schouten/doc_io.hpp"
#include "schouten/suites.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace schouten;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitInputError = 2;

AlgebroidSpec require_algebroid(const StructureDoc& doc) {
    if (doc.kind != StructureDoc::Kind::Algebroid &&
        doc.kind != StructureDoc::Kind::JacobiAlgebroid)
        throw InputError("expected an algebroid or jacobi-algebroid document");
    return doc.primal->algebroid;
}

JacobiAlgebroid require_jacobi(const StructureDoc& doc) {
    if (doc.kind != StructureDoc::Kind::JacobiAlgebroid)
        throw InputError("expected a jacobi-algebroid document");
    if (!doc.primal->cocycle_closed())
        throw InputError("cocycle is not closed: d(Phi) != 0");
    return *doc.primal;
}

GrassmannElement require_tensor(const StructureDoc& doc, const AlgebroidSpec& A,
                                GenSpace space) {
    if (doc.kind != StructureDoc::Kind::Tensor)
        throw InputError("expected a tensor document");
    const GenList expected = space == GenSpace::Section ? A.section_gens() : A.form_gens();
    if (doc.op_gens != expected)
        throw InputError("tensor generators do not match the structure's frames");
    if (doc.chart != A.chart())
        throw InputError("tensor chart does not match the structure");
    return *doc.tensor;
}

FirstOrderOp require_first_order(const StructureDoc& doc, const AlgebroidSpec& A) {
    if (doc.kind != StructureDoc::Kind::FirstOrderOp)
        throw InputError("expected a first-order-op document");
    if (doc.op_gens != A.section_gens() || doc.chart != A.chart())
        throw InputError("first-order-op generators do not match the structure");
    return *doc.first_order;
}

int cmd_check_algebroid(const std::string& path) {
    StructureDoc doc = load_doc_file(path);
    AlgebroidSpec A = require_algebroid(doc);
    ValidationReport rep = algebroid_validate(A);
    std::cout << rep.text();
    if (!rep.ok)
        return kExitIdentityFailure;
    if (doc.kind == StructureDoc::Kind::JacobiAlgebroid && !doc.primal->cocycle_closed()) {
        std::cout << "FAIL: cocycle is not closed\n";
        return kExitIdentityFailure;
    }
    return kExitPass;
}

int cmd_check_jacobi(const std::string& structure, const std::string& lambda_path,
                     const std::string& gamma_path) {
    StructureDoc sdoc = load_doc_file(structure);
    AlgebroidSpec A = require_algebroid(sdoc);
    GrassmannElement lambda = require_tensor(load_doc_file(lambda_path), A, GenSpace::Section);
    GrassmannElement gamma = require_tensor(load_doc_file(gamma_path), A, GenSpace::Section);
    JacobiStructureReport rep = jacobi_structure_check(lambda, gamma, A);
    std::cout << rep.text();
    return rep.pass ? kExitPass : kExitIdentityFailure;
}

int cmd_bracket(const std::string& kind, const std::string& structure, const std::string& a,
                const std::string& b, const std::string& bivector, const std::string& out) {
    StructureDoc sdoc = load_doc_file(structure);
    StructureDoc result;
    if (kind == "sn") {
        AlgebroidSpec A = require_algebroid(sdoc);
        GrassmannElement X = require_tensor(load_doc_file(a), A, GenSpace::Section);
        GrassmannElement Y = require_tensor(load_doc_file(b), A, GenSpace::Section);
        result = doc_from_tensor(sn_bracket(X, Y, A));
    } else if (kind == "sj") {
        JacobiAlgebroid J = require_jacobi(sdoc);
        GrassmannElement X = require_tensor(load_doc_file(a), J.algebroid, GenSpace::Section);
        GrassmannElement Y = require_tensor(load_doc_file(b), J.algebroid, GenSpace::Section);
        result = doc_from_tensor(sj_bracket(X, Y, J));
    } else if (kind == "nr") {
        StructureDoc da = load_doc_file(a), db = load_doc_file(b);
        if (da.kind == StructureDoc::Kind::Multilinear) {
            if (db.kind != StructureDoc::Kind::Multilinear)
                throw InputError("nr bracket needs two multilinear documents");
            if (!da.multilinear->is_skew() || !db.multilinear->is_skew())
                throw InputError("nr bracket requires skew operators");
            result = doc_from_multilinear(nr_bracket(*da.multilinear, *db.multilinear));
        } else {
            AlgebroidSpec A = require_algebroid(sdoc);
            FirstOrderOp X = require_first_order(da, A);
            FirstOrderOp Y = require_first_order(db, A);
            result = doc_from_first_order(nr_structural_bracket(X, Y, A), A.chart(),
                                          A.section_gens());
        }
    } else if (kind == "koszul") {
        AlgebroidSpec A = require_algebroid(sdoc);
        if (bivector.empty())
            throw InputError("koszul bracket needs --bivector");
        GrassmannElement lambda =
            require_tensor(load_doc_file(bivector), A, GenSpace::Section);
        if (!sn_bracket(lambda, lambda, A).is_zero())
            throw InputError("--bivector is not Poisson: [Lambda,Lambda] != 0");
        GrassmannElement mu = require_tensor(load_doc_file(a), A, GenSpace::Form);
        GrassmannElement nu = require_tensor(load_doc_file(b), A, GenSpace::Form);
        result = doc_from_tensor(koszul_bracket(mu, nu, lambda, A));
    } else {
        throw InputError("unknown bracket kind '" + kind + "'");
    }
    if (out.empty())
        std::cout << print_doc(result);
    else
        save_doc_file(out, result);
    return kExitPass;
}

int cmd_lift(const std::string& kind, const std::string& structure, const std::string& xpath,
             const std::string& out) {
    StructureDoc sdoc = load_doc_file(structure);
    StructureDoc result;
    if (kind == "vertical" || kind == "complete") {
        AlgebroidSpec A = require_algebroid(sdoc);
        GrassmannElement X = require_tensor(load_doc_file(xpath), A, GenSpace::Section);
        TotalSpace ts = TotalSpace::make(A);
        result = doc_from_tensor(kind == "vertical" ? ts.vertical_lift(X)
                                                    : ts.complete_lift(X));
    } else if (kind == "jacobi" || kind == "poisson") {
        JacobiAlgebroid J = require_jacobi(sdoc);
        GrassmannElement X = require_tensor(load_doc_file(xpath), J.algebroid,
                                            GenSpace::Section);
        TotalSpace ts = TotalSpace::make(J.algebroid);
        if (kind == "jacobi") {
            FirstOrderOp hat = jacobi_lift(X, J, ts);
            result = doc_from_first_order(hat, ts.chart(), ts.tangent().section_gens());
        } else {
            result = doc_from_tensor(poisson_lift(X, J, ts));
        }
    } else {
        throw InputError("unknown lift kind '" + kind + "'");
    }
    if (out.empty())
        std::cout << print_doc(result);
    else
        save_doc_file(out, result);
    return kExitPass;
}

int cmd_poissonize(const std::string& structure, const std::string& xpath,
                   const std::string& out) {
    JacobiAlgebroid J = require_jacobi(load_doc_file(structure));
    GrassmannElement X = require_tensor(load_doc_file(xpath), J.algebroid, GenSpace::Section);
    Poissonization P = Poissonization::make(J);
    StructureDoc result = doc_from_tensor(P.tilde_embed(X));
    if (out.empty())
        std::cout << print_doc(result);
    else
        save_doc_file(out, result);
    return kExitPass;
}

int cmd_bialgebroid_check(const std::string& path, int depth, std::uint64_t seed) {
    StructureDoc doc = load_doc_file(path);
    if (doc.kind != StructureDoc::Kind::DualPair)
        throw InputError("expected a dual-pair document");
    DualPair pair = DualPair::make(*doc.primal, *doc.dual);
    BialgebroidReport rep = bialgebroid_check(pair, depth, seed);
    std::cout << rep.text();
    return rep.pass ? kExitPass : kExitIdentityFailure;
}

int cmd_verify(const SuiteConfig& cfg, bool list) {
    if (list) {
        for (const auto& name : suite_names())
            std::cout << name << "\n";
        return kExitPass;
    }
    SuiteReport rep = run_suite(cfg);
    std::cout << rep.text();
    return rep.pass ? kExitPass : kExitIdentityFailure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact kernel for graded Lie brackets on Grassmann algebras of "
                 "trivialized vector bundles"};
    app.require_subcommand(1);

    std::string path, structure, a, b, bivector, out, kind, lambda_path, gamma_path;
    int depth = 2;
    std::uint64_t seed = 42;
    SuiteConfig cfg;
    bool list_suites = false;

    auto* check = app.add_subcommand("check-algebroid", "Validate a (Jacobi) algebroid");
    check->add_option("doc", path, "structure document")->required();

    auto* cj = app.add_subcommand("check-jacobi", "Check a Jacobi structure (Lambda, Gamma)");
    cj->add_option("structure", structure, "algebroid document")->required();
    cj->add_option("lambda", lambda_path, "bivector tensor document")->required();
    cj->add_option("gamma", gamma_path, "vector tensor document")->required();

    auto* br = app.add_subcommand("bracket", "Compute a graded bracket");
    br->add_option("--kind", kind, "sn|sj|nr|koszul")->required();
    br->add_option("--structure", structure, "structure document")->required();
    br->add_option("--bivector", bivector, "Poisson bivector (koszul only)");
    br->add_option("-o,--out", out, "write the result document here");
    br->add_option("a", a, "first operand document")->required();
    br->add_option("b", b, "second operand document")->required();

    auto* lf = app.add_subcommand("lift", "Lift a multivector to the total space");
    lf->add_option("--kind", kind, "vertical|complete|jacobi|poisson")->required();
    lf->add_option("--structure", structure, "structure document")->required();
    lf->add_option("-o,--out", out, "write the result document here");
    lf->add_option("x", a, "tensor document")->required();

    auto* pz = app.add_subcommand("poissonize", "Exponential-weighted embedding into L x TR");
    pz->add_option("--structure", structure, "jacobi-algebroid document")->required();
    pz->add_option("-o,--out", out, "write the result document here");
    pz->add_option("x", a, "tensor document")->required();

    auto* bc = app.add_subcommand("bialgebroid-check", "Two-stage compatibility check");
    bc->add_option("pair", path, "dual-pair document")->required();
    bc->add_option("--depth", depth, "stage-2 maximal lie-degree sum");
    bc->add_option("--seed", seed, "stage-2 seed");

    auto* vf = app.add_subcommand("verify", "Run a registered identity suite");
    vf->add_option("--suite", cfg.suite, "suite name");
    vf->add_option("--seed", cfg.seed, "random seed");
    vf->add_option("--cases", cfg.cases, "number of cases");
    vf->add_option("--degree", cfg.max_tensor_degree, "maximal tensor degree");
    vf->add_option("--coeff-degree", cfg.max_coeff_degree, "maximal coefficient degree");
    vf->add_flag("--list", list_suites, "list registered suites");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check_algebroid(path);
        if (cj->parsed())
            return cmd_check_jacobi(structure, lambda_path, gamma_path);
        if (br->parsed())
            return cmd_bracket(kind, structure, a, b, bivector, out);
        if (lf->parsed())
            return cmd_lift(kind, structure, a, out);
        if (pz->parsed())
            return cmd_poissonize(structure, a, out);
        if (bc->parsed())
            return cmd_bialgebroid_check(path, depth, seed);
        if (vf->parsed()) {
            if (!list_suites && cfg.suite.empty())
                throw InputError("verify needs --suite NAME or --list");
            return cmd_verify(cfg, list_suites);
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
