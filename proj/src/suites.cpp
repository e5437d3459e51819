#include "schouten/suites.hpp"

#include "schouten/doc_io.hpp"
#include "schouten/fn_ops.hpp"

#include <functional>
#include <sstream>

namespace schouten {

namespace instances {

AlgebroidSpec tm(int dim) {
    std::vector<std::string> coords;
    for (int i = 0; i < dim; ++i)
        coords.push_back("x" + std::to_string(i + 1));
    return AlgebroidSpec::tangent(Chart::make(coords));
}

AlgebroidSpec so3() {
    Chart chart = Chart::make({});
    std::vector<std::string> frames{"e1", "e2", "e3"};
    std::vector<std::vector<Scalar>> anchor(3);
    std::map<std::tuple<int, int, int>, Scalar> c;
    Scalar one = Scalar::constant(chart, 1);
    c[{0, 1, 2}] = one;  // [e1,e2] = e3
    c[{1, 2, 0}] = one;  // [e2,e3] = e1
    c[{0, 2, 1}] = -one; // [e1,e3] = -e2
    return AlgebroidSpec(chart, frames, {}, anchor, c);
}

AlgebroidSpec aff1() {
    Chart chart = Chart::make({"x"});
    std::vector<std::string> frames{"e1", "e2"};
    std::vector<std::vector<Scalar>> anchor{{Scalar::constant(chart, 1)},
                                            {Scalar::coordinate(chart, "x")}};
    std::map<std::tuple<int, int, int>, Scalar> c;
    c[{0, 1, 0}] = Scalar::constant(chart, 1); // [e1,e2] = e1
    return AlgebroidSpec(chart, frames, {"x"}, anchor, c);
}

JacobiAlgebroid tm_phi(int dim) {
    AlgebroidSpec A = tm(dim);
    return JacobiAlgebroid::make(A, A.form(0));
}

JacobiAlgebroid tm_phi_exact_r2() {
    AlgebroidSpec A = tm(2);
    GrassmannElement phi = A.form(0).scaled(Scalar::coordinate(A.chart(), "x1")) +
                           A.form(1).scaled(Scalar::coordinate(A.chart(), "x2"));
    return JacobiAlgebroid::make(A, phi);
}

JacobiAlgebroid aff1_phi() {
    AlgebroidSpec A = aff1();
    return JacobiAlgebroid::make(A, A.form(1));
}

JacobiAlgebroid so3_ext() {
    return ExtensionAlgebroid::make(so3()).ext;
}

JacobiStructureInstance contact_r3() {
    AlgebroidSpec A = AlgebroidSpec::tangent(Chart::make({"q", "p", "u"}));
    Scalar p = Scalar::coordinate(A.chart(), "p");
    // Lambda = (d_q + p d_u) ^ d_p
    GrassmannElement lambda = wedge(A.section(0) + A.section(2).scaled(p), A.section(1));
    GrassmannElement gamma = A.section(2);
    return {A, lambda, gamma, "contact-r3"};
}

JacobiStructureInstance poisson_r2() {
    AlgebroidSpec A = tm(2);
    GrassmannElement lambda = wedge(A.section(0), A.section(1));
    return {A, lambda, A.zero_section(), "poisson-r2"};
}

JacobiStructureInstance gamma_only_r1() {
    AlgebroidSpec A = AlgebroidSpec::tangent(Chart::make({"u"}));
    return {A, A.zero_section(), A.section(0), "gamma-only-r1"};
}

PoissonInstance poisson_constant_r2() {
    AlgebroidSpec A = tm(2);
    return {A, wedge(A.section(0), A.section(1)), "poisson-constant-r2"};
}

PoissonInstance poisson_so3_linear() {
    AlgebroidSpec A = tm(3);
    const Chart& ch = A.chart();
    GrassmannElement lambda =
        wedge(A.section(0), A.section(1)).scaled(Scalar::coordinate(ch, "x3")) +
        wedge(A.section(1), A.section(2)).scaled(Scalar::coordinate(ch, "x1")) +
        wedge(A.section(2), A.section(0)).scaled(Scalar::coordinate(ch, "x2"));
    return {A, lambda, "poisson-so3-linear"};
}

} // namespace instances

// ---- harness ----------------------------------------------------------------

namespace {

using instances::JacobiStructureInstance;
using instances::PoissonInstance;

class Runner {
  public:
    explicit Runner(const SuiteConfig& cfg) : cfg_(cfg), rng_(cfg.seed) { rep_.config = cfg; }

    Rng& rng() { return rng_; }
    const SuiteConfig& cfg() const { return cfg_; }

    void record(bool ok, const std::string& what = "", const std::string& repro = "") {
        int i = rep_.cases_run++;
        if (ok) {
            body_ << "case " << i << ": PASS\n";
        } else {
            ++rep_.failures;
            rep_.pass = false;
            body_ << "case " << i << ": FAIL " << what << "\n";
            if (rep_.repro.empty())
                rep_.repro = repro;
        }
    }

    SuiteReport finish() {
        rep_.body = body_.str();
        return rep_;
    }

  private:
    SuiteConfig cfg_;
    Rng rng_;
    SuiteReport rep_;
    std::ostringstream body_;
};

// Failure bundle: description plus a reproduction document.
struct Defect {
    std::string what;
    std::string repro;
};
using CaseFn = std::function<std::optional<Defect>(Runner&)>;

void drive(Runner& r, const CaseFn& one_case) {
    for (int i = 0; i < r.cfg().cases; ++i) {
        auto d = one_case(r);
        r.record(!d.has_value(), d ? d->what : "", d ? d->repro : "");
    }
}

std::string tensor_repro(const GrassmannElement& e) { return print_doc(doc_from_tensor(e)); }

std::string two_tensor_repro(const GrassmannElement& a, const GrassmannElement& b) {
    return print_doc(doc_from_tensor(a)) + print_doc(doc_from_tensor(b));
}

int lie_sign(int x, int y) { return (x % 2 != 0 && y % 2 != 0) ? -1 : 1; } // (-1)^{xy}

// ---- scalar suites ----------------------------------------------------------

std::optional<Defect> case_scalar_leibniz(Runner& r) {
    Chart chart = Chart::make({"x", "y", "z"}, {}, {"t"}, std::string("t"));
    Scalar a = random_scalar(r.rng(), chart, 3, 3);
    Scalar b = random_scalar(r.rng(), chart, 3, 3);
    if (r.rng().range(0, 1) == 1)
        a = a * Scalar::exp_weight(chart, r.rng().range(-2, 2));
    if (r.rng().range(0, 1) == 1)
        b = b * Scalar::exp_weight(chart, r.rng().range(-2, 2));
    for (int i = 0; i < chart.coord_count(); ++i) {
        Scalar lhs = (a * b).partial(i);
        Scalar rhs = a.partial(i) * b + a * b.partial(i);
        if (lhs != rhs)
            return Defect{"Leibniz rule in " + chart.coord_name(i),
                          "a = " + a.str() + "\nb = " + b.str() + "\n"};
    }
    return std::nullopt;
}

std::optional<Defect> case_scalar_roundtrip(Runner& r) {
    Chart chart = Chart::make({"x", "y"}, {}, {"t"}, std::string("t"));
    Scalar a = random_scalar(r.rng(), chart, 3, 4);
    if (r.rng().range(0, 1) == 1)
        a = a * Scalar::exp_weight(chart, r.rng().range(-2, 2));
    Scalar back = Scalar::parse(chart, a.str());
    if (back != a)
        return Defect{"parse(print) changed the scalar", "a = " + a.str() + "\n"};
    return std::nullopt;
}

// ---- dense multilinear suites -------------------------------------------------

MultilinearOp random_op(Rng& rng, int dim, int degree) {
    MultilinearOp op = MultilinearOp::zero(dim, degree);
    for (auto& c : op.data())
        if (rng.range(0, 2) == 0)
            c = rng.range(-2, 2);
    return op;
}

bool ops_equal(const MultilinearOp& a, const MultilinearOp& b) {
    if (a.degree() == b.degree() && a.dim() == b.dim())
        return a == b;
    return a.is_zero() && b.is_zero(); // degrees below -1 collapse to zero
}

std::optional<Defect> case_g_jacobi(Runner& r) {
    int dim = r.rng().range(2, 3);
    int a = r.rng().range(-1, 2), b = r.rng().range(-1, 2), c = r.rng().range(-1, 2);
    MultilinearOp A = random_op(r.rng(), dim, a);
    MultilinearOp B = random_op(r.rng(), dim, b);
    MultilinearOp C = random_op(r.rng(), dim, c);
    MultilinearOp ab = gerstenhaber_bracket(A, B);
    MultilinearOp ba = gerstenhaber_bracket(B, A);
    if (!ops_equal(ab, ba.scaled(-lie_sign(a, b))))
        return Defect{"graded antisymmetry of [.,.]^G",
                      print_doc(doc_from_multilinear(A)) + print_doc(doc_from_multilinear(B))};
    MultilinearOp lhs = gerstenhaber_bracket(ab, C);
    MultilinearOp rhs = gerstenhaber_bracket(A, gerstenhaber_bracket(B, C)) -
                        gerstenhaber_bracket(B, gerstenhaber_bracket(A, C)).scaled(lie_sign(a, b));
    if (!ops_equal(lhs, rhs))
        return Defect{"graded Jacobi identity of [.,.]^G",
                      print_doc(doc_from_multilinear(A)) + print_doc(doc_from_multilinear(B)) +
                          print_doc(doc_from_multilinear(C))};
    return std::nullopt;
}

std::optional<Defect> case_nr_jacobi(Runner& r) {
    int dim = r.rng().range(2, 3);
    int a = r.rng().range(-1, 2), b = r.rng().range(-1, 2), c = r.rng().range(-1, 2);
    MultilinearOp A = skew_projector(random_op(r.rng(), dim, a));
    MultilinearOp B = skew_projector(random_op(r.rng(), dim, b));
    MultilinearOp C = skew_projector(random_op(r.rng(), dim, c));
    MultilinearOp ab = nr_bracket(A, B);
    if (!ops_equal(ab, nr_bracket(B, A).scaled(-lie_sign(a, b))))
        return Defect{"graded antisymmetry of [.,.]^NR",
                      print_doc(doc_from_multilinear(A)) + print_doc(doc_from_multilinear(B))};
    if (a + b <= 3 && !ops_equal(ab, nr_bracket_via_skew(A, B)))
        return Defect{"unshuffle route disagrees with the normalized-skew route",
                      print_doc(doc_from_multilinear(A)) + print_doc(doc_from_multilinear(B))};
    MultilinearOp lhs = nr_bracket(ab, C);
    MultilinearOp rhs = nr_bracket(A, nr_bracket(B, C)) -
                        nr_bracket(B, nr_bracket(A, C)).scaled(lie_sign(a, b));
    if (!ops_equal(lhs, rhs))
        return Defect{"graded Jacobi identity of [.,.]^NR",
                      print_doc(doc_from_multilinear(A)) + print_doc(doc_from_multilinear(B)) +
                          print_doc(doc_from_multilinear(C))};
    return std::nullopt;
}

// random element of ADer^deg for the truncated polynomial algebra
MultilinearOp random_der(Rng& rng, const Algebra& alg, int degree) {
    const int dim = alg.dim;
    auto der = [&] {
        MultilinearOp d = MultilinearOp::zero(dim, 0);
        for (int a = 1; a < dim; ++a)
            if (rng.range(0, 1))
                d = d + Algebra::truncated_derivation(dim, a).scaled(rng.range(-2, 2));
        return d;
    };
    if (degree == -1) {
        MultilinearOp v = MultilinearOp::zero(dim, -1);
        for (auto& c : v.data())
            c = rng.range(-2, 2);
        return v;
    }
    if (degree == 0)
        return der();
    MultilinearOp out = wedge_multilinear(der(), der(), alg);
    for (int k = 2; k <= degree; ++k)
        out = wedge_multilinear(out, der(), alg);
    return out;
}

// random element of ADiff_1^deg = ADer^deg + I ^ ADer^{deg-1}
MultilinearOp random_diff1(Rng& rng, const Algebra& alg, int degree) {
    MultilinearOp out = random_der(rng, alg, degree);
    if (degree >= 0)
        out = out + wedge_multilinear(MultilinearOp::identity(alg.dim),
                                      random_der(rng, alg, degree - 1), alg);
    return out;
}

std::optional<Defect> case_wedge_insertion(Runner& r) {
    const int dim = r.rng().range(3, 4);
    Algebra alg = Algebra::truncated_polynomial(dim);
    int a = r.rng().range(0, 1), b = r.rng().range(0, 1), c = r.rng().range(0, 1);
    MultilinearOp A = skew_projector(random_op(r.rng(), dim, a));
    MultilinearOp B = skew_projector(random_op(r.rng(), dim, b));
    // (we1) for arbitrary skew A, B, C
    MultilinearOp C0 = skew_projector(random_op(r.rng(), dim, c));
    MultilinearOp w = wedge_multilinear(A, B, alg);
    MultilinearOp lhs = unshuffle_insertion(w, C0);
    MultilinearOp rhs =
        wedge_multilinear(unshuffle_insertion(A, C0), B, alg) +
        wedge_multilinear(A, unshuffle_insertion(B, C0), alg).scaled(lie_sign(c, a + 1));
    if (!ops_equal(lhs, rhs))
        return Defect{"(we1) i_C(A^B) expansion", print_doc(doc_from_multilinear(C0))};
    // (we2) for derivation-type C
    MultilinearOp C1 = random_der(r.rng(), alg, c);
    lhs = unshuffle_insertion(C1, w);
    rhs = wedge_multilinear(unshuffle_insertion(C1, A), B, alg).scaled(lie_sign(c, b + 1)) +
          wedge_multilinear(A, unshuffle_insertion(C1, B), alg);
    if (!ops_equal(lhs, rhs))
        return Defect{"(we2) i_{A^B}C expansion for derivations",
                      print_doc(doc_from_multilinear(C1))};
    // first-order C gains the i_1 C correction
    MultilinearOp C2 = random_diff1(r.rng(), alg, c);
    MultilinearOp i1C2 = unshuffle_insertion(C2, alg.unit_element());
    lhs = unshuffle_insertion(C2, w);
    rhs = wedge_multilinear(unshuffle_insertion(C2, A), B, alg).scaled(lie_sign(c, b + 1)) +
          wedge_multilinear(A, unshuffle_insertion(C2, B), alg) -
          wedge_multilinear(w, i1C2, alg);
    if (!ops_equal(lhs, rhs))
        return Defect{"first-order i_{A^B}C expansion", print_doc(doc_from_multilinear(C2))};
    // (GJ) and (F) on ADiff_1
    MultilinearOp X = random_diff1(r.rng(), alg, a);
    MultilinearOp Y = random_diff1(r.rng(), alg, b);
    MultilinearOp Z = random_diff1(r.rng(), alg, c);
    MultilinearOp i1X = unshuffle_insertion(X, alg.unit_element());
    lhs = nr_bracket(X, wedge_multilinear(Y, Z, alg));
    rhs = wedge_multilinear(nr_bracket(X, Y), Z, alg) +
          wedge_multilinear(Y, nr_bracket(X, Z), alg).scaled(lie_sign(a, b + 1)) -
          wedge_multilinear(wedge_multilinear(i1X, Y, alg), Z, alg)
              .scaled(a % 2 != 0 ? -1 : 1);
    if (!ops_equal(lhs, rhs))
        return Defect{"(GJ) rule on ADiff_1", print_doc(doc_from_multilinear(X))};
    MultilinearOp dtilde = nr_bracket(X, alg.unit_element()); // D~(X) = [X,1]
    rhs = wedge_multilinear(nr_bracket(X, Y), Z, alg) +
          wedge_multilinear(Y, nr_bracket(X, Z), alg).scaled(lie_sign(a, b + 1)) -
          wedge_multilinear(wedge_multilinear(dtilde, Y, alg), Z, alg);
    if (!ops_equal(lhs, rhs))
        return Defect{"(F) Gerstenhaber-Jacobi rule with D~ = [.,1]",
                      print_doc(doc_from_multilinear(X))};
    return std::nullopt;
}

// ---- Theorem 1 corpus ---------------------------------------------------------

struct AlgebraTable {
    std::string name;
    int dim;
    bool lie; // skew table meant as a Lie bracket candidate
    std::vector<std::tuple<int, int, int, Rational>> entries; // e_i e_j = sum c e_k
};

MultilinearOp table_op(const AlgebraTable& t) {
    MultilinearOp op = MultilinearOp::zero(t.dim, 1);
    for (const auto& [i, j, k, c] : t.entries) {
        op.at(k, std::array{i, j}) += c;
        if (t.lie)
            op.at(k, std::array{j, i}) -= c;
    }
    return op;
}

// independent loop oracles
bool associative_by_loop(const MultilinearOp& A, std::vector<int>* witness) {
    const int d = A.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<Rational> left(static_cast<size_t>(d)), right(static_cast<size_t>(d));
                for (int m = 0; m < d; ++m) {
                    const Rational& aij = A.at(m, std::array{i, j});
                    const Rational& ajk = A.at(m, std::array{j, k});
                    for (int o = 0; o < d; ++o) {
                        if (aij != 0)
                            left[size_t(o)] += aij * A.at(o, std::array{m, k});
                        if (ajk != 0)
                            right[size_t(o)] += ajk * A.at(o, std::array{i, m});
                    }
                }
                if (left != right) {
                    if (witness)
                        *witness = {i, j, k};
                    return false;
                }
            }
    return true;
}

bool lie_by_loop(const MultilinearOp& A, std::vector<int>* witness) {
    const int d = A.dim();
    auto ap = [&](int i, int j, int o) { return A.at(o, std::array{i, j}); };
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                std::vector<Rational> acc(static_cast<size_t>(d));
                // [[i,j],k] + [[j,k],i] + [[k,i],j]
                for (int m = 0; m < d; ++m)
                    for (int o = 0; o < d; ++o) {
                        acc[size_t(o)] += ap(i, j, m) * ap(m, k, o);
                        acc[size_t(o)] += ap(j, k, m) * ap(m, i, o);
                        acc[size_t(o)] += ap(k, i, m) * ap(m, j, o);
                    }
                for (int o = 0; o < d; ++o)
                    if (acc[size_t(o)] != 0) {
                        if (witness)
                            *witness = {i, j, k};
                        return false;
                    }
            }
    return true;
}

std::vector<AlgebraTable> theorem1_associative_corpus();
std::vector<AlgebraTable> theorem1_lie_corpus();

std::optional<Defect> case_theorem_1(Runner& r) {
    static const std::vector<AlgebraTable> assoc = theorem1_associative_corpus();
    static const std::vector<AlgebraTable> lie = theorem1_lie_corpus();
    size_t i = size_t(r.rng().below(assoc.size() + lie.size()));
    const AlgebraTable& t = i < assoc.size() ? assoc[i] : lie[i - assoc.size()];
    MultilinearOp A = table_op(t);
    std::vector<int> witness;
    if (!t.lie) {
        bool assoc_ok = associative_by_loop(A, &witness);
        bool bracket_zero = gerstenhaber_bracket(A, A).is_zero();
        if (assoc_ok != bracket_zero)
            return Defect{"Theorem 1(a) equivalence failed on " + t.name,
                          print_doc(doc_from_multilinear(A))};
    } else {
        bool jac_ok = lie_by_loop(A, &witness);
        bool bracket_zero = nr_bracket(A, A).is_zero();
        if (jac_ok != bracket_zero)
            return Defect{"Theorem 1(b) equivalence failed on " + t.name,
                          print_doc(doc_from_multilinear(A))};
    }
    return std::nullopt;
}

// ---- Theorem 2 ------------------------------------------------------------

std::optional<Defect> case_theorem_2(Runner& r) {
    Chart chart = Chart::make({"x", "y"});
    GenList gens = tangent_section_gens(chart);
    int a = r.rng().range(0, 2);
    GrassmannElement a1 = random_element(r.rng(), chart, gens, a + 1, 2);
    GrassmannElement a2 = random_element(r.rng(), chart, gens, a, 2);
    FnOp A = a1.is_zero() ? FnOp::zero(chart, a) : FnOp::from_multivector(a1);
    FnOp zo = a2.is_zero() ? FnOp::zero(chart, a - 1) : FnOp::from_multivector(a2);
    A = A + fn_wedge(FnOp::identity(chart), zo);
    FirstOrderSplit s = split_first_order(A);
    if (!(s.derivation_part == a1) || !(s.zero_order_part == a2))
        return Defect{"splitting failed to recover the canonical parts",
                      two_tensor_repro(a1, a2)};
    return std::nullopt;
}

// ---- algebroid suites -------------------------------------------------------

const AlgebroidSpec& algebroid_instance(Rng& rng) {
    static const std::vector<AlgebroidSpec> insts = {
        instances::tm(2), instances::tm(3), instances::so3(), instances::aff1()};
    return insts[size_t(rng.below(insts.size()))];
}

const JacobiAlgebroid& jacobi_instance(Rng& rng) {
    static const std::vector<JacobiAlgebroid> insts = {
        instances::tm_phi(2), instances::tm_phi(3), instances::aff1_phi(),
        instances::so3_ext(), instances::tm_phi_exact_r2()};
    return insts[size_t(rng.below(insts.size()))];
}

GrassmannElement rnd_mv(Runner& r, const AlgebroidSpec& A, int max_deg) {
    int d = r.rng().range(0, std::min(max_deg, A.rank()));
    return random_element(r.rng(), A.chart(), A.section_gens(), d, r.cfg().max_coeff_degree);
}

GrassmannElement rnd_form(Runner& r, const AlgebroidSpec& A, int max_deg) {
    int d = r.rng().range(0, std::min(max_deg, A.rank()));
    return random_element(r.rng(), A.chart(), A.form_gens(), d, r.cfg().max_coeff_degree);
}

std::optional<Defect> case_sn_jacobi(Runner& r) {
    const AlgebroidSpec& A = algebroid_instance(r.rng());
    int maxd = r.cfg().max_tensor_degree;
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd), Z = rnd_mv(r, A, maxd);
    int x = X.lie_degree(), y = Y.lie_degree();
    if (!(sn_bracket(X, Y, A) == sn_bracket(Y, X, A).scaled(Rational(-lie_sign(x, y)))))
        return Defect{"graded antisymmetry of [.,.]^SN", two_tensor_repro(X, Y)};
    GrassmannElement lhs = sn_bracket(sn_bracket(X, Y, A), Z, A);
    GrassmannElement rhs = sn_bracket(X, sn_bracket(Y, Z, A), A) -
                           sn_bracket(Y, sn_bracket(X, Z, A), A).scaled(Rational(lie_sign(x, y)));
    if (!(lhs == rhs))
        return Defect{"graded Jacobi identity of [.,.]^SN",
                      two_tensor_repro(X, Y) + tensor_repro(Z)};
    // Leibniz rule in the second argument
    lhs = sn_bracket(X, wedge(Y, Z), A);
    rhs = wedge(sn_bracket(X, Y, A), Z);
    GrassmannElement t2 = wedge(Y, sn_bracket(X, Z, A));
    rhs += lie_sign(x, y + 1) < 0 ? -t2 : t2;
    if (!(lhs == rhs))
        return Defect{"derivation rule [X,Y^Z]", two_tensor_repro(X, Y) + tensor_repro(Z)};
    // [X,f] = a(X)(f) on sections
    Scalar f = random_scalar(r.rng(), A.chart(), r.cfg().max_coeff_degree);
    for (int i = 0; i < A.rank(); ++i) {
        GrassmannElement br = sn_bracket(A.section(i), A.scalar_element(f), A);
        if (!(br.scalar_part() == A.anchor_apply(A.section(i), f)))
            return Defect{"[X,f] = a(X)(f) on frame " + std::to_string(i), "f = " + f.str()};
    }
    // product expansion on decomposable wedges of sections
    if (A.rank() >= 2) {
        std::vector<GrassmannElement> xs{A.section(0).scaled(f), A.section(1)};
        std::vector<GrassmannElement> ys{A.section(A.rank() - 1),
                                         A.section(0) + A.section(1)};
        GrassmannElement wx = wedge(xs[0], xs[1]);
        GrassmannElement wy = wedge(ys[0], ys[1]);
        GrassmannElement expansion = A.zero_section();
        for (int k = 0; k < 2; ++k)
            for (int l = 0; l < 2; ++l) {
                GrassmannElement term = sn_bracket(xs[size_t(k)], ys[size_t(l)], A);
                term = wedge(term, xs[size_t(1 - k)]);
                term = wedge(term, ys[size_t(1 - l)]);
                // (-1)^{k+l} with 1-based indices
                expansion += ((k + 1) + (l + 1)) % 2 != 0 ? -term : term;
            }
        if (!(sn_bracket(wx, wy, A) == expansion))
            return Defect{"product expansion on section wedges", two_tensor_repro(wx, wy)};
    }
    return std::nullopt;
}

std::optional<Defect> case_cartan_4(Runner& r) {
    const AlgebroidSpec& A = algebroid_instance(r.rng());
    GrassmannElement mu = rnd_form(r, A, A.rank() - 1);
    GrassmannElement nu = rnd_form(r, A, A.rank() - 1);
    GrassmannElement X = random_element(r.rng(), A.chart(), A.section_gens(), 1,
                                        r.cfg().max_coeff_degree);
    GrassmannElement Y = random_element(r.rng(), A.chart(), A.section_gens(), 1,
                                        r.cfg().max_coeff_degree);
    if (!exterior_d(exterior_d(mu, A), A).is_zero())
        return Defect{"d(d(mu)) != 0", tensor_repro(mu)};
    int k = mu.is_zero() ? 0 : mu.tensor_degree();
    GrassmannElement lhs = exterior_d(wedge(mu, nu), A);
    GrassmannElement t2 = wedge(mu, exterior_d(nu, A));
    GrassmannElement rhs = wedge(exterior_d(mu, A), nu) + (k % 2 != 0 ? -t2 : t2);
    if (!(lhs == rhs))
        return Defect{"d Leibniz rule", two_tensor_repro(mu, nu)};
    lhs = lie_derivative(X, wedge(mu, nu), A);
    rhs = wedge(lie_derivative(X, mu, A), nu) + wedge(mu, lie_derivative(X, nu, A));
    if (!(lhs == rhs))
        return Defect{"L_X is a wedge derivation", two_tensor_repro(mu, nu)};
    lhs = lie_derivative(X, lie_derivative(Y, mu, A), A) -
          lie_derivative(Y, lie_derivative(X, mu, A), A);
    rhs = lie_derivative(sn_bracket(X, Y, A), mu, A);
    if (!(lhs == rhs))
        return Defect{"[L_X,L_Y] = L_[X,Y]", two_tensor_repro(X, Y) + tensor_repro(mu)};
    lhs = lie_derivative(X, contract_form(Y, mu), A) -
          contract_form(Y, lie_derivative(X, mu, A));
    rhs = contract_form(sn_bracket(X, Y, A), mu);
    if (!(lhs == rhs))
        return Defect{"[L_X,i_Y] = i_[X,Y]", two_tensor_repro(X, Y) + tensor_repro(mu)};
    // duality oracle on 1-forms: (L_X mu)(Y) = a(X)(mu(Y)) - mu([X,Y])
    GrassmannElement mu1 = rnd_form(r, A, 1);
    if (!mu1.is_zero() && mu1.tensor_degree() == 1) {
        Scalar lhs2 = pairing(Y, lie_derivative(X, mu1, A));
        Scalar rhs2 = A.anchor_apply(X, pairing(Y, mu1)) - pairing(sn_bracket(X, Y, A), mu1);
        if (lhs2 != rhs2)
            return Defect{"dual pairing oracle for L_X", two_tensor_repro(X, Y)};
    }
    return std::nullopt;
}

std::optional<Defect> case_sj_jacobi(Runner& r) {
    const JacobiAlgebroid& J = jacobi_instance(r.rng());
    const AlgebroidSpec& A = J.algebroid;
    int maxd = std::min(r.cfg().max_tensor_degree, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd), Z = rnd_mv(r, A, maxd);
    int x = X.lie_degree(), y = Y.lie_degree();
    if (!(sj_bracket(X, Y, J) == sj_bracket(Y, X, J).scaled(Rational(-lie_sign(x, y)))))
        return Defect{"graded antisymmetry of [.,.]^Phi", two_tensor_repro(X, Y)};
    GrassmannElement lhs = sj_bracket(sj_bracket(X, Y, J), Z, J);
    GrassmannElement rhs = sj_bracket(X, sj_bracket(Y, Z, J), J) -
                           sj_bracket(Y, sj_bracket(X, Z, J), J).scaled(Rational(lie_sign(x, y)));
    if (!(lhs == rhs))
        return Defect{"graded Jacobi identity of [.,.]^Phi",
                      two_tensor_repro(X, Y) + tensor_repro(Z)};
    // Gerstenhaber-Jacobi rule with D~(X) = [X,1]
    GrassmannElement one = A.unit_element();
    GrassmannElement dtil = sj_bracket(X, one, J);
    lhs = sj_bracket(X, wedge(Y, Z), J);
    GrassmannElement t2 = wedge(Y, sj_bracket(X, Z, J));
    rhs = wedge(sj_bracket(X, Y, J), Z) + (lie_sign(x, y + 1) < 0 ? -t2 : t2) -
          wedge(wedge(dtil, Y), Z);
    if (!(lhs == rhs))
        return Defect{"(F) rule for [.,.]^Phi", two_tensor_repro(X, Y) + tensor_repro(Z)};
    // [X,1] = (-1)^x i_Phi X
    GrassmannElement expected = cocycle_contract(X, J).scaled(Rational(x % 2 != 0 ? -1 : 1));
    if (!(dtil == expected))
        return Defect{"[X,1] = (-1)^x i_Phi X", tensor_repro(X)};
    // restriction to sections is the plain bracket
    GrassmannElement s1 = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    GrassmannElement s2 = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    if (!(sj_bracket(s1, s2, J) == sn_bracket(s1, s2, A)))
        return Defect{"[.,.]^Phi restricted to sections", two_tensor_repro(s1, s2)};
    return std::nullopt;
}

std::optional<Defect> case_cartan_6(Runner& r) {
    const JacobiAlgebroid& J = jacobi_instance(r.rng());
    const AlgebroidSpec& A = J.algebroid;
    GrassmannElement mu = rnd_form(r, A, A.rank() - 1);
    GrassmannElement nu = rnd_form(r, A, A.rank() - 1);
    GrassmannElement X = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    GrassmannElement Y = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    if (!d_phi(d_phi(mu, J), J).is_zero())
        return Defect{"d^Phi(d^Phi(mu)) != 0", tensor_repro(mu)};
    int k = mu.is_zero() ? 0 : mu.tensor_degree();
    GrassmannElement lhs = d_phi(wedge(mu, nu), J);
    GrassmannElement t2 = wedge(mu, d_phi(nu, J));
    GrassmannElement rhs = wedge(d_phi(mu, J), nu) + (k % 2 != 0 ? -t2 : t2) -
                           wedge(wedge(J.cocycle, mu), nu);
    if (!(lhs == rhs))
        return Defect{"d^Phi Leibniz rule with cocycle correction", two_tensor_repro(mu, nu)};
    Scalar phiX = pairing(X, J.cocycle);
    lhs = lie_phi(X, wedge(mu, nu), J);
    rhs = wedge(lie_phi(X, mu, J), nu) + wedge(mu, lie_phi(X, nu, J)) -
          wedge(mu, nu).scaled(phiX);
    if (!(lhs == rhs))
        return Defect{"L^Phi product rule", two_tensor_repro(mu, nu)};
    lhs = lie_phi(X, contract_form(Y, mu), J) - contract_form(Y, lie_phi(X, mu, J));
    rhs = contract_form(sn_bracket(X, Y, A), mu);
    if (!(lhs == rhs))
        return Defect{"[L^Phi_X, i_Y] = i_[X,Y]", two_tensor_repro(X, Y) + tensor_repro(mu)};
    lhs = lie_phi(X, lie_phi(Y, mu, J), J) - lie_phi(Y, lie_phi(X, mu, J), J);
    rhs = lie_phi(sn_bracket(X, Y, A), mu, J);
    if (!(lhs == rhs))
        return Defect{"[L^Phi_X, L^Phi_Y] = L^Phi_[X,Y]",
                      two_tensor_repro(X, Y) + tensor_repro(mu)};
    // L^Phi_X mu = L_X mu + Phi(X) mu
    lhs = lie_phi(X, mu, J);
    rhs = lie_derivative(X, mu, A) + mu.scaled(phiX);
    if (!(lhs == rhs))
        return Defect{"L^Phi_X = L_X + Phi(X)", two_tensor_repro(X, mu)};
    return std::nullopt;
}

std::optional<Defect> case_theorem_8(Runner& r) {
    const JacobiAlgebroid& J = jacobi_instance(r.rng());
    const AlgebroidSpec& A = J.algebroid;
    int maxd = std::min(r.cfg().max_tensor_degree, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd), Z = rnd_mv(r, A, maxd);
    int x = X.lie_degree(), y = Y.lie_degree();
    static const std::vector<Rational> hs{Rational(0), Rational(1), Rational(-1), Rational(2),
                                          Rational(1, 2)};
    for (const Rational& h : hs) {
        auto br = [&](const GrassmannElement& a, const GrassmannElement& b) {
            return sj_bracket_h(a, b, J, h);
        };
        GrassmannElement defect = br(br(X, Y), Z) - br(X, br(Y, Z)) +
                                  br(Y, br(X, Z)).scaled(Rational(lie_sign(x, y)));
        if (!defect.is_zero())
            return Defect{"Theorem 8 deformation at h = " + to_string(h),
                          two_tensor_repro(X, Y) + tensor_repro(Z)};
    }
    return std::nullopt;
}

// ---- structural vs pointwise oracle -------------------------------------------

std::optional<Defect> case_dif_oracle(Runner& r) {
    static const AlgebroidSpec A = instances::tm(2);
    const Chart& chart = A.chart();
    GenList gens = A.section_gens();
    auto rnd_pair = [&](int deg) {
        GrassmannElement a1 = random_element(r.rng(), chart, gens, deg + 1, 1);
        GrassmannElement a2 = random_element(r.rng(), chart, gens, deg, 1);
        return FirstOrderOp::make(deg, a1, a2);
    };
    int a = r.rng().range(0, 2), b = r.rng().range(0, 2);
    FirstOrderOp A1 = rnd_pair(a), B1 = rnd_pair(b);
    FirstOrderOp structural = nr_structural_bracket(A1, B1, A);
    // pointwise route
    auto as_fn = [&](const FirstOrderOp& P, int deg) {
        FnOp base = P.part1.is_zero() ? FnOp::zero(chart, deg)
                                      : FnOp::from_multivector(P.part1);
        FnOp zo = P.part2.is_zero() ? FnOp::zero(chart, deg - 1)
                                    : FnOp::from_multivector(P.part2);
        return base + fn_wedge(FnOp::identity(chart), zo);
    };
    FnOp opA = as_fn(A1, a), opB = as_fn(B1, b);
    FnOp nr = fn_nr_bracket(opA, opB);
    if (a + b <= 3) {
        FirstOrderSplit s = split_first_order(nr);
        if (!(s.derivation_part == structural.part1) ||
            !(s.zero_order_part == structural.part2))
            return Defect{"pointwise NR bracket disagrees with the structural formula",
                          two_tensor_repro(A1.part1, A1.part2) +
                              two_tensor_repro(B1.part1, B1.part2)};
    }
    // embedding route through the extension algebroid
    static const ExtensionAlgebroid E = ExtensionAlgebroid::make(A);
    GrassmannElement lhs = sj_bracket(E.embed_pair(A1.part1, A1.part2),
                                      E.embed_pair(B1.part1, B1.part2), E.ext);
    GrassmannElement rhs = E.embed_pair(structural.part1, structural.part2);
    if (!(lhs == rhs))
        return Defect{"structural bracket disagrees with the extension embedding",
                      two_tensor_repro(A1.part1, B1.part1)};
    return std::nullopt;
}

// ---- lifts -----------------------------------------------------------------

struct LiftSetup {
    JacobiAlgebroid J;
    TotalSpace ts;
};

const LiftSetup& lift_instance(Rng& rng) {
    static const std::vector<LiftSetup> insts = [] {
        std::vector<LiftSetup> v;
        for (const JacobiAlgebroid& J :
             {instances::tm_phi(1), instances::tm_phi(2), instances::aff1_phi(),
              instances::so3_ext(), instances::tm_phi_exact_r2()})
            v.push_back({J, TotalSpace::make(J.algebroid)});
        return v;
    }();
    return insts[size_t(rng.below(insts.size()))];
}

std::optional<Defect> case_lifts_complete(Runner& r) {
    const LiftSetup& L = lift_instance(r.rng());
    const AlgebroidSpec& A = L.J.algebroid;
    const TotalSpace& ts = L.ts;
    int maxd = std::min(2, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd);
    const AlgebroidSpec& T = ts.tangent();
    // (l1) and (l2)
    if (!(ts.complete_lift(sn_bracket(X, Y, A)) ==
          sn_bracket(ts.complete_lift(X), ts.complete_lift(Y), T)))
        return Defect{"[X,Y]^c = [X^c,Y^c]", two_tensor_repro(X, Y)};
    if (!(ts.vertical_lift(sn_bracket(X, Y, A)) ==
          sn_bracket(ts.complete_lift(X), ts.vertical_lift(Y), T)))
        return Defect{"[X^c,Y^v] = [X,Y]^v", two_tensor_repro(X, Y)};
    // defining equation (b) on sections and (a) on functions
    GrassmannElement Xs = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    GrassmannElement mu = random_element(r.rng(), A.chart(), A.form_gens(), 1, 1);
    Scalar lhs = T.anchor_apply(ts.complete_lift(Xs), ts.iota(mu));
    Scalar rhs = ts.iota(lie_derivative(Xs, mu, A));
    if (lhs != rhs)
        return Defect{"X^c(iota_mu) = iota_{L_X mu}", two_tensor_repro(Xs, mu)};
    Scalar f = random_scalar(r.rng(), A.chart(), 2);
    if (!(ts.complete_lift(A.scalar_element(f)).scalar_part() ==
          ts.iota(A.differential_of(f))))
        return Defect{"f^c = iota_{df}", "f = " + f.str()};
    // (c): the lift respects the wedge splitting
    if (!(ts.complete_lift(wedge(X, Y)) ==
          wedge(ts.complete_lift(X), ts.vertical_lift(Y)) +
              wedge(ts.vertical_lift(X), ts.complete_lift(Y))))
        return Defect{"(X^Y)^c = X^c^Y^v + X^v^Y^c", two_tensor_repro(X, Y)};
    // bracket identities with iota_Phi
    GrassmannElement iphi =
        GrassmannElement::from_scalar(ts.chart(), T.section_gens(), ts.iota(L.J.cocycle));
    GrassmannElement lhs2 = sn_bracket(iphi, ts.vertical_lift(X), T);
    GrassmannElement rhs2 = -ts.vertical_lift(cocycle_contract(X, L.J));
    if (!(lhs2 == rhs2))
        return Defect{"[iota_Phi, X^v] = -(i_Phi X)^v", tensor_repro(X)};
    lhs2 = sn_bracket(iphi, ts.complete_lift(X), T);
    rhs2 = -ts.complete_lift(cocycle_contract(X, L.J));
    if (!(lhs2 == rhs2))
        return Defect{"[iota_Phi, X^c] = -(i_Phi X)^c", tensor_repro(X)};
    return std::nullopt;
}

// operator action of a first-order pair on a total-space function
Scalar pair_apply(const FirstOrderOp& P, const Scalar& g, const AlgebroidSpec& T) {
    Scalar out = T.anchor_apply(P.part1, g);
    out += P.part2.scalar_part() * g;
    return out;
}

std::optional<Defect> case_theorem_11(Runner& r) {
    const LiftSetup& L = lift_instance(r.rng());
    const AlgebroidSpec& A = L.J.algebroid;
    const TotalSpace& ts = L.ts;
    const AlgebroidSpec& T = ts.tangent();
    int maxd = std::min(2, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd);
    if (X.is_zero() || Y.is_zero())
        return std::nullopt;
    FirstOrderOp hatX = jacobi_lift(X, L.J, ts);
    FirstOrderOp hatY = jacobi_lift(Y, L.J, ts);
    // (d)
    FirstOrderOp lhs = nr_structural_bracket(hatX, hatY, T);
    FirstOrderOp rhs = jacobi_lift(sj_bracket(X, Y, L.J), L.J, ts);
    if (!(lhs == rhs))
        return Defect{"[X^,Y^]^NR = ([X,Y]^Phi)^", two_tensor_repro(X, Y)};
    // (a) on functions
    Scalar f = random_scalar(r.rng(), A.chart(), 2);
    FirstOrderOp hatf = jacobi_lift(A.scalar_element(f), L.J, ts);
    GrassmannElement form_f = GrassmannElement::from_scalar(A.chart(), A.form_gens(), f);
    Scalar iota_dphi = ts.iota(d_phi(form_f, L.J));
    if (!(hatf.part1.scalar_part() == iota_dphi) || !hatf.part2.is_zero())
        return Defect{"f^ = iota_{d^Phi f}", "f = " + f.str()};
    // (b) on sections
    GrassmannElement Xs = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    GrassmannElement mu = random_element(r.rng(), A.chart(), A.form_gens(), 1, 1);
    FirstOrderOp hatXs = jacobi_lift(Xs, L.J, ts);
    Scalar lhs2 = pair_apply(hatXs, ts.iota(mu), T);
    Scalar rhs2 = ts.iota(lie_phi(Xs, mu, L.J));
    if (lhs2 != rhs2)
        return Defect{"X^(iota_mu) = iota_{L^Phi_X mu}", two_tensor_repro(Xs, mu)};
    if (!(pair_apply(hatXs, Scalar::constant(ts.chart(), 1), T) ==
          ts.pull_back(pairing(Xs, L.J.cocycle))))
        return Defect{"X^(1) = Phi(X) o tau", tensor_repro(Xs)};
    // (c) wedge rule
    FirstOrderOp vY{Y.lie_degree(), ts.vertical_lift(Y),
                    GrassmannElement::zero(ts.chart(), T.section_gens())};
    FirstOrderOp vX{X.lie_degree(), ts.vertical_lift(X),
                    GrassmannElement::zero(ts.chart(), T.section_gens())};
    FirstOrderOp lhs3 = jacobi_lift(wedge(X, Y), L.J, ts);
    FirstOrderOp rhs3 = first_order_wedge(hatX, vY) + first_order_wedge(vX, hatY) -
                        first_order_wedge(vX, vY).scaled_by(ts.iota(L.J.cocycle));
    if (!(lhs3 == rhs3))
        return Defect{"(X^Y)^ wedge rule", two_tensor_repro(X, Y)};
    return std::nullopt;
}

std::optional<Defect> case_theorem_12(Runner& r) {
    const LiftSetup& L = lift_instance(r.rng());
    const AlgebroidSpec& A = L.J.algebroid;
    const TotalSpace& ts = L.ts;
    const AlgebroidSpec& T = ts.tangent();
    int maxd = std::min(2, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd);
    if (X.is_zero() || Y.is_zero())
        return std::nullopt;
    GrassmannElement lhs = sn_bracket(poisson_lift(X, L.J, ts), poisson_lift(Y, L.J, ts), T);
    GrassmannElement rhs = poisson_lift(sj_bracket(X, Y, L.J), L.J, ts);
    if (!(lhs == rhs))
        return Defect{"[X^c_Phi, Y^c_Phi]^SN = ([X,Y]^Phi)^c_Phi", two_tensor_repro(X, Y)};
    Scalar f = random_scalar(r.rng(), A.chart(), 2);
    GrassmannElement form_f = GrassmannElement::from_scalar(A.chart(), A.form_gens(), f);
    if (!(poisson_lift(A.scalar_element(f), L.J, ts).scalar_part() ==
          ts.iota(d_phi(form_f, L.J))))
        return Defect{"f^c_Phi = iota_{d^Phi f}", "f = " + f.str()};
    GrassmannElement Xs = random_element(r.rng(), A.chart(), A.section_gens(), 1, 1);
    GrassmannElement mu = random_element(r.rng(), A.chart(), A.form_gens(), 1, 1);
    Scalar lhs2 = T.anchor_apply(poisson_lift(Xs, L.J, ts), ts.iota(mu));
    if (lhs2 != ts.iota(lie_phi(Xs, mu, L.J)))
        return Defect{"X^c_Phi(iota_mu) = iota_{L^Phi_X mu}", two_tensor_repro(Xs, mu)};
    // homogeneity of the lift
    if (!is_homogeneous_multivector(poisson_lift(X, L.J, ts), ts))
        return Defect{"Poisson lift is not Liouville-homogeneous", tensor_repro(X)};
    return std::nullopt;
}

std::optional<Defect> case_theorem_7(Runner& r) {
    const LiftSetup& L = lift_instance(r.rng());
    const TotalSpace& ts = L.ts;
    const AlgebroidSpec& T = ts.tangent();
    const AlgebroidSpec& A = L.J.algebroid;
    int maxd = std::min(2, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd);
    if (X.is_zero() || Y.is_zero())
        return std::nullopt;
    FirstOrderOp hatX = jacobi_lift(X, L.J, ts);
    FirstOrderOp hatY = jacobi_lift(Y, L.J, ts);
    GrassmannElement nabla = ts.liouville();
    if (!z_homogeneous_check(hatX, nabla, T))
        return Defect{"Jacobi lift is not Liouville-homogeneous", tensor_repro(X)};
    GrassmannElement lhs = sn_bracket(h_z_map(hatX, nabla), h_z_map(hatY, nabla), T);
    GrassmannElement rhs = h_z_map(nr_structural_bracket(hatX, hatY, T), nabla);
    if (!(lhs == rhs))
        return Defect{"H_Z homomorphism identity", two_tensor_repro(X, Y)};
    return std::nullopt;
}

std::optional<Defect> case_theorem_9(Runner& r) {
    static const std::vector<Poissonization> insts = [] {
        std::vector<Poissonization> v;
        for (const JacobiAlgebroid& J :
             {instances::tm_phi(1), instances::tm_phi(2), instances::aff1_phi(),
              instances::so3_ext(), instances::tm_phi_exact_r2()})
            v.push_back(Poissonization::make(J));
        return v;
    }();
    const Poissonization& P = insts[size_t(r.rng().below(insts.size()))];
    const AlgebroidSpec& A = P.source().algebroid;
    int maxd = std::min(r.cfg().max_tensor_degree, A.rank());
    GrassmannElement X = rnd_mv(r, A, maxd), Y = rnd_mv(r, A, maxd);
    GrassmannElement lhs = sn_bracket(P.tilde_embed(X), P.tilde_embed(Y), P.extended());
    GrassmannElement rhs = P.tilde_embed(sj_bracket(X, Y, P.source()));
    if (!(lhs == rhs))
        return Defect{"Poissonization embedding identity", two_tensor_repro(X, Y)};
    return std::nullopt;
}

// ---- Theorem 13 / Koszul ------------------------------------------------------

const JacobiFormSetup& form_setup(Rng& rng) {
    static const std::vector<JacobiFormSetup> insts = [] {
        std::vector<JacobiFormSetup> v;
        for (const JacobiStructureInstance& s :
             {instances::contact_r3(), instances::poisson_r2(), instances::gamma_only_r1()})
            v.push_back(JacobiFormSetup::make(s.lambda, s.gamma, s.algebroid));
        return v;
    }();
    return insts[size_t(rng.below(insts.size()))];
}

std::optional<Defect> case_theorem_13(Runner& r) {
    const JacobiFormSetup& s = form_setup(r.rng());
    const AlgebroidSpec& E = s.E.ext.algebroid;
    GrassmannElement mu = random_element(r.rng(), E.chart(), E.form_gens(), 1, 2);
    GrassmannElement nu = random_element(r.rng(), E.chart(), E.form_gens(), 1, 2);
    GrassmannElement a = jacobi_form_bracket_induced(s, mu, nu);
    GrassmannElement b = jacobi_form_bracket_br(s, mu, nu);
    GrassmannElement c = jacobi_form_bracket_jb(s, mu, nu);
    if (!(a == b))
        return Defect{"induced bracket differs from the Lie-derivative formula",
                      two_tensor_repro(mu, nu)};
    if (!(a == c))
        return Defect{"induced bracket differs from the componentwise formula",
                      two_tensor_repro(mu, nu)};
    // [d^Phi f0, d^Phi f1] = d^Phi <X, d^Phi f0 ^ d^Phi f1>, one random
    // coordinate pair per case (the acceptance run sweeps all pairs)
    const Chart& chart = E.chart();
    int i = r.rng().range(0, chart.coord_count() - 1);
    int j = r.rng().range(0, chart.coord_count() - 1);
    auto dphi_f = [&](int k) {
        return d_phi(GrassmannElement::from_scalar(chart, E.form_gens(),
                                                   Scalar::coordinate(chart,
                                                                      chart.coord_name(k))),
                     s.E.ext);
    };
    GrassmannElement m0 = dphi_f(i), m1 = dphi_f(j);
    GrassmannElement lhs = jacobi_form_bracket_induced(s, m0, m1);
    Scalar inner = pairing(s.X, wedge(m0, m1));
    GrassmannElement rhs =
        d_phi(GrassmannElement::from_scalar(chart, E.form_gens(), inner), s.E.ext);
    if (!(lhs == rhs))
        return Defect{"exact-pair identity (lo) on coordinates " + chart.coord_name(i) + "," +
                          chart.coord_name(j),
                      two_tensor_repro(m0, m1)};
    return std::nullopt;
}

std::optional<Defect> case_induced_bracket(Runner& r) {
    const JacobiFormSetup& s = form_setup(r.rng());
    const AlgebroidSpec& E = s.E.ext.algebroid;
    GrassmannElement mu = random_element(r.rng(), E.chart(), E.form_gens(), 1, 1);
    GrassmannElement nu = random_element(r.rng(), E.chart(), E.form_gens(), 1, 1);
    Scalar f = random_scalar(r.rng(), E.chart(), 1);
    // Leibniz-type rule with the Hamiltonian action in the last slot
    std::array<GrassmannElement, 2> args{mu, nu.scaled(f)};
    GrassmannElement lhs = induced_bracket(s.lift, args, s.ts);
    std::array<GrassmannElement, 2> plain{mu, nu};
    std::array<GrassmannElement, 1> head{mu};
    GrassmannElement rhs = induced_bracket(s.lift, plain, s.ts).scaled(f) +
                           nu.scaled(hamiltonian_apply(s.lift, head, f, s.ts));
    if (!(lhs == rhs))
        return Defect{"Leibniz rule of the induced bracket", two_tensor_repro(mu, nu)};
    return std::nullopt;
}

std::optional<Defect> case_koszul(Runner& r) {
    static const std::vector<PoissonInstance> insts = {instances::poisson_constant_r2(),
                                                       instances::poisson_so3_linear()};
    const PoissonInstance& P = insts[size_t(r.rng().below(insts.size()))];
    const AlgebroidSpec& A = P.algebroid;
    if (!sn_bracket(P.lambda, P.lambda, A).is_zero())
        return Defect{"instance is not Poisson", tensor_repro(P.lambda)};
    GrassmannElement mu = rnd_form(r, A, 1);
    GrassmannElement nu = rnd_form(r, A, 1);
    if (mu.is_zero() || mu.tensor_degree() != 1 || nu.is_zero() || nu.tensor_degree() != 1)
        return std::nullopt;
    if (!(koszul_bracket(mu, nu, P.lambda, A) == koszul_bracket_p8(mu, nu, P.lambda, A)))
        return Defect{"(P10) disagrees with (P8) on 1-forms", two_tensor_repro(mu, nu)};
    GrassmannElement any = rnd_form(r, A, A.rank());
    if (!generating_operator(generating_operator(any, P.lambda, A), P.lambda, A).is_zero())
        return Defect{"generating operator does not square to zero", tensor_repro(any)};
    // (P12) for 1-forms
    GrassmannElement lhs = exterior_d(koszul_bracket(mu, nu, P.lambda, A), A);
    GrassmannElement rhs = koszul_bracket(exterior_d(mu, A), nu, P.lambda, A) +
                           koszul_bracket(mu, exterior_d(nu, A), P.lambda, A);
    if (!(lhs == rhs))
        return Defect{"(P12) compatibility of d with the Koszul bracket",
                      two_tensor_repro(mu, nu)};
    // [df,dg] = d{f,g}
    Scalar f = random_scalar(r.rng(), A.chart(), 2), g = random_scalar(r.rng(), A.chart(), 2);
    GrassmannElement df = A.differential_of(f), dg = A.differential_of(g);
    Scalar fg = pairing(P.lambda, wedge(df, dg));
    if (!(koszul_bracket(df, dg, P.lambda, A) == A.differential_of(fg)))
        return Defect{"[df,dg] = d{f,g}", "f = " + f.str() + "\ng = " + g.str() + "\n"};
    return std::nullopt;
}

// ---- bialgebroid ---------------------------------------------------------------

DualPair random_pair(Rng& rng) {
    // arbitrary (not necessarily compatible) structures on dual bundles
    Chart chart = Chart::make({"x"});
    std::vector<std::string> frames{"e1", "e2"};
    std::vector<std::string> dual_frames{"eps1", "eps2"};
    auto rnd_struct = [&](std::vector<std::string> names) {
        std::vector<std::vector<Scalar>> anchor;
        for (int i = 0; i < 2; ++i)
            anchor.push_back({random_scalar(rng, chart, 1, 1)});
        std::map<std::tuple<int, int, int>, Scalar> c;
        for (int k = 0; k < 2; ++k)
            c[{0, 1, k}] = random_scalar(rng, chart, 1, 1);
        AlgebroidSpec spec(chart, std::move(names), {"x"}, std::move(anchor), c);
        GrassmannElement phi(chart, spec.form_gens());
        for (int i = 0; i < 2; ++i)
            phi.add_term({i}, random_scalar(rng, chart, 1, 1));
        return JacobiAlgebroid::make_unchecked(spec, phi);
    };
    return DualPair::make(rnd_struct(frames), rnd_struct(dual_frames));
}

std::optional<Defect> case_bialgebroid_bi1(Runner& r) {
    DualPair P = random_pair(r.rng());
    const AlgebroidSpec& A = P.primal.algebroid;
    auto rnd = [&](int deg) {
        return random_element(r.rng(), A.chart(), A.section_gens(), deg, 1);
    };
    GrassmannElement X = rnd(r.rng().range(0, 2)), Y = rnd(r.rng().range(0, 2)),
                     Z = rnd(r.rng().range(0, 2));
    auto [lhs, rhs] = wedge_reduction_sides(X, Y, Z, P);
    if (!(lhs == rhs))
        return Defect{"wedge-reduction identity", two_tensor_repro(X, Y) + tensor_repro(Z)};
    // degree bookkeeping of d_*
    if (!X.is_zero() && !d_star(X, P).is_zero() &&
        d_star(X, P).tensor_degree() != X.tensor_degree() + 1)
        return Defect{"d_* does not raise the degree by one", tensor_repro(X)};
    return std::nullopt;
}

std::optional<Defect> case_bialgebroid_16(Runner& r) {
    static const std::vector<DualPair> pairs = [] {
        std::vector<DualPair> v;
        for (const JacobiStructureInstance& s :
             {instances::poisson_r2(), instances::gamma_only_r1(), instances::contact_r3()}) {
            ExtensionAlgebroid E = ExtensionAlgebroid::make(s.algebroid);
            GrassmannElement X = E.embed_pair(s.lambda, s.gamma);
            v.push_back(triangular_construct(X, E.ext));
        }
        return v;
    }();
    size_t i = size_t(r.rng().below(pairs.size()));
    int bound = pairs[i].primal.algebroid.rank() >= 4 ? 1 : 2;
    BialgebroidReport rep = bialgebroid_check(pairs[i], 2, r.rng().next(), bound, 2);
    if (!rep.pass)
        return Defect{"triangular pair failed the compatibility check: " + rep.defect_where,
                      rep.defect_value};
    return std::nullopt;
}

// ---- registry -------------------------------------------------------------------

struct SuiteEntry {
    const char* name;
    CaseFn fn;
};

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries = {
        {"scalar-leibniz", case_scalar_leibniz},
        {"scalar-roundtrip", case_scalar_roundtrip},
        {"gerstenhaber-jacobi", case_g_jacobi},
        {"nr-jacobi", case_nr_jacobi},
        {"wedge-insertion", case_wedge_insertion},
        {"theorem-1", case_theorem_1},
        {"theorem-2", case_theorem_2},
        {"sn-jacobi", case_sn_jacobi},
        {"cartan-4", case_cartan_4},
        {"sj-jacobi", case_sj_jacobi},
        {"cartan-6", case_cartan_6},
        {"theorem-8", case_theorem_8},
        {"dif-oracle", case_dif_oracle},
        {"lifts-complete", case_lifts_complete},
        {"theorem-7", case_theorem_7},
        {"theorem-9", case_theorem_9},
        {"theorem-11", case_theorem_11},
        {"theorem-12", case_theorem_12},
        {"theorem-13", case_theorem_13},
        {"induced-bracket", case_induced_bracket},
        {"koszul", case_koszul},
        {"bialgebroid-bi1", case_bialgebroid_bi1},
        {"bialgebroid-16", case_bialgebroid_16},
    };
    return entries;
}

} // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& e : registry())
        names.push_back(e.name);
    return names;
}

std::string SuiteReport::text() const {
    std::ostringstream os;
    os << "suite " << config.suite << " seed=" << config.seed << " cases=" << config.cases
       << " max-degree=" << config.max_tensor_degree
       << " max-coeff-degree=" << config.max_coeff_degree << "\n";
    os << body;
    os << (pass ? "PASS" : "FAIL") << " " << (cases_run - failures) << "/" << cases_run
       << " cases\n";
    if (!repro.empty())
        os << "--- reproduction ---\n" << repro;
    return os.str();
}

SuiteReport run_suite(const SuiteConfig& config) {
    for (const auto& e : registry())
        if (config.suite == e.name) {
            Runner r(config);
            drive(r, e.fn);
            return r.finish();
        }
    throw InputError("unknown suite '" + config.suite + "'");
}

// ---- Theorem 1 corpus tables ----------------------------------------------------

namespace {

std::vector<AlgebraTable> theorem1_associative_corpus() {
    std::vector<AlgebraTable> v;
    // 2x2 matrix units: e{rc} with index 2r+c
    {
        AlgebraTable t{"mat2", 4, false, {}};
        for (int r0 = 0; r0 < 2; ++r0)
            for (int c0 = 0; c0 < 2; ++c0)
                for (int r1 = 0; r1 < 2; ++r1)
                    for (int c1 = 0; c1 < 2; ++c1)
                        if (c0 == r1)
                            t.entries.push_back({2 * r0 + c0, 2 * r1 + c1, 2 * r0 + c1, 1});
        v.push_back(std::move(t));
    }
    // upper triangular 2x2: e11, e12, e22
    v.push_back({"upper-triangular-2", 3, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}});
    // truncated polynomials Q[s]/(s^3): 1, s, s^2
    v.push_back({"trunc-poly-3", 3, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1},
                  {2, 0, 2, 1}, {1, 1, 2, 1}}});
    // diagonal Q^3
    v.push_back({"diagonal-3", 3, false, {{0, 0, 0, 1}, {1, 1, 1, 1}, {2, 2, 2, 1}}});
    // complex numbers Q[i]
    v.push_back({"gauss-rationals", 2, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, -1}}});
    // quaternions 1,i,j,k
    v.push_back({"quaternions", 4, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
                  {1, 0, 1, 1}, {2, 0, 2, 1}, {3, 0, 3, 1},
                  {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
                  {1, 2, 3, 1}, {2, 1, 3, -1},
                  {2, 3, 1, 1}, {3, 2, 1, -1},
                  {3, 1, 2, 1}, {1, 3, 2, -1}}});
    // non-examples: cross product as a product, a twisted quaternion table,
    // and perturbed versions of the positives
    v.push_back({"cross-product-as-product", 3, false,
                 {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1}, {2, 1, 0, -1},
                  {2, 0, 1, 1}, {0, 2, 1, -1}}});
    v.push_back({"quaternions-twisted", 4, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {0, 3, 3, 1},
                  {1, 0, 1, 1}, {2, 0, 2, 1}, {3, 0, 3, 1},
                  {1, 1, 0, -1}, {2, 2, 0, -1}, {3, 3, 0, -1},
                  {1, 2, 3, 1}, {2, 1, 3, 1},
                  {2, 3, 1, 1}, {3, 2, 1, -1},
                  {3, 1, 2, 1}, {1, 3, 2, -1}}});
    v.push_back({"trunc-poly-broken", 3, false,
                 {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 2, 2, 1},
                  {2, 0, 2, 1}, {1, 1, 0, 1}}});
    v.push_back({"nilpotent-broken", 2, false, {{0, 0, 1, 1}, {1, 1, 0, 1}}});
    v.push_back({"asym-broken", 2, false, {{0, 0, 0, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}}});
    return v;
}

std::vector<AlgebraTable> theorem1_lie_corpus() {
    std::vector<AlgebraTable> v;
    v.push_back({"abelian-2", 2, true, {}});
    v.push_back({"nonabelian-2", 2, true, {{0, 1, 0, 1}}});
    v.push_back({"so3", 3, true, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}}});
    v.push_back({"heisenberg", 3, true, {{0, 1, 2, 1}}});
    v.push_back({"sl2", 3, true, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}});
    v.push_back({"solvable-3", 3, true, {{0, 1, 1, 1}, {0, 2, 2, 1}}});
    // non-Lie skew tables with Jacobi violations
    v.push_back({"so3-sign-flip", 3, true, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, -1}}});
    v.push_back({"bad-jacobi-a", 3, true, {{0, 1, 2, 1}, {0, 2, 0, 1}}});
    v.push_back({"bad-jacobi-b", 3, true, {{0, 1, 0, 1}, {1, 2, 1, 1}, {0, 2, 2, 1}}});
    v.push_back({"bad-jacobi-c", 4, true,
                 {{0, 1, 2, 1}, {2, 3, 0, 1}, {1, 3, 3, 1}}});
    v.push_back({"bad-jacobi-d", 3, true, {{0, 1, 1, 1}, {1, 2, 2, 1}, {0, 2, 0, -1}}});
    return v;
}

} // namespace

} // namespace schouten
