#include "schouten/bialgebroid.hpp"

#include "schouten/random_gen.hpp"

#include <sstream>

namespace schouten {

DualPair DualPair::make(JacobiAlgebroid primal, JacobiAlgebroid dual) {
    if (primal.algebroid.chart() != dual.algebroid.chart())
        throw InputError("dual pair must share one chart");
    if (primal.algebroid.rank() != dual.algebroid.rank())
        throw InputError("dual pair must share the rank");
    return DualPair{std::move(primal), std::move(dual)};
}

namespace {

std::vector<int> identity_map(int r) {
    std::vector<int> m(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i)
        m[size_t(i)] = i;
    return m;
}

} // namespace

GrassmannElement as_dual_form(const GrassmannElement& X, const DualPair& P) {
    return X.transported(P.dual.algebroid.chart(), P.dual.algebroid.form_gens(),
                         identity_map(P.primal.algebroid.rank()));
}

GrassmannElement as_primal_multivector(const GrassmannElement& mu, const DualPair& P) {
    return mu.transported(P.primal.algebroid.chart(), P.primal.algebroid.section_gens(),
                          identity_map(P.primal.algebroid.rank()));
}

GrassmannElement d_star(const GrassmannElement& X, const DualPair& P) {
    return as_primal_multivector(d_phi(as_dual_form(X, P), P.dual), P);
}

GrassmannElement bialgebroid_defect(const GrassmannElement& X, const GrassmannElement& Y,
                                    const DualPair& P) {
    GrassmannElement out = P.primal.algebroid.zero_section();
    for (const auto& [dx, Xc] : X.components()) {
        int sign = dx % 2 != 0 ? 1 : -1; // (-1)^x with x = dx-1
        out += d_star(sj_bracket(Xc, Y, P.primal), P);
        out -= sj_bracket(d_star(Xc, P), Y, P.primal);
        out -= sj_bracket(Xc, d_star(Y, P), P.primal).scaled(Rational(sign));
    }
    return out;
}

std::pair<GrassmannElement, GrassmannElement> wedge_reduction_sides(
    const GrassmannElement& X, const GrassmannElement& Y, const GrassmannElement& Z,
    const DualPair& P) {
    const JacobiAlgebroid& J = P.primal;
    const int x = X.lie_degree(), y = Y.lie_degree();
    const int sx = x % 2 != 0 ? -1 : 1;
    auto ds = [&](const GrassmannElement& e) { return d_star(e, P); };
    auto br = [&](const GrassmannElement& a, const GrassmannElement& b) {
        return sj_bracket(a, b, J);
    };
    GrassmannElement one = J.algebroid.unit_element();
    GrassmannElement yz = wedge(Y, Z);

    GrassmannElement lhs = ds(br(X, yz)) - br(ds(X), yz) - br(X, ds(yz)).scaled(Rational(sx));

    GrassmannElement term1 =
        wedge(ds(br(X, Y)) - br(ds(X), Y) - br(X, ds(Y)).scaled(Rational(sx)), Z);
    GrassmannElement term2 =
        wedge(Y, ds(br(X, Z)) - br(ds(X), Z) - br(X, ds(Z)).scaled(Rational(sx)));
    int s2 = (x % 2 != 0 && (y + 1) % 2 != 0) ? -1 : 1; // (-1)^{x(y+1)}
    GrassmannElement dtil_X = br(X, one);               // D~(X) = [X,1]
    GrassmannElement x0 = ds(one);
    GrassmannElement term3 =
        wedge(ds(dtil_X) - br(ds(X), one) - br(X, x0).scaled(Rational(sx)), yz);
    GrassmannElement rhs = term1 + term2.scaled(Rational(s2)) - term3;
    return {std::move(lhs), std::move(rhs)};
}

std::string BialgebroidReport::text() const {
    std::ostringstream os;
    os << "bialgebroid check: depth=" << depth << " seed=" << seed
       << " coeff-degree-bound=" << coefficient_degree_bound << "\n";
    if (pass) {
        os << "PASS: stage 1 (degree-0 sufficiency probes) and stage 2 (random spot checks)\n";
    } else {
        os << "FAIL at stage " << stage << ": " << defect_where << "\n";
        os << "  defect = " << defect_value << "\n";
    }
    return os.str();
}

BialgebroidReport bialgebroid_check(const DualPair& P, int depth, std::uint64_t seed,
                                    int coeff_degree_bound, int stage2_cases) {
    BialgebroidReport rep;
    rep.depth = depth;
    rep.seed = seed;
    rep.coefficient_degree_bound = coeff_degree_bound;
    const AlgebroidSpec& A = P.primal.algebroid;
    const Chart& chart = A.chart();
    const int r = A.rank();

    // all monomials of total degree <= bound
    std::vector<Scalar> monos;
    std::vector<int> exps(static_cast<size_t>(chart.coord_count()), 0);
    std::function<void(int, int)> enumerate = [&](int pos, int remaining) {
        if (pos == chart.coord_count()) {
            monos.push_back(Scalar::monomial(chart, Monomial{exps, 0}, 1));
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[size_t(pos)] = e;
            enumerate(pos + 1, remaining - e);
            exps[size_t(pos)] = 0;
        }
    };
    enumerate(0, coeff_degree_bound);

    auto fail = [&](int stage, const std::string& where, const GrassmannElement& defect) {
        rep.pass = false;
        rep.stage = stage;
        rep.defect_where = where;
        rep.defect_value = defect.str();
    };

    // stage 1: sections against sections, and functions/sections against 1
    GrassmannElement one = A.unit_element();
    for (int i = 0; i < r && rep.pass; ++i)
        for (int j = 0; j < r && rep.pass; ++j)
            for (size_t a = 0; a < monos.size() && rep.pass; ++a)
                for (size_t b = 0; b < monos.size(); ++b) {
                    GrassmannElement X = A.section(i).scaled(monos[a]);
                    GrassmannElement Y = A.section(j).scaled(monos[b]);
                    GrassmannElement defect = bialgebroid_defect(X, Y, P);
                    if (!defect.is_zero()) {
                        std::ostringstream os;
                        os << "stage 1 pair X=" << X.str() << " Y=" << Y.str();
                        fail(1, os.str(), defect);
                        break;
                    }
                }
    for (size_t a = 0; a < monos.size() && rep.pass; ++a) {
        GrassmannElement X = A.scalar_element(monos[a]);
        GrassmannElement defect = bialgebroid_defect(X, one, P);
        if (!defect.is_zero())
            fail(1, "stage 1 function against unit: X=" + X.str(), defect);
    }
    for (int i = 0; i < r && rep.pass; ++i)
        for (size_t a = 0; a < monos.size() && rep.pass; ++a) {
            GrassmannElement X = A.section(i).scaled(monos[a]);
            GrassmannElement defect = bialgebroid_defect(X, one, P);
            if (!defect.is_zero())
                fail(1, "stage 1 section against unit: X=" + X.str(), defect);
        }
    if (!rep.pass)
        return rep;

    // stage 2: random spot checks at higher degrees plus the wedge-reduction
    // identity, term for term
    Rng rng(seed);
    for (int c = 0; c < stage2_cases && rep.pass; ++c) {
        int dx = rng.range(0, std::min(depth + 1, r));
        int dy = rng.range(0, std::max(0, std::min(depth + 1 - dx, r)));
        GrassmannElement X = random_element(rng, chart, A.section_gens(), dx, 1);
        GrassmannElement Y = random_element(rng, chart, A.section_gens(), dy, 1);
        GrassmannElement defect = bialgebroid_defect(X, Y, P);
        if (!defect.is_zero()) {
            fail(2, "stage 2 random pair X=" + X.str() + " Y=" + Y.str(), defect);
            break;
        }
        GrassmannElement Z = random_element(rng, chart, A.section_gens(),
                                            rng.range(0, std::min(2, r)), 1);
        auto [lhs, rhs] = wedge_reduction_sides(X, Y, Z, P);
        if (!(lhs == rhs)) {
            fail(2, "stage 2 wedge-reduction identity", lhs - rhs);
            break;
        }
    }
    return rep;
}

DualPair triangular_construct(const GrassmannElement& X, const JacobiAlgebroid& J,
                              std::vector<std::string> dual_frame_names) {
    const AlgebroidSpec& A = J.algebroid;
    if (!X.is_zero() && X.tensor_degree() != 2)
        throw InputError("triangular_construct expects a bisection (lie degree 1)");
    if (!sj_bracket(X, X, J).is_zero())
        throw InputError("not a Jacobi element: [X,X]^Phi != 0");
    const int r = A.rank();
    if (dual_frame_names.empty())
        for (int i = 0; i < r; ++i)
            dual_frame_names.push_back("eps" + std::to_string(i + 1));
    if (int(dual_frame_names.size()) != r)
        throw InputError("need one dual frame name per frame");

    // dual anchor a_*(eps^i) = a(i_{eps^i} X)
    std::vector<std::vector<Scalar>> anchor;
    for (int i = 0; i < r; ++i) {
        GrassmannElement xmu = contract_multivector(A.form(i), X);
        std::vector<Scalar> row;
        for (const auto& coord : A.anchor_coords())
            row.push_back(A.anchor_apply(xmu, Scalar::coordinate(A.chart(), coord)));
        anchor.push_back(std::move(row));
    }
    // dual structure functions from the bracket generated by X
    std::map<std::tuple<int, int, int>, Scalar> c;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            GrassmannElement xmu = contract_multivector(A.form(i), X);
            GrassmannElement xnu = contract_multivector(A.form(j), X);
            Scalar inner = pairing(X, wedge(A.form(i), A.form(j)));
            GrassmannElement br =
                lie_phi(xmu, A.form(j), J) - lie_phi(xnu, A.form(i), J) -
                d_phi(GrassmannElement::from_scalar(A.chart(), A.form_gens(), inner), J);
            for (int k = 0; k < r; ++k) {
                Scalar ck = br.coeff({k});
                if (!ck.is_zero())
                    c[{i, j, k}] = ck;
            }
        }
    AlgebroidSpec dual_spec(A.chart(), std::move(dual_frame_names), A.anchor_coords(),
                            std::move(anchor), c);
    // dual cocycle -X_Phi = -i_Phi X, a section of L = 1-form over L*
    GrassmannElement phi_star = cocycle_contract(X, J);
    GrassmannElement dual_cocycle(dual_spec.chart(), dual_spec.form_gens());
    for (const auto& [idx, coeff] : phi_star.terms())
        dual_cocycle.add_term(idx, -coeff);
    return DualPair::make(J, JacobiAlgebroid::make(std::move(dual_spec),
                                                   std::move(dual_cocycle)));
}

} // namespace schouten
