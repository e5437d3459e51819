#include "schouten/jacobi.hpp"

#include "schouten/fn_ops.hpp"

#include <sstream>

namespace schouten {

JacobiAlgebroid JacobiAlgebroid::make(AlgebroidSpec A, GrassmannElement cocycle) {
    JacobiAlgebroid J = make_unchecked(std::move(A), std::move(cocycle));
    if (!J.cocycle_closed())
        throw InputError("cocycle is not closed: d(Phi) != 0");
    return J;
}

JacobiAlgebroid JacobiAlgebroid::make_unchecked(AlgebroidSpec A, GrassmannElement cocycle) {
    if (!cocycle.is_zero()) {
        if (cocycle.gens() != A.form_gens())
            throw InputError("cocycle must be a form over the algebroid");
        if (cocycle.tensor_degree() != 1)
            throw InputError("cocycle must have tensor degree 1");
    } else {
        cocycle = GrassmannElement::zero(A.chart(), A.form_gens());
    }
    return JacobiAlgebroid{std::move(A), std::move(cocycle)};
}

bool JacobiAlgebroid::cocycle_closed() const {
    return exterior_d(cocycle, algebroid).is_zero();
}

GrassmannElement cocycle_contract(const GrassmannElement& X, const JacobiAlgebroid& J) {
    return contract_multivector(J.cocycle, X);
}

GrassmannElement sj_deformation(const GrassmannElement& X, const GrassmannElement& Y,
                                const JacobiAlgebroid& J) {
    GrassmannElement out = J.algebroid.zero_section();
    for (const auto& [dx, Xc] : X.components())
        for (const auto& [dy, Yc] : Y.components()) {
            int x = dx - 1, y = dy - 1;
            if (x != 0)
                out += wedge(Xc, cocycle_contract(Yc, J)).scaled(Rational(x));
            if (y != 0) {
                int sign = x % 2 != 0 ? 1 : -1; // -(-1)^x
                out += wedge(cocycle_contract(Xc, J), Yc).scaled(Rational(sign * y));
            }
        }
    return out;
}

GrassmannElement sj_bracket(const GrassmannElement& X, const GrassmannElement& Y,
                            const JacobiAlgebroid& J) {
    return sn_bracket(X, Y, J.algebroid) + sj_deformation(X, Y, J);
}

GrassmannElement sj_bracket_h(const GrassmannElement& X, const GrassmannElement& Y,
                              const JacobiAlgebroid& J, const Rational& h) {
    return sn_bracket(X, Y, J.algebroid) + sj_deformation(X, Y, J).scaled(h);
}

GrassmannElement d_phi(const GrassmannElement& mu, const JacobiAlgebroid& J) {
    return exterior_d(mu, J.algebroid) + wedge(J.cocycle, mu);
}

GrassmannElement lie_phi(const GrassmannElement& X, const GrassmannElement& mu,
                         const JacobiAlgebroid& J) {
    if (!X.is_zero() && X.tensor_degree() != 1)
        throw InputError("lie_phi expects a tensor-degree-1 multivector");
    return contract_form(X, d_phi(mu, J)) + d_phi(contract_form(X, mu), J);
}

// ---- extension ----------------------------------------------------------

ExtensionAlgebroid ExtensionAlgebroid::make(const AlgebroidSpec& A, const std::string& unit_name) {
    const int r = A.rank();
    std::vector<std::string> frames = A.frames();
    for (const auto& f : frames)
        if (f == unit_name)
            throw InputError("extension frame name '" + unit_name + "' already in use");
    frames.push_back(unit_name);
    std::vector<std::vector<Scalar>> anchor;
    for (int i = 0; i < r; ++i) {
        std::vector<Scalar> row;
        for (size_t m = 0; m < A.anchor_coords().size(); ++m)
            row.push_back(A.anchor_entry(i, int(m)));
        anchor.push_back(std::move(row));
    }
    anchor.emplace_back(A.anchor_coords().size(), Scalar::zero(A.chart()));
    std::map<std::tuple<int, int, int>, Scalar> c;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                const Scalar& v = A.structure_fn(k, i, j);
                if (!v.is_zero())
                    c[{i, j, k}] = v;
            }
    AlgebroidSpec ext(A.chart(), std::move(frames), A.anchor_coords(), std::move(anchor), c);
    GrassmannElement phi = ext.form(r);
    return ExtensionAlgebroid{JacobiAlgebroid::make(std::move(ext), std::move(phi)), A, r};
}

GrassmannElement ExtensionAlgebroid::lift_section_element(const GrassmannElement& X) const {
    std::vector<int> idmap(static_cast<size_t>(base.rank()));
    for (int i = 0; i < base.rank(); ++i)
        idmap[size_t(i)] = i;
    return X.transported(ext.algebroid.chart(), ext.algebroid.section_gens(), idmap);
}

GrassmannElement ExtensionAlgebroid::lift_form_element(const GrassmannElement& mu) const {
    std::vector<int> idmap(static_cast<size_t>(base.rank()));
    for (int i = 0; i < base.rank(); ++i)
        idmap[size_t(i)] = i;
    return mu.transported(ext.algebroid.chart(), ext.algebroid.form_gens(), idmap);
}

GrassmannElement ExtensionAlgebroid::embed_pair(const GrassmannElement& a1,
                                                const GrassmannElement& a2) const {
    GrassmannElement I = ext.algebroid.section(unit_frame);
    return lift_section_element(a1) + wedge(I, lift_section_element(a2));
}

std::pair<GrassmannElement, GrassmannElement> ExtensionAlgebroid::split_element(
    const GrassmannElement& X) const {
    GrassmannElement a1(base.chart(), base.section_gens());
    GrassmannElement a2(base.chart(), base.section_gens());
    for (const auto& [idx, c] : X.terms()) {
        auto it = std::find(idx.begin(), idx.end(), unit_frame);
        if (it == idx.end()) {
            a1.add_term(idx, c);
        } else {
            // e_idx = (-1)^{pos} I ^ e_rest when I sits at position pos
            MultiIndex rest;
            for (int g : idx)
                if (g != unit_frame)
                    rest.push_back(g);
            int pos = int(it - idx.begin());
            a2.add_term(std::move(rest), pos % 2 != 0 ? -c : c);
        }
    }
    return {std::move(a1), std::move(a2)};
}

// ---- first-order pairs ---------------------------------------------------

FirstOrderOp FirstOrderOp::make(int degree, GrassmannElement a1, GrassmannElement a2) {
    if (!a1.is_zero() && a1.tensor_degree() != degree + 1)
        throw InputError("first-order op: part1 must have tensor degree lie_degree+1");
    if (!a2.is_zero() && a2.tensor_degree() != degree)
        throw InputError("first-order op: part2 must have tensor degree lie_degree");
    return FirstOrderOp{degree, std::move(a1), std::move(a2)};
}

FirstOrderOp FirstOrderOp::operator+(const FirstOrderOp& o) const {
    if (degree != o.degree)
        throw InputError("first-order op degree mismatch");
    return FirstOrderOp{degree, part1 + o.part1, part2 + o.part2};
}

FirstOrderOp FirstOrderOp::operator-(const FirstOrderOp& o) const {
    if (degree != o.degree)
        throw InputError("first-order op degree mismatch");
    return FirstOrderOp{degree, part1 - o.part1, part2 - o.part2};
}

FirstOrderOp FirstOrderOp::scaled(const Rational& c) const {
    return FirstOrderOp{degree, part1.scaled(c), part2.scaled(c)};
}

FirstOrderOp FirstOrderOp::scaled_by(const Scalar& s) const {
    return FirstOrderOp{degree, part1.scaled(s), part2.scaled(s)};
}

bool FirstOrderOp::operator==(const FirstOrderOp& o) const {
    return part1 == o.part1 && part2 == o.part2 && (is_zero() || degree == o.degree);
}

FirstOrderOp nr_structural_bracket(const FirstOrderOp& A, const FirstOrderOp& B,
                                   const AlgebroidSpec& alg) {
    const int a = A.degree, b = B.degree;
    int sa = a % 2 != 0 ? -1 : 1; // (-1)^a
    GrassmannElement c1 = sn_bracket(A.part1, B.part1, alg) +
                          wedge(A.part1, B.part2).scaled(Rational(a)) -
                          wedge(A.part2, B.part1).scaled(Rational(sa * b));
    GrassmannElement c2 = sn_bracket(A.part1, B.part2, alg).scaled(Rational(sa)) +
                          sn_bracket(A.part2, B.part1, alg) +
                          wedge(A.part2, B.part2).scaled(Rational(a - b));
    return FirstOrderOp{a + b, std::move(c1), std::move(c2)};
}

FirstOrderOp first_order_wedge(const FirstOrderOp& A, const FirstOrderOp& B) {
    const int a = A.degree;
    GrassmannElement p1 = wedge(A.part1, B.part1);
    GrassmannElement p2 = wedge(A.part2, B.part1);
    GrassmannElement cross = wedge(A.part1, B.part2);
    p2 += (a + 1) % 2 != 0 ? -cross : cross; // (-1)^{a+1}
    return FirstOrderOp{A.degree + B.degree + 1, std::move(p1), std::move(p2)};
}

// ---- Jacobi structures ----------------------------------------------------

Scalar jacobi_fn_bracket(const Scalar& f, const Scalar& g, const GrassmannElement& lambda,
                         const GrassmannElement& gamma, const AlgebroidSpec& A) {
    Scalar out = pairing(lambda, wedge(A.differential_of(f), A.differential_of(g)));
    out += f * A.anchor_apply(gamma, g);
    out -= g * A.anchor_apply(gamma, f);
    return out;
}

std::string JacobiStructureReport::text() const {
    std::ostringstream os;
    if (pass) {
        os << "PASS: (Lambda,Gamma) is a Jacobi structure\n";
        return os.str();
    }
    os << "FAIL\n";
    if (!defect_gamma_lambda.is_zero())
        os << "  [Gamma,Lambda]^SN = " << defect_gamma_lambda.str() << "\n";
    if (!defect_lambda.is_zero())
        os << "  [Lambda,Lambda]^SN + 2 Lambda^Gamma = " << defect_lambda.str() << "\n";
    if (!function_jacobi_ok)
        os << "  induced bracket violates the Jacobi identity on probes\n";
    return os.str();
}

JacobiStructureReport jacobi_structure_check(const GrassmannElement& lambda,
                                             const GrassmannElement& gamma,
                                             const AlgebroidSpec& A) {
    if (!lambda.is_zero() && lambda.tensor_degree() != 2)
        throw InputError("jacobi_structure_check: Lambda must be a bivector");
    if (!gamma.is_zero() && gamma.tensor_degree() != 1)
        throw InputError("jacobi_structure_check: Gamma must have tensor degree 1");
    JacobiStructureReport rep;
    rep.defect_gamma_lambda = sn_bracket(gamma, lambda, A);
    rep.defect_lambda = sn_bracket(lambda, lambda, A) + wedge(lambda, gamma).scaled(Rational(2));
    rep.pass = rep.defect_gamma_lambda.is_zero() && rep.defect_lambda.is_zero();
    if (rep.pass) {
        // corroborate with the Jacobi identity of {f,g} on probe monomials
        std::vector<Scalar> pool;
        for (const auto& c : tangent_coord_names(A.chart())) {
            pool.push_back(Scalar::coordinate(A.chart(), c));
            pool.push_back(Scalar::coordinate(A.chart(), c) * Scalar::coordinate(A.chart(), c));
        }
        for (size_t i = 0; i + 1 < pool.size(); ++i)
            pool.push_back(pool[i] * pool[i + 1]);
        auto br = [&](const Scalar& f, const Scalar& g) {
            return jacobi_fn_bracket(f, g, lambda, gamma, A);
        };
        for (size_t i = 0; i < pool.size() && rep.function_jacobi_ok; ++i)
            for (size_t j = i; j < pool.size() && rep.function_jacobi_ok; ++j)
                for (size_t k = j; k < pool.size(); ++k) {
                    Scalar defect = br(br(pool[i], pool[j]), pool[k]) +
                                    br(br(pool[j], pool[k]), pool[i]) +
                                    br(br(pool[k], pool[i]), pool[j]);
                    if (!defect.is_zero()) {
                        rep.function_jacobi_ok = false;
                        rep.pass = false;
                        break;
                    }
                }
    }
    return rep;
}

GrassmannElement h_z_map(const FirstOrderOp& A, const GrassmannElement& Z) {
    return A.part1 + wedge(Z, A.part2);
}

bool z_homogeneous_check(const FirstOrderOp& A, const GrassmannElement& Z,
                         const AlgebroidSpec& alg) {
    if (Z.tensor_degree() != 1)
        throw InputError("z_homogeneous_check expects a section");
    FirstOrderOp zpair{0, Z, GrassmannElement::zero(Z.chart(), Z.gens())};
    FirstOrderOp lhs = nr_structural_bracket(zpair, A, alg);
    FirstOrderOp rhs = A.scaled(Rational(-A.degree));
    return lhs.part1 == rhs.part1 && lhs.part2 == rhs.part2;
}

} // namespace schouten
