#include "schouten/lifts.hpp"

#include "schouten/fn_ops.hpp"

#include <numeric>

namespace schouten {

TotalSpace TotalSpace::make(const AlgebroidSpec& A, std::vector<std::string> fiber_names) {
    if (!A.chart().fiber_coords().empty())
        throw InputError("total space over a chart that already has fiber coordinates");
    const int r = A.rank();
    if (fiber_names.empty())
        for (int i = 0; i < r; ++i)
            fiber_names.push_back("y" + std::to_string(i + 1));
    if (int(fiber_names.size()) != r)
        throw InputError("need one fiber coordinate per frame");
    TotalSpace ts;
    ts.base_ = A;
    ts.chart_ = Chart::make(A.chart().base_coords(), fiber_names, A.chart().aux_coords(),
                            A.chart().exp_coord());
    ts.tangent_ = AlgebroidSpec::tangent(ts.chart_);
    ts.n_base_ = int(A.chart().base_coords().size());
    return ts;
}

int TotalSpace::base_dir(int mu) const { return mu; }
int TotalSpace::fiber_dir(int i) const { return n_base_ + i; }

Scalar TotalSpace::pull_back(const Scalar& f) const { return extend_scalar(f, chart_); }

Scalar TotalSpace::iota(const GrassmannElement& mu) const {
    if (mu.gens() != base_.form_gens())
        throw InputError("iota expects a dual section of the base algebroid");
    if (!mu.is_zero() && mu.tensor_degree() != 1)
        throw InputError("iota expects tensor degree 1");
    Scalar out = Scalar::zero(chart_);
    for (const auto& [idx, c] : mu.terms())
        out += pull_back(c) * Scalar::coordinate(chart_, chart_.fiber_coords()[size_t(idx[0])]);
    return out;
}

GrassmannElement TotalSpace::zero_field() const {
    return GrassmannElement::zero(chart_, tangent_.section_gens());
}

GrassmannElement TotalSpace::liouville() const {
    GrassmannElement out = zero_field();
    for (int i = 0; i < base_.rank(); ++i)
        out.add_term({fiber_dir(i)},
                     Scalar::coordinate(chart_, chart_.fiber_coords()[size_t(i)]));
    return out;
}

GrassmannElement TotalSpace::vertical_lift(const GrassmannElement& X) const {
    if (X.gens() != base_.section_gens())
        throw InputError("vertical_lift expects a multivector over the base algebroid");
    GrassmannElement out = zero_field();
    for (const auto& [idx, c] : X.terms()) {
        MultiIndex mapped;
        for (int i : idx)
            mapped.push_back(fiber_dir(i));
        out.add_term(std::move(mapped), pull_back(c));
    }
    return out;
}

namespace {

// e_k^c = a^mu_k d_{x^mu} - c^l_{ki} y^i d_{y^l}
GrassmannElement frame_complete_lift(const TotalSpace& ts, int k) {
    const AlgebroidSpec& A = ts.base();
    GrassmannElement out = ts.zero_field();
    for (size_t m = 0; m < A.anchor_coords().size(); ++m) {
        const Scalar& a = A.anchor_entry(k, int(m));
        if (!a.is_zero())
            out.add_term({ts.base_dir(int(ts.chart().index_of(A.anchor_coords()[m])))},
                         ts.pull_back(a));
    }
    for (int l = 0; l < A.rank(); ++l) {
        Scalar q = Scalar::zero(ts.chart());
        for (int i = 0; i < A.rank(); ++i) {
            const Scalar& c = A.structure_fn(l, k, i);
            if (!c.is_zero())
                q -= ts.pull_back(c) *
                     Scalar::coordinate(ts.chart(), ts.chart().fiber_coords()[size_t(i)]);
        }
        out.add_term({ts.fiber_dir(l)}, q);
    }
    return out;
}

GrassmannElement complete_lift_monomial(const TotalSpace& ts, const MultiIndex& idx,
                                        const Scalar& coeff) {
    const AlgebroidSpec& A = ts.base();
    if (idx.empty()) // f^c = iota_{df}
        return GrassmannElement::from_scalar(ts.chart(), ts.tangent().section_gens(),
                                             ts.iota(A.differential_of(coeff)));
    if (idx.size() == 1) {
        // (f e_k)^c = iota_{df} e_k^v + f e_k^c
        int k = idx[0];
        GrassmannElement ekv = ts.vertical_lift(A.section(k));
        GrassmannElement out = frame_complete_lift(ts, k).scaled(ts.pull_back(coeff));
        out += ekv.scaled(ts.iota(A.differential_of(coeff)));
        return out;
    }
    // (U ^ e_last)^c = U^c ^ e_last^v + U^v ^ e_last^c
    MultiIndex front(idx.begin(), idx.end() - 1);
    int last = idx.back();
    GrassmannElement U = GrassmannElement::monomial(A.chart(), A.section_gens(), front, coeff);
    GrassmannElement Uc = complete_lift_monomial(ts, front, coeff);
    return wedge(Uc, ts.vertical_lift(A.section(last))) +
           wedge(ts.vertical_lift(U), frame_complete_lift(ts, last));
}

int fiber_degree(const Chart& chart, const Monomial& m) {
    int d = 0;
    for (size_t i = 0; i < m.exps.size(); ++i)
        if (chart.is_fiber_index(int(i)))
            d += m.exps[i];
    return d;
}

// Restriction of a total-space scalar to the base chart; requires all fiber
// exponents to vanish.
Scalar restrict_scalar(const Scalar& s, const Chart& target) {
    std::vector<int> coord_map(static_cast<size_t>(target.coord_count()));
    for (int i = 0; i < target.coord_count(); ++i)
        coord_map[size_t(i)] = s.chart().index_of(target.coord_name(i));
    Scalar out(target);
    for (const auto& [m, c] : s.terms()) {
        Monomial n{std::vector<int>(size_t(target.coord_count()), 0), m.exp_weight};
        int moved = 0;
        for (int i = 0; i < target.coord_count(); ++i) {
            n.exps[size_t(i)] = m.exps[size_t(coord_map[size_t(i)])];
            moved += n.exps[size_t(i)];
        }
        int total = std::accumulate(m.exps.begin(), m.exps.end(), 0);
        if (moved != total)
            throw InputError("scalar depends on coordinates outside the target chart");
        out.add_term(n, c);
    }
    return out;
}

} // namespace

GrassmannElement TotalSpace::complete_lift(const GrassmannElement& X) const {
    if (X.gens() != base_.section_gens())
        throw InputError("complete_lift expects a multivector over the base algebroid");
    GrassmannElement out = zero_field();
    for (const auto& [idx, c] : X.terms())
        out += complete_lift_monomial(*this, idx, c);
    return out;
}

bool is_homogeneous_multivector(const GrassmannElement& X, const TotalSpace& ts) {
    if (X.chart() != ts.chart() || X.gens() != ts.tangent().section_gens())
        throw InputError("expected a multivector field on this total space");
    for (const auto& [idx, c] : X.terms()) {
        int p = int(idx.size());
        int vertical = 0;
        for (int g : idx)
            if (g >= ts.fiber_dir(0))
                ++vertical;
        for (const auto& [m, k] : c.terms())
            if (fiber_degree(ts.chart(), m) - vertical != 1 - p)
                return false;
    }
    return true;
}

FirstOrderOp jacobi_lift(const GrassmannElement& X, const JacobiAlgebroid& J,
                         const TotalSpace& ts) {
    if (!(ts.base() == J.algebroid))
        throw InputError("total space and Jacobi algebroid disagree");
    int x = X.lie_degree();
    GrassmannElement a1 = ts.complete_lift(X);
    if (x != 0)
        a1 -= ts.vertical_lift(X).scaled(ts.iota(J.cocycle).scaled(Rational(x)));
    GrassmannElement a2 = ts.vertical_lift(cocycle_contract(X, J));
    return FirstOrderOp::make(x, std::move(a1), std::move(a2));
}

GrassmannElement poisson_lift(const GrassmannElement& X, const JacobiAlgebroid& J,
                              const TotalSpace& ts) {
    FirstOrderOp hat = jacobi_lift(X, J, ts);
    return h_z_map(hat, ts.liouville());
}

// ---- Poissonization -------------------------------------------------------

Poissonization Poissonization::make(const JacobiAlgebroid& J, const std::string& time_name) {
    const AlgebroidSpec& A = J.algebroid;
    if (A.chart().exp_coord())
        throw InputError("source chart already has an exponential coordinate");
    Poissonization p;
    p.source_ = J;
    Chart ext_chart = Chart::make(A.chart().base_coords(), A.chart().fiber_coords(),
                                  {time_name}, time_name);
    std::vector<std::string> frames = A.frames();
    std::string dt_name = "d_" + time_name;
    frames.push_back(dt_name);
    std::vector<std::string> anchor_coords = A.anchor_coords();
    anchor_coords.push_back(time_name);
    std::vector<std::vector<Scalar>> anchor;
    for (int i = 0; i < A.rank(); ++i) {
        std::vector<Scalar> row;
        for (size_t m = 0; m < A.anchor_coords().size(); ++m)
            row.push_back(extend_scalar(A.anchor_entry(i, int(m)), ext_chart));
        row.push_back(Scalar::zero(ext_chart));
        anchor.push_back(std::move(row));
    }
    std::vector<Scalar> dt_row(anchor_coords.size(), Scalar::zero(ext_chart));
    dt_row.back() = Scalar::constant(ext_chart, 1);
    anchor.push_back(std::move(dt_row));
    std::map<std::tuple<int, int, int>, Scalar> c;
    for (int i = 0; i < A.rank(); ++i)
        for (int j = i + 1; j < A.rank(); ++j)
            for (int k = 0; k < A.rank(); ++k) {
                const Scalar& v = A.structure_fn(k, i, j);
                if (!v.is_zero())
                    c[{i, j, k}] = extend_scalar(v, ext_chart);
            }
    p.ext_ = AlgebroidSpec(ext_chart, std::move(frames), std::move(anchor_coords),
                           std::move(anchor), c);
    p.dt_ = A.rank();
    return p;
}

GrassmannElement Poissonization::lift_element(const GrassmannElement& X) const {
    std::vector<int> idmap(static_cast<size_t>(source_.algebroid.rank()));
    std::iota(idmap.begin(), idmap.end(), 0);
    return X.transported(ext_.chart(), ext_.section_gens(), idmap);
}

GrassmannElement Poissonization::embed(const GrassmannElement& X) const {
    GrassmannElement dt = ext_.section(dt_);
    return lift_element(X) + wedge(dt, lift_element(cocycle_contract(X, source_)));
}

GrassmannElement Poissonization::tilde_embed(const GrassmannElement& X) const {
    GrassmannElement out = GrassmannElement::zero(ext_.chart(), ext_.section_gens());
    for (const auto& [deg, comp] : X.components()) {
        int x = deg - 1;
        Scalar weight = Scalar::exp_weight(ext_.chart(), -x);
        out += embed(comp).scaled(weight);
    }
    return out;
}

// ---- induced brackets -------------------------------------------------------

GrassmannElement induced_bracket(const GrassmannElement& X,
                                 std::span<const GrassmannElement> mus, const TotalSpace& ts) {
    if (X.is_zero())
        return GrassmannElement::zero(ts.base().chart(), ts.base().form_gens());
    if (X.tensor_degree() != int(mus.size()))
        throw InputError("induced bracket needs one dual section per tensor slot");
    GrassmannElement w(ts.chart(), ts.tangent().form_gens());
    bool first = true;
    for (const auto& mu : mus) {
        GrassmannElement d_iota = ts.tangent().differential_of(ts.iota(mu));
        w = first ? d_iota : wedge(w, d_iota);
        first = false;
    }
    Scalar g = pairing(X, w);
    // read the fiberwise-linear function back as a dual section
    GrassmannElement out(ts.base().chart(), ts.base().form_gens());
    for (const auto& [m, c] : g.terms()) {
        if (fiber_degree(ts.chart(), m) != 1)
            throw InputError("contraction is not fiberwise linear; the multivector is "
                             "inhomogeneous");
        Monomial base_m = m;
        int frame = -1;
        for (int i = 0; i < ts.base().rank(); ++i) {
            int ci = ts.chart().index_of(ts.chart().fiber_coords()[size_t(i)]);
            if (m.exps[size_t(ci)] == 1) {
                frame = i;
                base_m.exps[size_t(ci)] = 0;
                break;
            }
        }
        Scalar coeff = restrict_scalar(Scalar::monomial(ts.chart(), base_m, c),
                                       ts.base().chart());
        out.add_term({frame}, coeff);
    }
    return out;
}

Scalar hamiltonian_apply(const GrassmannElement& X, std::span<const GrassmannElement> mus,
                         const Scalar& f, const TotalSpace& ts) {
    if (X.tensor_degree() != int(mus.size()) + 1)
        throw InputError("hamiltonian_apply needs tensor degree = #sections + 1");
    GrassmannElement w(ts.chart(), ts.tangent().form_gens());
    bool first = true;
    for (const auto& mu : mus) {
        GrassmannElement d_iota = ts.tangent().differential_of(ts.iota(mu));
        w = first ? d_iota : wedge(w, d_iota);
        first = false;
    }
    GrassmannElement df = ts.tangent().differential_of(ts.pull_back(f));
    w = first ? df : wedge(w, df);
    // for homogeneous X the contraction has fiber weight 0: a base function
    return restrict_scalar(pairing(X, w), ts.base().chart());
}

// ---- Koszul -----------------------------------------------------------------

GrassmannElement generating_operator(const GrassmannElement& mu, const GrassmannElement& lambda,
                                     const AlgebroidSpec& A) {
    return contract_form(lambda, exterior_d(mu, A)) -
           exterior_d(contract_form(lambda, mu), A);
}

GrassmannElement koszul_bracket(const GrassmannElement& mu, const GrassmannElement& nu,
                                const GrassmannElement& lambda, const AlgebroidSpec& A) {
    int m = mu.tensor_degree();
    GrassmannElement inner = generating_operator(wedge(mu, nu), lambda, A) -
                             wedge(generating_operator(mu, lambda, A), nu);
    GrassmannElement second = wedge(mu, generating_operator(nu, lambda, A));
    inner += (m % 2 != 0) ? second : -second; // -(-1)^m mu ^ d_Lambda nu
    return (m % 2 != 0) ? -inner : inner;     // overall (-1)^m
}

GrassmannElement koszul_bracket_p8(const GrassmannElement& mu, const GrassmannElement& nu,
                                   const GrassmannElement& lambda, const AlgebroidSpec& A) {
    GrassmannElement lm = contract_multivector(mu, lambda);
    GrassmannElement ln = contract_multivector(nu, lambda);
    Scalar inner = pairing(lambda, wedge(mu, nu));
    return lie_derivative(lm, nu, A) - lie_derivative(ln, mu, A) -
           A.differential_of(inner).scaled(Rational(1));
}

// ---- Theorem 13 harness -----------------------------------------------------

JacobiFormSetup JacobiFormSetup::make(const GrassmannElement& lambda,
                                      const GrassmannElement& gamma, const AlgebroidSpec& A,
                                      std::vector<std::string> fiber_names) {
    JacobiFormSetup s;
    s.E = ExtensionAlgebroid::make(A);
    s.lambda = lambda;
    s.gamma = gamma;
    s.X = s.E.embed_pair(lambda, gamma);
    s.ts = TotalSpace::make(s.E.ext.algebroid, std::move(fiber_names));
    s.lift = poisson_lift(s.X, s.E.ext, s.ts);
    return s;
}

GrassmannElement JacobiFormSetup::dual_section(const GrassmannElement& alpha,
                                               const Scalar& f) const {
    GrassmannElement out = E.lift_form_element(alpha);
    out += E.ext.algebroid.form(E.unit_frame).scaled(extend_scalar(f, E.ext.algebroid.chart()));
    return out;
}

std::pair<GrassmannElement, Scalar> JacobiFormSetup::split_dual(const GrassmannElement& mu) const {
    GrassmannElement alpha(E.base.chart(), E.base.form_gens());
    Scalar f = Scalar::zero(E.base.chart());
    for (const auto& [idx, c] : mu.terms()) {
        if (idx.size() != 1)
            throw InputError("split_dual expects a 1-form over the extension");
        if (idx[0] == E.unit_frame)
            f = c; // the extension shares the base chart
        else
            alpha.add_term(idx, c);
    }
    return {std::move(alpha), std::move(f)};
}

GrassmannElement jacobi_form_bracket_induced(const JacobiFormSetup& s, const GrassmannElement& mu,
                                             const GrassmannElement& nu) {
    std::array<GrassmannElement, 2> mus{mu, nu};
    return induced_bracket(s.lift, mus, s.ts);
}

GrassmannElement jacobi_form_bracket_br(const JacobiFormSetup& s, const GrassmannElement& mu,
                                        const GrassmannElement& nu) {
    const JacobiAlgebroid& J = s.E.ext;
    GrassmannElement xmu = contract_multivector(mu, s.X);
    GrassmannElement xnu = contract_multivector(nu, s.X);
    Scalar inner = pairing(s.X, wedge(mu, nu));
    return lie_phi(xmu, nu, J) - lie_phi(xnu, mu, J) -
           d_phi(GrassmannElement::from_scalar(J.algebroid.chart(), J.algebroid.form_gens(),
                                               inner),
                 J);
}

GrassmannElement jacobi_form_bracket_jb(const JacobiFormSetup& s, const GrassmannElement& mu,
                                        const GrassmannElement& nu) {
    const AlgebroidSpec& A = s.E.base;
    auto [alpha, f] = s.split_dual(mu);
    auto [beta, g] = s.split_dual(nu);
    GrassmannElement la = contract_multivector(alpha, s.lambda);
    GrassmannElement lb = contract_multivector(beta, s.lambda);
    // first component
    GrassmannElement form_part = lie_derivative(la, beta, A) - lie_derivative(lb, alpha, A) -
                                 A.differential_of(pairing(s.lambda, wedge(alpha, beta)));
    form_part += lie_derivative(s.gamma, beta, A).scaled(f);
    form_part -= lie_derivative(s.gamma, alpha, A).scaled(g);
    form_part -= contract_form(s.gamma, wedge(alpha, beta));
    // second component
    Scalar fn_part = pairing(s.lambda, wedge(beta, alpha));
    fn_part += A.anchor_apply(la, g) - A.anchor_apply(lb, f);
    fn_part += f * A.anchor_apply(s.gamma, g) - g * A.anchor_apply(s.gamma, f);
    return s.dual_section(form_part, fn_part);
}

GrassmannElement generalized_bracket(const JacobiFormSetup& s,
                                     std::span<const GrassmannElement> mus) {
    return induced_bracket(s.lift, mus, s.ts);
}

} // namespace schouten
