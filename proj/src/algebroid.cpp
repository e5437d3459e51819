#include "schouten/algebroid.hpp"

#include "schouten/fn_ops.hpp"

#include <sstream>

namespace schouten {

AlgebroidSpec::AlgebroidSpec(Chart chart, std::vector<std::string> frames,
                             std::vector<std::string> anchor_coords,
                             std::vector<std::vector<Scalar>> anchor,
                             const std::map<std::tuple<int, int, int>, Scalar>& structure_functions)
    : chart_(std::move(chart)), frames_(std::move(frames)),
      anchor_coords_(std::move(anchor_coords)), anchor_(std::move(anchor)) {
    const int r = rank();
    if (int(anchor_.size()) != r)
        throw InputError("anchor matrix must have one row per frame");
    for (const auto& row : anchor_)
        if (row.size() != anchor_coords_.size())
            throw InputError("anchor row length does not match anchor coordinates");
    for (const auto& c : anchor_coords_)
        anchor_coord_idx_.push_back(chart_.index_of(c));
    c_.assign(size_t(r) * size_t(r) * size_t(r), Scalar::zero(chart_));
    for (const auto& [key, val] : structure_functions) {
        auto [i, j, k] = key;
        if (i < 0 || j < 0 || k < 0 || i >= r || j >= r || k >= r)
            throw InputError("structure function index out of range");
        if (i >= j)
            throw InputError("structure functions are stored for i<j only");
        c_[size_t(k) * size_t(r) * size_t(r) + size_t(i) * size_t(r) + size_t(j)] = val;
        c_[size_t(k) * size_t(r) * size_t(r) + size_t(j) * size_t(r) + size_t(i)] = -val;
    }
    sections_ = GenList(GenSpace::Section, frames_);
    forms_ = GenList(GenSpace::Form, frames_);
}

AlgebroidSpec AlgebroidSpec::tangent(const Chart& chart) {
    auto coords = tangent_coord_names(chart);
    std::vector<std::string> frames;
    for (const auto& c : coords)
        frames.push_back("d_" + c);
    std::vector<std::vector<Scalar>> anchor;
    for (size_t i = 0; i < coords.size(); ++i) {
        std::vector<Scalar> row(coords.size(), Scalar::zero(chart));
        row[i] = Scalar::constant(chart, 1);
        anchor.push_back(std::move(row));
    }
    return AlgebroidSpec(chart, std::move(frames), coords, std::move(anchor), {});
}

const Scalar& AlgebroidSpec::anchor_entry(int frame, int coord) const {
    return anchor_.at(size_t(frame)).at(size_t(coord));
}

const Scalar& AlgebroidSpec::structure_fn(int k, int i, int j) const {
    const int r = rank();
    return c_.at(size_t(k) * size_t(r) * size_t(r) + size_t(i) * size_t(r) + size_t(j));
}

GrassmannElement AlgebroidSpec::zero_section() const {
    return GrassmannElement::zero(chart_, sections_);
}

GrassmannElement AlgebroidSpec::section(int i) const {
    return GrassmannElement::generator(chart_, sections_, i);
}

GrassmannElement AlgebroidSpec::form(int i) const {
    return GrassmannElement::generator(chart_, forms_, i);
}

GrassmannElement AlgebroidSpec::scalar_element(Scalar s) const {
    return GrassmannElement::from_scalar(chart_, sections_, std::move(s));
}

GrassmannElement AlgebroidSpec::unit_element() const {
    return scalar_element(Scalar::constant(chart_, 1));
}

Scalar AlgebroidSpec::anchor_apply(const GrassmannElement& X, const Scalar& f) const {
    if (X.gens() != sections_)
        throw InputError("anchor_apply expects a multivector over this algebroid");
    Scalar out = Scalar::zero(chart_);
    for (const auto& [idx, c] : X.terms()) {
        if (idx.size() != 1)
            throw InputError("anchor_apply expects tensor degree 1");
        int i = idx[0];
        for (size_t m = 0; m < anchor_coords_.size(); ++m) {
            const Scalar& a = anchor_[size_t(i)][m];
            if (!a.is_zero())
                out += c * a * f.partial(anchor_coord_idx_[m]);
        }
    }
    return out;
}

GrassmannElement AlgebroidSpec::differential_of(const Scalar& f) const {
    GrassmannElement df(chart_, forms_);
    for (int i = 0; i < rank(); ++i)
        df.add_term({i}, anchor_apply(section(i), f));
    return df;
}

bool AlgebroidSpec::operator==(const AlgebroidSpec& o) const {
    return chart_ == o.chart_ && frames_ == o.frames_ && anchor_coords_ == o.anchor_coords_ &&
           anchor_ == o.anchor_ && c_ == o.c_;
}

// ---- validation --------------------------------------------------------

namespace {

GrassmannElement frame_bracket(const AlgebroidSpec& A, int i, int j) {
    GrassmannElement out = A.zero_section();
    for (int k = 0; k < A.rank(); ++k)
        out.add_term({k}, A.structure_fn(k, i, j));
    return out;
}

// Section bracket of tensor-degree-1 elements (or scalars in one slot).
GrassmannElement section_bracket(const AlgebroidSpec& A, const GrassmannElement& X,
                                 const GrassmannElement& Y) {
    GrassmannElement out = A.zero_section();
    for (const auto& [ix, cx] : X.terms())
        for (const auto& [iy, cy] : Y.terms()) {
            int i = ix[0], j = iy[0];
            out += frame_bracket(A, i, j).scaled(cx * cy);
            out.add_term({j}, cx * A.anchor_apply(A.section(i), cy));
            out.add_term({i}, -(cy * A.anchor_apply(A.section(j), cx)));
        }
    return out;
}

} // namespace

std::string ValidationReport::text() const {
    std::ostringstream os;
    if (ok) {
        os << "PASS\n";
        return os.str();
    }
    os << "FAIL (" << defects.size() << " defect" << (defects.size() == 1 ? "" : "s") << ")\n";
    for (const auto& d : defects) {
        os << "  " << d.kind << " at (";
        for (size_t i = 0; i < d.where.size(); ++i)
            os << (i ? "," : "") << d.where[i];
        os << "): " << d.detail << "\n";
    }
    return os.str();
}

ValidationReport algebroid_validate(const AlgebroidSpec& A) {
    ValidationReport rep;
    const int r = A.rank();
    for (int i = 0; i < r && rep.ok; ++i)
        for (int j = i + 1; j < r && rep.ok; ++j) {
            // anchor morphism on the pair (i,j), tested on each coordinate
            for (size_t m = 0; m < A.anchor_coords().size(); ++m) {
                Scalar f = Scalar::coordinate(A.chart(), A.anchor_coords()[m]);
                Scalar lhs = A.anchor_apply(frame_bracket(A, i, j), f);
                Scalar rhs = A.anchor_apply(A.section(i), A.anchor_apply(A.section(j), f)) -
                             A.anchor_apply(A.section(j), A.anchor_apply(A.section(i), f));
                if (lhs != rhs) {
                    rep.ok = false;
                    rep.defects.push_back(
                        {"anchor", {i, j, int(m)}, (lhs - rhs).str()});
                    break;
                }
            }
        }
    for (int i = 0; i < r && rep.ok; ++i)
        for (int j = i + 1; j < r && rep.ok; ++j)
            for (int k = j + 1; k < r; ++k) {
                GrassmannElement defect =
                    section_bracket(A, frame_bracket(A, i, j), A.section(k)) -
                    section_bracket(A, A.section(i), frame_bracket(A, j, k)) +
                    section_bracket(A, A.section(j), frame_bracket(A, i, k));
                if (!defect.is_zero()) {
                    rep.ok = false;
                    rep.defects.push_back({"jacobi", {i, j, k}, defect.str()});
                    break;
                }
            }
    return rep;
}

// ---- Schouten-Nijenhuis bracket -----------------------------------------

namespace {

// Bracket of two monomials f e_I, g e_J, by the defining axioms:
//   [X, Y'^v] = [X,Y']^v-Leibniz with sign (-1)^{x(y'+1)},
//   [X,g] = -(-1)^x [g,X], [f,g] = 0, [X,f] = a(X)(f) on sections.
GrassmannElement bracket_mono(const AlgebroidSpec& A, const MultiIndex& I, const Scalar& f,
                              const MultiIndex& J, const Scalar& g) {
    const int p = int(I.size()), q = int(J.size());
    GrassmannElement zero = A.zero_section();
    auto mono = [&](const MultiIndex& idx, const Scalar& c) {
        GrassmannElement e = A.zero_section();
        e.add_term(idx, c);
        return e;
    };

    if (p == 0 && q == 0)
        return zero; // [f,g] = 0
    if (p == 1 && q == 1)
        return section_bracket(A, mono(I, f), mono(J, g));
    if (p == 0) {
        // X = f is a function (lie degree -1)
        if (q == 1) {
            // [f, g e_j] = -g a(e_j)(f)
            int j = J[0];
            return A.scalar_element(-(g * A.anchor_apply(A.section(j), f)));
        }
        // split Y = (g e_{J'}) ^ e_j, Leibniz in the second argument
        MultiIndex Jp(J.begin(), J.end() - 1);
        int j = J.back();
        GrassmannElement t1 = wedge(bracket_mono(A, I, f, Jp, g), A.section(j));
        GrassmannElement t2 = wedge(mono(Jp, g), bracket_mono(A, I, f, {j}, Scalar::constant(A.chart(), 1)));
        int sign = (q - 1) % 2 != 0 ? -1 : 1; // (-1)^{x(y'+1)} with x=-1, y'=q-2
        return t1 + (sign < 0 ? -t2 : t2);
    }
    if (q == 0) {
        if (p == 1) {
            int i = I[0];
            return A.scalar_element(f * A.anchor_apply(A.section(i), g));
        }
        // flip: [X,g] = -(-1)^{x*(-1)} [g,X] = -(-1)^x [g,X], x = p-1
        GrassmannElement flipped = bracket_mono(A, J, g, I, f);
        int sign = (p - 1) % 2 != 0 ? 1 : -1; // -(-1)^{p-1}
        return sign < 0 ? -flipped : flipped;
    }
    if (q == 1) {
        // flip to put the longer factor second: [X, ge_j] = -[ge_j, X]
        GrassmannElement flipped = bracket_mono(A, J, g, I, f);
        return -flipped; // x*y = (p-1)*0 = 0
    }
    // q >= 2: Leibniz in the second argument
    MultiIndex Jp(J.begin(), J.end() - 1);
    int j = J.back();
    int x = p - 1;
    GrassmannElement t1 = wedge(bracket_mono(A, I, f, Jp, g), A.section(j));
    GrassmannElement t2 =
        wedge(mono(Jp, g), bracket_mono(A, I, f, {j}, Scalar::constant(A.chart(), 1)));
    int sign = (x % 2 != 0 && (q - 1) % 2 != 0) ? -1 : 1; // (-1)^{x(y'+1)}, y'+1 = q-1
    return t1 + (sign < 0 ? -t2 : t2);
}

} // namespace

GrassmannElement sn_bracket(const GrassmannElement& X, const GrassmannElement& Y,
                            const AlgebroidSpec& A) {
    if (X.gens() != A.section_gens() || Y.gens() != A.section_gens())
        throw InputError("sn_bracket expects multivectors over the algebroid's sections");
    if (X.chart() != A.chart() || Y.chart() != A.chart())
        throw InputError("sn_bracket chart mismatch");
    GrassmannElement out = A.zero_section();
    for (const auto& [I, f] : X.terms())
        for (const auto& [J, g] : Y.terms())
            out += bracket_mono(A, I, f, J, g);
    return out;
}

GrassmannElement exterior_d(const GrassmannElement& mu, const AlgebroidSpec& A) {
    if (mu.gens() != A.form_gens())
        throw InputError("exterior_d expects a form over the algebroid");
    const int r = A.rank();
    GrassmannElement out(A.chart(), A.form_gens());
    for (const auto& comp : mu.components()) {
        int k = comp.first; // form degree
        const GrassmannElement& m = comp.second;
        // output degree k+1, coefficients from the Chevalley-Eilenberg formula
        std::vector<int> idx(static_cast<size_t>(k + 1));
        std::function<void(int, int)> rec = [&](int pos, int start) {
            if (pos == k + 1) {
                Scalar coeff = Scalar::zero(A.chart());
                // sum_i (-1)^{i+1} a(X_i)( mu(..omit i..) )  (1-based i)
                for (int i = 0; i <= k; ++i) {
                    std::vector<GrassmannElement> rest;
                    for (int t = 0; t <= k; ++t)
                        if (t != i)
                            rest.push_back(A.section(idx[size_t(t)]));
                    Scalar inner = eval_form(m, rest);
                    Scalar term = A.anchor_apply(A.section(idx[size_t(i)]), inner);
                    coeff += (i % 2 == 0) ? term : -term;
                }
                // sum_{i<j} (-1)^{i+j} mu([X_i,X_j], ..omit i,j..)
                for (int i = 0; i <= k; ++i)
                    for (int j = i + 1; j <= k; ++j) {
                        std::vector<GrassmannElement> args;
                        args.push_back(frame_bracket(A, idx[size_t(i)], idx[size_t(j)]));
                        for (int t = 0; t <= k; ++t)
                            if (t != i && t != j)
                                args.push_back(A.section(idx[size_t(t)]));
                        Scalar term = eval_form(m, args);
                        coeff += ((i + j) % 2 == 0) ? term : -term; // (-1)^{(i+1)+(j+1)}
                    }
                out.add_term(MultiIndex(idx.begin(), idx.end()), coeff);
                return;
            }
            for (int g = start; g < r; ++g) {
                idx[size_t(pos)] = g;
                rec(pos + 1, g + 1);
            }
        };
        rec(0, 0);
    }
    return out;
}

GrassmannElement lie_derivative(const GrassmannElement& X, const GrassmannElement& mu,
                                const AlgebroidSpec& A) {
    if (!X.is_zero() && X.tensor_degree() != 1)
        throw InputError("lie_derivative expects a tensor-degree-1 multivector");
    return contract_form(X, exterior_d(mu, A)) + exterior_d(contract_form(X, mu), A);
}

} // namespace schouten
