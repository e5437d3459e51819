#include "schouten/grassmann.hpp"

#include <algorithm>
#include <sstream>

namespace schouten {

GenList::GenList(GenSpace space, std::vector<std::string> names)
    : space_(space), names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {}

int GenList::count() const { return names_ ? int(names_->size()) : 0; }

const std::string& GenList::name(int i) const { return names_->at(size_t(i)); }

const std::vector<std::string>& GenList::names() const {
    static const std::vector<std::string> empty;
    return names_ ? *names_ : empty;
}

GenList GenList::dual() const {
    GenList g;
    g.space_ = space_ == GenSpace::Section ? GenSpace::Form : GenSpace::Section;
    g.names_ = names_;
    return g;
}

bool GenList::operator==(const GenList& o) const {
    if (space_ != o.space_)
        return false;
    if (names_ == o.names_)
        return true;
    return names().size() == o.names().size() && names() == o.names();
}

GrassmannElement GrassmannElement::zero(const Chart& chart, const GenList& gens) {
    return GrassmannElement(chart, gens);
}

GrassmannElement GrassmannElement::from_scalar(const Chart& chart, const GenList& gens, Scalar s) {
    GrassmannElement e(chart, gens);
    e.add_term({}, s);
    return e;
}

GrassmannElement GrassmannElement::generator(const Chart& chart, const GenList& gens, int i) {
    if (i < 0 || i >= gens.count())
        throw InputError("generator index out of range");
    GrassmannElement e(chart, gens);
    e.add_term({i}, Scalar::constant(chart, 1));
    return e;
}

GrassmannElement GrassmannElement::monomial(const Chart& chart, const GenList& gens,
                                            MultiIndex idx, Scalar coeff) {
    for (size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] < 0 || idx[k] >= gens.count())
            throw InputError("generator index out of range");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw InputError("multi-index must be strictly increasing");
    }
    GrassmannElement e(chart, gens);
    e.add_term(std::move(idx), coeff);
    return e;
}

bool GrassmannElement::is_homogeneous() const {
    if (terms_.empty())
        return true;
    size_t d = terms_.begin()->first.size();
    for (const auto& [idx, c] : terms_)
        if (idx.size() != d)
            return false;
    return true;
}

int GrassmannElement::tensor_degree() const {
    if (terms_.empty())
        return 0;
    if (!is_homogeneous())
        throw InputError("element mixes tensor degrees");
    return int(terms_.begin()->first.size());
}

std::map<int, GrassmannElement> GrassmannElement::components() const {
    std::map<int, GrassmannElement> out;
    for (const auto& [idx, c] : terms_) {
        auto [it, fresh] = out.try_emplace(int(idx.size()), chart_, gens_);
        it->second.terms_[idx] = c;
    }
    return out;
}

Scalar GrassmannElement::coeff(const MultiIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar::zero(chart_) : it->second;
}

Scalar GrassmannElement::scalar_part() const { return coeff({}); }

void GrassmannElement::add_term(MultiIndex idx, const Scalar& coeff) {
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(std::move(idx), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void GrassmannElement::require_compatible(const GrassmannElement& o) const {
    if (chart_ != o.chart_ || gens_ != o.gens_)
        throw InputError("grassmann elements live over different charts or generator lists");
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement r(chart_, gens_);
    for (const auto& [idx, c] : terms_)
        r.terms_[idx] = -c;
    return r;
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    if (terms_.empty())
        return o;
    if (o.terms_.empty())
        return *this;
    require_compatible(o);
    GrassmannElement r = *this;
    for (const auto& [idx, c] : o.terms_)
        r.add_term(idx, c);
    return r;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
    return *this + (-o);
}

GrassmannElement GrassmannElement::scaled(const Scalar& s) const {
    GrassmannElement r(chart_, gens_);
    for (const auto& [idx, c] : terms_)
        r.add_term(idx, c * s);
    return r;
}

GrassmannElement GrassmannElement::scaled(const Rational& c) const {
    GrassmannElement r(chart_, gens_);
    if (c == 0)
        return r;
    for (const auto& [idx, k] : terms_)
        r.terms_[idx] = k.scaled(c);
    return r;
}

bool GrassmannElement::operator==(const GrassmannElement& o) const {
    if (terms_.empty() && o.terms_.empty())
        return true;
    return chart_ == o.chart_ && gens_ == o.gens_ && terms_ == o.terms_;
}

Scalar extend_scalar(const Scalar& s, const Chart& target) {
    if (s.chart() == target)
        return s;
    std::vector<int> coord_map(static_cast<size_t>(s.chart().coord_count()));
    for (int i = 0; i < s.chart().coord_count(); ++i)
        coord_map[size_t(i)] = target.index_of(s.chart().coord_name(i));
    Scalar r(target);
    for (const auto& [m, c] : s.terms()) {
        Monomial n{std::vector<int>(size_t(target.coord_count()), 0), m.exp_weight};
        for (size_t i = 0; i < m.exps.size(); ++i)
            n.exps[size_t(coord_map[i])] = m.exps[i];
        if (m.exp_weight != 0 && !target.exp_coord())
            throw InputError("target chart lacks the exponential coordinate");
        r.add_term(n, c);
    }
    return r;
}

GrassmannElement GrassmannElement::transported(const Chart& chart, const GenList& gens,
                                               const std::vector<int>& index_map) const {
    GrassmannElement r(chart, gens);
    for (const auto& [idx, c] : terms_) {
        MultiIndex mapped;
        mapped.reserve(idx.size());
        for (int i : idx)
            mapped.push_back(index_map.at(size_t(i)));
        std::vector<int> order(mapped.begin(), mapped.end());
        int sign = permutation_sign(order);
        std::sort(mapped.begin(), mapped.end());
        if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
            throw InputError("transport collapses distinct generators");
        Scalar cc = extend_scalar(c, chart);
        r.add_term(std::move(mapped), sign < 0 ? -cc : cc);
    }
    return r;
}

GrassmannElement GrassmannElement::map_coeffs(const std::function<Scalar(const Scalar&)>& f) const {
    GrassmannElement r(chart_, gens_);
    for (const auto& [idx, c] : terms_)
        r.add_term(idx, f(c));
    return r;
}

std::string GrassmannElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first)
            os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t k = 0; k < idx.size(); ++k)
            os << (k ? "^" : " ") << gens_.name(idx[k]);
    }
    return os.str();
}

namespace {

// Sign and merged index for wedging two strictly increasing multi-indices;
// returns false on a repeated generator.
bool merge_indices(const MultiIndex& a, const MultiIndex& b, MultiIndex& out, int& sign) {
    std::vector<int> seq;
    seq.reserve(a.size() + b.size());
    seq.insert(seq.end(), a.begin(), a.end());
    seq.insert(seq.end(), b.begin(), b.end());
    out = seq;
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        return false;
    sign = permutation_sign(seq);
    return true;
}

// Sign of extracting subset S (increasing) from T (increasing, S included):
// parity of concat(S, T minus S) relative to T. Returns 0 if S is not a
// subset of T; otherwise fills `rest`.
int subset_sign(const MultiIndex& S, const MultiIndex& T, MultiIndex& rest) {
    rest.clear();
    std::vector<char> used(T.size(), 0);
    for (int s : S) {
        auto it = std::lower_bound(T.begin(), T.end(), s);
        if (it == T.end() || *it != s)
            return 0;
        used[size_t(it - T.begin())] = 1;
    }
    std::vector<int> seq(S.begin(), S.end());
    for (size_t i = 0; i < T.size(); ++i)
        if (!used[i]) {
            rest.push_back(T[i]);
            seq.push_back(T[i]);
        }
    return permutation_sign(seq);
}

} // namespace

GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b) {
    if (a.chart() != b.chart() || a.gens() != b.gens())
        throw InputError("wedge of elements over different charts or generator lists");
    GrassmannElement r(a.chart(), a.gens());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            MultiIndex merged;
            int sign;
            if (!merge_indices(ia, ib, merged, sign))
                continue;
            Scalar c = ca * cb;
            r.add_term(std::move(merged), sign < 0 ? -c : c);
        }
    return r;
}

GrassmannElement contract_form(const GrassmannElement& X, const GrassmannElement& mu) {
    if (X.chart() != mu.chart() || X.gens().names() != mu.gens().names())
        throw InputError("contraction over mismatched charts or frames");
    if (X.gens().space() != GenSpace::Section || mu.gens().space() != GenSpace::Form)
        throw InputError("contract_form expects a multivector and a form");
    GrassmannElement r(mu.chart(), mu.gens());
    for (const auto& [S, cX] : X.terms())
        for (const auto& [T, cmu] : mu.terms()) {
            if (S.size() > T.size())
                continue;
            MultiIndex rest;
            int sign = subset_sign(S, T, rest);
            if (sign == 0)
                continue;
            Scalar c = cX * cmu;
            r.add_term(std::move(rest), sign < 0 ? -c : c);
        }
    return r;
}

GrassmannElement contract_multivector(const GrassmannElement& mu, const GrassmannElement& X) {
    if (X.chart() != mu.chart() || X.gens().names() != mu.gens().names())
        throw InputError("contraction over mismatched charts or frames");
    if (X.gens().space() != GenSpace::Section || mu.gens().space() != GenSpace::Form)
        throw InputError("contract_multivector expects a form and a multivector");
    GrassmannElement r(X.chart(), X.gens());
    for (const auto& [S, cmu] : mu.terms())
        for (const auto& [T, cX] : X.terms()) {
            if (S.size() > T.size())
                continue;
            MultiIndex rest;
            int sign = subset_sign(S, T, rest);
            if (sign == 0)
                continue;
            Scalar c = cmu * cX;
            r.add_term(std::move(rest), sign < 0 ? -c : c);
        }
    return r;
}

Scalar pairing(const GrassmannElement& X, const GrassmannElement& mu) {
    if (X.chart() != mu.chart() || X.gens().names() != mu.gens().names())
        throw InputError("pairing over mismatched charts or frames");
    Scalar r = Scalar::zero(X.chart());
    for (const auto& [S, cX] : X.terms()) {
        auto it = mu.terms().find(S);
        if (it != mu.terms().end())
            r += cX * it->second;
    }
    return r;
}

Scalar eval_form(const GrassmannElement& mu, std::span<const GrassmannElement> args) {
    if (args.empty())
        return mu.scalar_part();
    GrassmannElement w = args[0];
    for (size_t i = 1; i < args.size(); ++i)
        w = wedge(w, args[i]);
    return pairing(w, mu);
}

} // namespace schouten
