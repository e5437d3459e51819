#pragma once

#include "schouten/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace schouten {

enum class GenSpace { Section, Form };

// An immutable list of exterior-algebra generators: frame sections e_i of a
// bundle or their dual frame forms. Section and Form lists over the same
// frame share the names; the space tag tells them apart.
class GenList {
  public:
    GenList() = default;
    GenList(GenSpace space, std::vector<std::string> names);

    GenSpace space() const { return space_; }
    int count() const;
    const std::string& name(int i) const;
    const std::vector<std::string>& names() const;
    GenList dual() const; // same names, opposite space

    bool operator==(const GenList& o) const;
    bool operator!=(const GenList& o) const { return !(*this == o); }

  private:
    GenSpace space_ = GenSpace::Section;
    std::shared_ptr<const std::vector<std::string>> names_;
};

using MultiIndex = std::vector<int>; // strictly increasing generator indices

// Element of the Grassmann algebra over a generator list, with Scalar
// coefficients over a chart. Terms may mix tensor degrees; the graded
// bracket routines act per homogeneous component. Lie degree of a
// tensor-degree-n component is n-1.
class GrassmannElement {
  public:
    GrassmannElement() = default;
    GrassmannElement(Chart chart, GenList gens) : chart_(std::move(chart)), gens_(std::move(gens)) {}

    static GrassmannElement zero(const Chart& chart, const GenList& gens);
    static GrassmannElement from_scalar(const Chart& chart, const GenList& gens, Scalar s);
    static GrassmannElement generator(const Chart& chart, const GenList& gens, int i);
    static GrassmannElement monomial(const Chart& chart, const GenList& gens, MultiIndex idx,
                                     Scalar coeff);

    const Chart& chart() const { return chart_; }
    const GenList& gens() const { return gens_; }
    const std::map<MultiIndex, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    int tensor_degree() const;              // throws on mixed degrees
    int lie_degree() const { return tensor_degree() - 1; }
    // Homogeneous components keyed by tensor degree.
    std::map<int, GrassmannElement> components() const;
    // Coefficient of a monomial (zero scalar if absent).
    Scalar coeff(const MultiIndex& idx) const;
    // Degree-0 part as a Scalar.
    Scalar scalar_part() const;

    GrassmannElement operator-() const;
    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;
    GrassmannElement& operator+=(const GrassmannElement& o) { return *this = *this + o; }
    GrassmannElement& operator-=(const GrassmannElement& o) { return *this = *this - o; }
    GrassmannElement scaled(const Scalar& s) const;
    GrassmannElement scaled(const Rational& c) const;

    bool operator==(const GrassmannElement& o) const;
    bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

    // Rebuilds the element over another chart/generator list; index_map maps
    // old generator indices to new ones and coefficients are re-parsed over
    // the (super)chart by coordinate name.
    GrassmannElement transported(const Chart& chart, const GenList& gens,
                                 const std::vector<int>& index_map) const;

    GrassmannElement map_coeffs(const std::function<Scalar(const Scalar&)>& f) const;

    void add_term(MultiIndex idx, const Scalar& coeff); // normalizing insert

    std::string str() const; // canonical one-line form, for diagnostics

  private:
    void require_compatible(const GrassmannElement& o) const;

    Chart chart_;
    GenList gens_;
    std::map<MultiIndex, Scalar> terms_;
};

GrassmannElement wedge(const GrassmannElement& a, const GrassmannElement& b);

// Interior product of a form by a multivector, inserting the multivector's
// factors in front: (i_X mu)(Y...) = mu(X_1,...,X_p, Y...).
GrassmannElement contract_form(const GrassmannElement& X, const GrassmannElement& mu);

// Dual interior product of a multivector by a form:
// i_{eps}(X_1^...^X_p) = sum_k (-1)^{k-1} eps(X_k) X_1^...^X_k-hat^...^X_p
// for 1-forms, extended so that <i_mu X, nu> = <X, mu^nu>.
GrassmannElement contract_multivector(const GrassmannElement& mu, const GrassmannElement& X);

// Full pairing of equal tensor degrees; <e_I, eps_I> = 1 for increasing I.
Scalar pairing(const GrassmannElement& X, const GrassmannElement& mu);

// Evaluates a form on tensor-degree-1 multivectors: mu(v_1,...,v_k).
Scalar eval_form(const GrassmannElement& mu, std::span<const GrassmannElement> args);

// Scalar embedding into a chart whose coordinate set contains the source's.
Scalar extend_scalar(const Scalar& s, const Chart& target);

} // namespace schouten
