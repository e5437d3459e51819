#pragma once

#include "schouten/chart.hpp"
#include "schouten/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace schouten {

// Exponent data of one term: a vector of exponents aligned with the chart's
// coordinate list, plus the integer weight k of an e^{k t} factor in the
// chart's exponential coordinate (0 when the chart declares none).
struct Monomial {
    std::vector<int> exps;
    int exp_weight = 0;

    bool operator==(const Monomial&) const = default;
    // Map order doubles as print order: leading monomials first
    // (lexicographic in chart coordinate order, descending).
    bool operator<(const Monomial& o) const {
        if (exp_weight != o.exp_weight)
            return exp_weight > o.exp_weight;
        return exps > o.exps;
    }
};

// Element of Q[x_1,...,x_n] extended by integer powers of e^t in the chart's
// exponential coordinate. Canonical form: no zero coefficients, terms sorted
// by (exp weight, exponent vector). All operations are pure.
class Scalar {
  public:
    Scalar() = default;
    explicit Scalar(Chart chart) : chart_(std::move(chart)) {}

    static Scalar zero(const Chart& chart) { return Scalar(chart); }
    static Scalar constant(const Chart& chart, const Rational& c);
    static Scalar coordinate(const Chart& chart, const std::string& name);
    static Scalar monomial(const Chart& chart, Monomial m, const Rational& c);
    // e^{k t}; requires the chart to declare an exponential coordinate.
    static Scalar exp_weight(const Chart& chart, int k);

    const Chart& chart() const { return chart_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Rational value of a constant scalar (throws if non-constant).
    Rational constant_value() const;
    // Total polynomial degree (exp weights not counted); -1 for zero.
    int degree() const;
    bool has_exp_weight() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar scaled(const Rational& c) const;

    // Formal partial derivative. For the exponential coordinate t,
    // d/dt (e^{k t} p) = e^{k t} (k p + dp/dt).
    Scalar partial(const std::string& coord) const;
    Scalar partial(int coord_index) const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form, e.g. "3/2*x^2*y - 1" or "exp(-2*t)*x*t + 1".
    std::string str() const;

    // Parses the documented scalar grammar; pos_offset shifts reported
    // column numbers when the text is embedded in a larger document line.
    static Scalar parse(const Chart& chart, const std::string& text);

    void add_term(const Monomial& m, const Rational& c); // normalizing insert

  private:
    void require_same_chart(const Scalar& o) const;

    Chart chart_;
    std::map<Monomial, Rational> terms_;
};

Scalar operator*(const Rational& c, const Scalar& s);

} // namespace schouten
