#include "schouten/scalar.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace schouten {

Rational factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return Rational(r);
}

int permutation_sign(const std::vector<int>& seq) {
    int inv = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j])
                ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

Scalar Scalar::constant(const Chart& chart, const Rational& c) {
    Scalar s(chart);
    if (c != 0)
        s.terms_[Monomial{std::vector<int>(size_t(chart.coord_count()), 0), 0}] = c;
    return s;
}

Scalar Scalar::coordinate(const Chart& chart, const std::string& name) {
    Monomial m{std::vector<int>(size_t(chart.coord_count()), 0), 0};
    m.exps[size_t(chart.index_of(name))] = 1;
    return monomial(chart, std::move(m), 1);
}

Scalar Scalar::monomial(const Chart& chart, Monomial m, const Rational& c) {
    if (int(m.exps.size()) != chart.coord_count())
        throw InputError("monomial exponent vector does not match chart");
    if (m.exp_weight != 0 && !chart.exp_coord())
        throw InputError("exp weight on a chart without exponential coordinate");
    Scalar s(chart);
    if (c != 0)
        s.terms_[std::move(m)] = c;
    return s;
}

Scalar Scalar::exp_weight(const Chart& chart, int k) {
    if (!chart.exp_coord())
        throw InputError("chart declares no exponential coordinate");
    return monomial(chart, Monomial{std::vector<int>(size_t(chart.coord_count()), 0), k}, 1);
}

bool Scalar::is_constant() const {
    if (terms_.empty())
        return true;
    if (terms_.size() > 1)
        return false;
    const Monomial& m = terms_.begin()->first;
    if (m.exp_weight != 0)
        return false;
    return std::all_of(m.exps.begin(), m.exps.end(), [](int e) { return e == 0; });
}

Rational Scalar::constant_value() const {
    if (terms_.empty())
        return 0;
    if (!is_constant())
        throw InputError("scalar is not constant: " + str());
    return terms_.begin()->second;
}

int Scalar::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::accumulate(m.exps.begin(), m.exps.end(), 0));
    return d;
}

bool Scalar::has_exp_weight() const {
    for (const auto& [m, c] : terms_)
        if (m.exp_weight != 0)
            return true;
    return false;
}

void Scalar::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void Scalar::require_same_chart(const Scalar& o) const {
    if (chart_ != o.chart_)
        throw InputError("scalar chart mismatch");
}

Scalar Scalar::operator-() const {
    Scalar r(chart_);
    for (const auto& [m, c] : terms_)
        r.terms_[m] = -c;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (terms_.empty())
        return o;
    if (o.terms_.empty())
        return *this;
    require_same_chart(o);
    Scalar r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (terms_.empty())
        return *this;
    if (o.terms_.empty())
        return o;
    require_same_chart(o);
    Scalar r(chart_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            Monomial m{m1.exps, m1.exp_weight + m2.exp_weight};
            for (size_t i = 0; i < m.exps.size(); ++i)
                m.exps[i] += m2.exps[i];
            r.add_term(m, c1 * c2);
        }
    return r;
}

Scalar Scalar::scaled(const Rational& c) const {
    Scalar r(chart_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_[m] = k * c;
    return r;
}

Scalar operator*(const Rational& c, const Scalar& s) { return s.scaled(c); }

Scalar Scalar::partial(const std::string& coord) const { return partial(chart_.index_of(coord)); }

Scalar Scalar::partial(int i) const {
    if (i < 0 || i >= chart_.coord_count())
        throw InputError("coordinate index out of range");
    bool is_exp = chart_.exp_index() && *chart_.exp_index() == i;
    Scalar r(chart_);
    for (const auto& [m, c] : terms_) {
        if (is_exp && m.exp_weight != 0)
            r.add_term(m, c * m.exp_weight);
        if (int e = m.exps[size_t(i)]; e > 0) {
            Monomial n = m;
            n.exps[size_t(i)] = e - 1;
            r.add_term(n, c * e);
        }
    }
    return r;
}

bool Scalar::operator==(const Scalar& o) const {
    if (terms_.empty() && o.terms_.empty())
        return true;
    return chart_ == o.chart_ && terms_ == o.terms_;
}

namespace {

void print_term(std::ostream& os, const Chart& chart, const Monomial& m, const Rational& c,
                bool first) {
    Rational a = c;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0)
            a = -a;
    }
    std::vector<std::string> factors;
    if (m.exp_weight != 0) {
        std::string t = *chart.exp_coord();
        std::string k;
        if (m.exp_weight == 1)
            k = t;
        else if (m.exp_weight == -1)
            k = "-" + t;
        else
            k = std::to_string(m.exp_weight) + "*" + t;
        factors.push_back("exp(" + k + ")");
    }
    bool has_vars = false;
    for (size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0)
            continue;
        has_vars = true;
        std::string f = chart.coord_name(int(i));
        if (m.exps[i] != 1)
            f += "^" + std::to_string(m.exps[i]);
        factors.push_back(f);
    }
    if (a != 1 || (!has_vars && m.exp_weight == 0))
        factors.insert(m.exp_weight != 0 ? factors.begin() + 1 : factors.begin(),
                       to_string(a));
    for (size_t i = 0; i < factors.size(); ++i)
        os << (i ? "*" : "") << factors[i];
}

} // namespace

std::string Scalar::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        print_term(os, chart_, m, c, first);
        first = false;
    }
    return os.str();
}

// ---- parser ----------------------------------------------------------

namespace {

struct ScalarParser {
    const Chart& chart;
    const std::string& s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw InputError("scalar parse error at column " + std::to_string(pos + 1) + ": " +
                         msg + " in '" + s + "'");
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    Integer parse_uint() {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected digits");
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return Integer(s.substr(start, pos - start));
    }

    std::string parse_name() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start)
            fail("expected a name");
        return s.substr(start, pos - start);
    }

    int parse_exp_weight() {
        // inside exp( ... ): [-]k*t | [-]t
        skip_ws();
        bool neg = eat('-');
        Integer k = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            k = parse_uint();
            if (!eat('*'))
                fail("expected '*' after exp weight");
        }
        std::string t = parse_name();
        if (!chart.exp_coord() || *chart.exp_coord() != t)
            fail("'" + t + "' is not the chart's exponential coordinate");
        if (!eat(')'))
            fail("expected ')'");
        Integer w = neg ? -k : k;
        return int(w);
    }

    // factor := rational | name[^int] | exp(...) | ( scalar )
    Scalar parse_factor() {
        skip_ws();
        if (pos >= s.size())
            fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Scalar inner = parse_sum();
            if (!eat(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = parse_uint();
            Integer den = 1;
            if (eat('/'))
                den = parse_uint();
            if (den == 0)
                fail("zero denominator");
            return Scalar::constant(chart, Rational(num, den));
        }
        std::string name = parse_name();
        if (name == "exp" && peek() == '(') {
            ++pos;
            return Scalar::exp_weight(chart, parse_exp_weight());
        }
        if (!chart.find(name))
            fail("unknown coordinate '" + name + "'");
        int e = 1;
        if (eat('^'))
            e = int(parse_uint());
        Monomial m{std::vector<int>(size_t(chart.coord_count()), 0), 0};
        m.exps[size_t(chart.index_of(name))] = e;
        return Scalar::monomial(chart, std::move(m), 1);
    }

    Scalar parse_product() {
        Scalar r = parse_factor();
        while (eat('*'))
            r = r * parse_factor();
        return r;
    }

    Scalar parse_sum() {
        Scalar r(chart);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        r = parse_product();
        if (neg)
            r = -r;
        for (;;) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos;
                Scalar t = parse_product();
                r = (c == '+') ? r + t : r - t;
            } else {
                break;
            }
        }
        return r;
    }
};

} // namespace

Scalar Scalar::parse(const Chart& chart, const std::string& text) {
    ScalarParser p{chart, text};
    Scalar r = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size())
        p.fail("trailing input");
    return r;
}

} // namespace schouten
