#include "schouten/fn_ops.hpp"

#include <algorithm>
#include <numeric>

namespace schouten {

std::vector<std::string> tangent_coord_names(const Chart& chart) {
    std::vector<std::string> coords = chart.base_coords();
    coords.insert(coords.end(), chart.fiber_coords().begin(), chart.fiber_coords().end());
    return coords;
}

GenList tangent_section_gens(const Chart& chart) {
    std::vector<std::string> names;
    for (const auto& c : tangent_coord_names(chart))
        names.push_back("d_" + c);
    return GenList(GenSpace::Section, std::move(names));
}

FnOp::FnOp(Chart chart, int degree, Eval eval)
    : chart_(std::move(chart)), degree_(degree), eval_(std::move(eval)) {
    if (degree_ < -1)
        throw InputError("fn op degree below -1");
}

FnOp FnOp::value(const Chart& chart, Scalar v) {
    return FnOp(chart, -1, [v = std::move(v)](std::span<const Scalar>) { return v; });
}

FnOp FnOp::unit(const Chart& chart) { return value(chart, Scalar::constant(chart, 1)); }

FnOp FnOp::identity(const Chart& chart) {
    return FnOp(chart, 0, [](std::span<const Scalar> a) { return a[0]; });
}

FnOp FnOp::zero(const Chart& chart, int degree) {
    Scalar z = Scalar::zero(chart);
    return FnOp(chart, std::max(degree, -1), [z](std::span<const Scalar>) { return z; });
}

namespace {

Scalar det(const Chart& chart, std::vector<std::vector<Scalar>>& m, size_t n) {
    if (n == 0)
        return Scalar::constant(chart, 1);
    if (n == 1)
        return m[0][0];
    Scalar acc = Scalar::zero(chart);
    for (size_t r = 0; r < n; ++r) {
        if (m[r][0].is_zero())
            continue;
        std::vector<std::vector<Scalar>> minor;
        minor.reserve(n - 1);
        for (size_t i = 0; i < n; ++i) {
            if (i == r)
                continue;
            minor.emplace_back(m[i].begin() + 1, m[i].end());
        }
        Scalar sub = det(chart, minor, n - 1);
        Scalar term = m[r][0] * sub;
        acc += (r % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace

FnOp FnOp::from_multivector(const GrassmannElement& X) {
    const Chart& chart = X.chart();
    if (X.gens() != tangent_section_gens(chart))
        throw InputError("from_multivector expects a tangent multivector field");
    int p = X.tensor_degree();
    std::vector<int> coord_idx;
    for (const auto& c : tangent_coord_names(chart))
        coord_idx.push_back(chart.index_of(c));
    if (p == 0)
        return value(chart, X.scalar_part());
    auto eval = [X, coord_idx, chart](std::span<const Scalar> args) {
        Scalar acc = Scalar::zero(chart);
        size_t n = args.size();
        for (const auto& [idx, c] : X.terms()) {
            std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n));
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b)
                    m[a][b] = args[a].partial(coord_idx[size_t(idx[b])]);
            acc += c * det(chart, m, n);
        }
        return acc;
    };
    return FnOp(chart, p - 1, eval);
}

Scalar FnOp::apply(std::span<const Scalar> args) const {
    if (int(args.size()) != arity())
        throw InputError("fn op arity mismatch");
    return eval_(args);
}

Scalar FnOp::apply(std::initializer_list<Scalar> args) const {
    std::vector<Scalar> v(args);
    return apply(std::span<const Scalar>(v));
}

FnOp FnOp::operator-() const {
    auto e = eval_;
    return FnOp(chart_, degree_, [e](std::span<const Scalar> a) { return -e(a); });
}

FnOp FnOp::operator+(const FnOp& o) const {
    if (degree_ != o.degree_ || chart_ != o.chart_)
        throw InputError("fn op shape mismatch");
    auto e1 = eval_, e2 = o.eval_;
    return FnOp(chart_, degree_, [e1, e2](std::span<const Scalar> a) { return e1(a) + e2(a); });
}

FnOp FnOp::operator-(const FnOp& o) const { return *this + (-o); }

FnOp FnOp::scaled(const Rational& c) const {
    auto e = eval_;
    return FnOp(chart_, degree_, [e, c](std::span<const Scalar> a) { return e(a).scaled(c); });
}

FnOp fn_unshuffle_insertion(const FnOp& A, const FnOp& B) {
    if (A.chart() != B.chart())
        throw InputError("fn op chart mismatch");
    const int a = A.degree(), b = B.degree();
    const Chart chart = A.chart();
    if (a + b < -1 || a < 0)
        return FnOp::zero(chart, a + b);
    const int arity = a + b + 1;
    std::vector<std::vector<int>> blocks;
    std::vector<int> sel;
    std::function<void(int)> choose = [&](int start) {
        if (int(sel.size()) == b + 1) {
            blocks.push_back(sel);
            return;
        }
        for (int i = start; i < arity; ++i) {
            sel.push_back(i);
            choose(i + 1);
            sel.pop_back();
        }
    };
    if (b + 1 == 0)
        blocks.push_back({});
    else
        choose(0);

    auto eval = [A, B, blocks, arity, chart](std::span<const Scalar> args) {
        Scalar acc = Scalar::zero(chart);
        for (const auto& block : blocks) {
            std::vector<char> in_block(size_t(arity), 0);
            std::vector<int> seq;
            std::vector<Scalar> b_args;
            for (int i : block) {
                in_block[size_t(i)] = 1;
                seq.push_back(i);
                b_args.push_back(args[size_t(i)]);
            }
            std::vector<Scalar> a_args;
            a_args.push_back(B.apply(b_args));
            for (int i = 0; i < arity; ++i)
                if (!in_block[size_t(i)]) {
                    seq.push_back(i);
                    a_args.push_back(args[size_t(i)]);
                }
            Scalar term = A.apply(a_args);
            acc += permutation_sign(seq) < 0 ? -term : term;
        }
        return acc;
    };
    return FnOp(chart, a + b, eval);
}

FnOp fn_nr_bracket(const FnOp& A, const FnOp& B) {
    const int a = A.degree(), b = B.degree();
    FnOp iAB = fn_unshuffle_insertion(B, A);
    FnOp iBA = fn_unshuffle_insertion(A, B);
    int sign = (a % 2 != 0 && b % 2 != 0) ? -1 : 1;
    return (sign < 0 ? -iBA : iBA) - iAB;
}

FnOp fn_wedge(const FnOp& A, const FnOp& B) {
    if (A.chart() != B.chart())
        throw InputError("fn op chart mismatch");
    const int a = A.degree(), b = B.degree();
    const Chart chart = A.chart();
    const int arity = a + b + 2;
    Rational factor = factorial(a + b + 2) / (factorial(a + 1) * factorial(b + 1) * factorial(arity));
    auto eval = [A, B, a, factor, arity, chart](std::span<const Scalar> args) {
        std::vector<int> perm(static_cast<size_t>(arity));
        std::iota(perm.begin(), perm.end(), 0);
        Scalar acc = Scalar::zero(chart);
        do {
            std::vector<Scalar> a_args, b_args;
            for (int i = 0; i <= a; ++i)
                a_args.push_back(args[size_t(perm[size_t(i)])]);
            for (int i = a + 1; i < arity; ++i)
                b_args.push_back(args[size_t(perm[size_t(i)])]);
            Scalar term = A.apply(a_args) * B.apply(b_args);
            acc += permutation_sign(perm) < 0 ? -term : term;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc.scaled(factor);
    };
    return FnOp(chart, a + b + 1, eval);
}

std::vector<std::vector<Scalar>> probe_tuples(const Chart& chart, int arity, int max_tuples) {
    std::vector<Scalar> pool;
    auto coords = tangent_coord_names(chart);
    for (const auto& c : coords)
        pool.push_back(Scalar::coordinate(chart, c));
    for (size_t i = 0; i < coords.size(); ++i)
        for (size_t j = i; j < coords.size(); ++j)
            pool.push_back(Scalar::coordinate(chart, coords[i]) *
                           Scalar::coordinate(chart, coords[j]));
    pool.push_back(Scalar::constant(chart, 1) + Scalar::coordinate(chart, coords[0]));

    std::vector<std::vector<Scalar>> out;
    if (arity == 0) {
        out.push_back({});
        return out;
    }
    // Deterministic sweep over the pool, stride-shifted per slot.
    for (size_t start = 0; start < pool.size() && int(out.size()) < max_tuples; ++start) {
        std::vector<Scalar> tuple;
        for (int k = 0; k < arity; ++k)
            tuple.push_back(pool[(start + size_t(k) * 3 + size_t(k) * size_t(k)) % pool.size()]);
        out.push_back(std::move(tuple));
    }
    return out;
}

bool fn_equal_on_probes(const FnOp& A, const FnOp& B, int max_tuples) {
    if (A.degree() != B.degree())
        return false;
    for (const auto& tuple : probe_tuples(A.chart(), A.arity(), max_tuples))
        if (A.apply(tuple) != B.apply(tuple))
            return false;
    return true;
}

bool fn_is_first_order(const FnOp& A) {
    const Chart& chart = A.chart();
    const int arity = A.arity();
    if (arity == 0)
        return true;
    std::vector<Scalar> small;
    for (const auto& c : tangent_coord_names(chart))
        small.push_back(Scalar::coordinate(chart, c));
    if (small.empty())
        return true;
    Scalar one = Scalar::constant(chart, 1);
    auto rest_tuples = probe_tuples(chart, arity - 1, 6);
    for (int slot = 0; slot < arity; ++slot) {
        for (const auto& rest : rest_tuples) {
            auto eval_with = [&](const Scalar& g) {
                std::vector<Scalar> args;
                args.reserve(size_t(arity));
                args.insert(args.end(), rest.begin(), rest.begin() + slot);
                args.push_back(g);
                args.insert(args.end(), rest.begin() + slot, rest.end());
                return A.apply(args);
            };
            Scalar d1 = eval_with(one);
            for (const Scalar& f : small)
                for (const Scalar& g : small) {
                    Scalar defect = eval_with(f * g) - f * eval_with(g) - g * eval_with(f) +
                                    f * g * d1;
                    if (!defect.is_zero())
                        return false;
                }
        }
    }
    return true;
}

namespace {

// Reads off the multivector field of a derivation-type skew operator by
// probing with coordinate tuples: the coefficient of d_{j_0}^...^d_{j_q} is
// D(x_{j_0},...,x_{j_q}).
GrassmannElement extract_multivector(const FnOp& D) {
    const Chart& chart = D.chart();
    GenList gens = tangent_section_gens(chart);
    GrassmannElement out(chart, gens);
    int q = D.degree();
    if (q == -1) {
        out.add_term({}, D.apply(std::span<const Scalar>()));
        return out;
    }
    auto coords = tangent_coord_names(chart);
    int n = int(coords.size());
    std::vector<int> idx(static_cast<size_t>(q + 1));
    std::function<void(int, int)> rec = [&](int pos, int start) {
        if (pos == q + 1) {
            std::vector<Scalar> args;
            for (int i : idx)
                args.push_back(Scalar::coordinate(chart, coords[size_t(i)]));
            out.add_term(MultiIndex(idx.begin(), idx.end()), D.apply(args));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[size_t(pos)] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

FirstOrderSplit split_first_order(const FnOp& A) {
    const Chart& chart = A.chart();
    if (!fn_is_first_order(A))
        throw InputError("operator is not first order in each slot");
    const int a = A.degree();
    if (a == -1) {
        // Functions sit in the derivation part; the complement is zero.
        GenList gens = tangent_section_gens(chart);
        return {extract_multivector(A), GrassmannElement::zero(chart, gens)};
    }
    // A_2 = i_1 A = A(1,.,...,.)
    Scalar one = Scalar::constant(chart, 1);
    FnOp A2(chart, a - 1, [A, one](std::span<const Scalar> args) {
        std::vector<Scalar> full;
        full.push_back(one);
        full.insert(full.end(), args.begin(), args.end());
        return A.apply(full);
    });
    FnOp A1 = A - fn_wedge(FnOp::identity(chart), A2);
    FirstOrderSplit split{extract_multivector(A1), extract_multivector(A2)};
    // The extraction is only faithful for derivation-type parts; verify the
    // reconstruction against A itself.
    FnOp d_op = split.derivation_part.is_zero() ? FnOp::zero(chart, a)
                                                : FnOp::from_multivector(split.derivation_part);
    FnOp z_op = split.zero_order_part.is_zero()
                    ? FnOp::zero(chart, a - 1)
                    : FnOp::from_multivector(split.zero_order_part);
    FnOp rebuilt = d_op + fn_wedge(FnOp::identity(chart), z_op);
    if (!fn_equal_on_probes(A, rebuilt, 12))
        throw InputError("first-order splitting failed to reconstruct the operator");
    return split;
}

} // namespace schouten
