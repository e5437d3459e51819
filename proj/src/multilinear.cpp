#include "schouten/multilinear.hpp"

#include "schouten/error.hpp"

#include <algorithm>
#include <numeric>

namespace schouten {

namespace {

size_t tensor_size(int dim, int degree) {
    size_t n = 1;
    for (int i = 0; i < degree + 2; ++i)
        n *= size_t(dim);
    return n;
}

// Iterates over all index tuples of length `len` with entries in [0, dim).
struct TupleIter {
    int dim, len;
    std::vector<int> idx;
    bool done = false;
    TupleIter(int dim, int len) : dim(dim), len(len), idx(size_t(std::max(len, 0)), 0) {
        if (dim == 0 && len > 0)
            done = true;
    }
    explicit operator bool() const { return !done; }
    void next() {
        for (int i = len - 1; i >= 0; --i) {
            if (++idx[size_t(i)] < dim)
                return;
            idx[size_t(i)] = 0;
        }
        done = true;
    }
};

size_t flat_index(int dim, int out, std::span<const int> ins) {
    size_t f = size_t(out);
    for (int i : ins)
        f = f * size_t(dim) + size_t(i);
    return f;
}

void check_same_shape(const MultilinearOp& a, const MultilinearOp& b) {
    if (a.dim() != b.dim())
        throw InputError("multilinear dimension mismatch");
    if (a.degree() != b.degree())
        throw InputError("multilinear degree mismatch");
}

} // namespace

MultilinearOp MultilinearOp::zero(int dim, int degree) {
    if (dim <= 0)
        throw InputError("multilinear dimension must be positive");
    if (degree < -1)
        degree = -1; // degrees below -1 collapse to the zero vector space
    MultilinearOp r;
    r.dim_ = dim;
    r.degree_ = degree;
    r.t_.assign(tensor_size(dim, degree), Rational(0));
    return r;
}

MultilinearOp MultilinearOp::vector(std::vector<Rational> v) {
    MultilinearOp r;
    r.dim_ = int(v.size());
    r.degree_ = -1;
    r.t_ = std::move(v);
    return r;
}

MultilinearOp MultilinearOp::identity(int dim) {
    MultilinearOp r = zero(dim, 0);
    for (int i = 0; i < dim; ++i)
        r.t_[flat_index(dim, i, std::array{i})] = 1;
    return r;
}

MultilinearOp MultilinearOp::basis_vector(int dim, int i) {
    MultilinearOp r = zero(dim, -1);
    r.t_[size_t(i)] = 1;
    return r;
}

bool MultilinearOp::is_zero() const {
    return std::all_of(t_.begin(), t_.end(), [](const Rational& c) { return c == 0; });
}

const Rational& MultilinearOp::at(int out, std::span<const int> ins) const {
    return t_[flat_index(dim_, out, ins)];
}

Rational& MultilinearOp::at(int out, std::span<const int> ins) {
    return t_[flat_index(dim_, out, ins)];
}

std::vector<Rational> MultilinearOp::apply_basis(std::span<const int> ins) const {
    std::vector<Rational> v(static_cast<size_t>(dim_));
    for (int o = 0; o < dim_; ++o)
        v[size_t(o)] = at(o, ins);
    return v;
}

MultilinearOp MultilinearOp::operator-() const {
    MultilinearOp r = *this;
    for (auto& c : r.t_)
        c = -c;
    return r;
}

MultilinearOp MultilinearOp::operator+(const MultilinearOp& o) const {
    if (dim_ == o.dim_ && degree_ != o.degree_) {
        // degrees below -1 collapse to zero elements; absorb zero operands
        if (o.is_zero())
            return *this;
        if (is_zero())
            return o;
    }
    check_same_shape(*this, o);
    MultilinearOp r = *this;
    for (size_t i = 0; i < t_.size(); ++i)
        r.t_[i] += o.t_[i];
    return r;
}

MultilinearOp MultilinearOp::operator-(const MultilinearOp& o) const { return *this + (-o); }

MultilinearOp MultilinearOp::scaled(const Rational& c) const {
    MultilinearOp r = *this;
    for (auto& x : r.t_)
        x *= c;
    return r;
}

bool MultilinearOp::operator==(const MultilinearOp& o) const {
    return dim_ == o.dim_ && degree_ == o.degree_ && t_ == o.t_;
}

bool MultilinearOp::is_skew() const {
    // adjacent transpositions generate the full symmetric group
    const int arity = this->arity();
    if (arity <= 1)
        return true;
    std::vector<int> swapped;
    for (int s = 0; s + 1 < arity; ++s)
        for (int out = 0; out < dim_; ++out)
            for (TupleIter it(dim_, arity); it; it.next()) {
                swapped = it.idx;
                std::swap(swapped[size_t(s)], swapped[size_t(s) + 1]);
                if (at(out, it.idx) != -at(out, swapped))
                    return false;
            }
    return true;
}

// ---- algebra ----------------------------------------------------------

Algebra Algebra::truncated_polynomial(int dim) {
    Algebra a;
    a.dim = dim;
    a.mult.assign(size_t(dim) * size_t(dim) * size_t(dim), Rational(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i + j < dim)
                a.mult[size_t(i) * size_t(dim) * size_t(dim) + size_t(j) * size_t(dim) +
                       size_t(i + j)] = 1;
    a.unit.assign(size_t(dim), Rational(0));
    a.unit[0] = 1;
    return a;
}

Algebra Algebra::diagonal(int dim) {
    Algebra a;
    a.dim = dim;
    a.mult.assign(size_t(dim) * size_t(dim) * size_t(dim), Rational(0));
    for (int i = 0; i < dim; ++i)
        a.mult[size_t(i) * size_t(dim) * size_t(dim) + size_t(i) * size_t(dim) + size_t(i)] = 1;
    a.unit.assign(size_t(dim), Rational(1));
    return a;
}

std::vector<Rational> Algebra::mul(std::span<const Rational> a, std::span<const Rational> b) const {
    std::vector<Rational> r(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        if (a[size_t(i)] == 0)
            continue;
        for (int j = 0; j < dim; ++j) {
            if (b[size_t(j)] == 0)
                continue;
            Rational c = a[size_t(i)] * b[size_t(j)];
            for (int k = 0; k < dim; ++k) {
                const Rational& m =
                    mult[size_t(i) * size_t(dim) * size_t(dim) + size_t(j) * size_t(dim) + size_t(k)];
                if (m != 0)
                    r[size_t(k)] += c * m;
            }
        }
    }
    return r;
}

bool Algebra::is_commutative_associative_unital() const {
    std::vector<std::vector<Rational>> basis;
    for (int i = 0; i < dim; ++i) {
        std::vector<Rational> e(static_cast<size_t>(dim));
        e[size_t(i)] = 1;
        basis.push_back(std::move(e));
    }
    for (int i = 0; i < dim; ++i) {
        if (mul(unit, basis[size_t(i)]) != basis[size_t(i)])
            return false;
        for (int j = 0; j < dim; ++j) {
            if (mul(basis[size_t(i)], basis[size_t(j)]) != mul(basis[size_t(j)], basis[size_t(i)]))
                return false;
            for (int k = 0; k < dim; ++k)
                if (mul(mul(basis[size_t(i)], basis[size_t(j)]), basis[size_t(k)]) !=
                    mul(basis[size_t(i)], mul(basis[size_t(j)], basis[size_t(k)])))
                    return false;
        }
    }
    return true;
}

MultilinearOp Algebra::product_op() const {
    MultilinearOp r = MultilinearOp::zero(dim, 1);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                r.at(k, std::array{i, j}) =
                    mult[size_t(i) * size_t(dim) * size_t(dim) + size_t(j) * size_t(dim) +
                         size_t(k)];
    return r;
}

MultilinearOp Algebra::unit_element() const { return MultilinearOp::vector(unit); }

MultilinearOp Algebra::truncated_derivation(int dim, int a) {
    if (a < 1 || a >= dim)
        throw InputError("truncated derivation exponent out of range");
    MultilinearOp r = MultilinearOp::zero(dim, 0);
    // s^j -> j s^{j+a-1}, truncated at s^dim
    for (int j = 1; j < dim; ++j)
        if (j + a - 1 < dim)
            r.at(j + a - 1, std::array{j}) = j;
    return r;
}

// ---- brackets ----------------------------------------------------------

MultilinearOp g_insertion(const MultilinearOp& A, const MultilinearOp& B) {
    if (A.dim() != B.dim())
        throw InputError("multilinear dimension mismatch");
    const int d = A.dim(), a = A.degree(), b = B.degree();
    MultilinearOp r = MultilinearOp::zero(d, a + b);
    if (a + b < -1 || a < 0)
        return r; // nothing to insert into
    const int arity = a + b + 1;
    for (int out = 0; out < d; ++out) {
        for (TupleIter it(d, arity); it; it.next()) {
            Rational sum = 0;
            std::vector<int> a_args(static_cast<size_t>(a + 1));
            for (int k = 0; k <= a; ++k) {
                int sign = (b % 2 != 0 && k % 2 != 0) ? -1 : 1; // (-1)^{bk}
                // A(x_0,...,x_{k-1}, B(x_k..x_{k+b}), x_{k+b+1},...)
                for (int i = 0; i < k; ++i)
                    a_args[size_t(i)] = it.idx[size_t(i)];
                for (int i = k + 1; i <= a; ++i)
                    a_args[size_t(i)] = it.idx[size_t(i + b)];
                std::span<const int> b_args(it.idx.data() + k, size_t(b + 1));
                Rational term = 0;
                for (int m = 0; m < d; ++m) {
                    const Rational& bc = B.at(m, b_args);
                    if (bc == 0)
                        continue;
                    a_args[size_t(k)] = m;
                    const Rational& ac = A.at(out, a_args);
                    if (ac != 0)
                        term += ac * bc;
                }
                sum += sign < 0 ? -term : term;
            }
            r.at(out, it.idx) = std::move(sum);
        }
        if (arity == 0) // degree -1 result: single empty tuple per out
            continue;
    }
    if (arity == 0) {
        // a >= 0 impossible here unless b = -a-1 <= -1 and a = 0, b = -1:
        // handled by the generic loop with zero-length tuples above.
    }
    return r;
}

MultilinearOp gerstenhaber_bracket(const MultilinearOp& A, const MultilinearOp& B) {
    const int a = A.degree(), b = B.degree();
    MultilinearOp iAB = g_insertion(B, A); // iota_A B: insert A into B
    MultilinearOp iBA = g_insertion(A, B); // iota_B A: insert B into A
    int sign = (a % 2 != 0 && b % 2 != 0) ? -1 : 1;
    return (sign < 0 ? -iBA : iBA) - iAB;
}

MultilinearOp skew_projector(const MultilinearOp& A) {
    const int arity = A.arity();
    if (arity <= 1)
        return A;
    const int d = A.dim();
    MultilinearOp r = MultilinearOp::zero(d, A.degree());
    std::vector<int> perm(static_cast<size_t>(arity));
    std::iota(perm.begin(), perm.end(), 0);
    Rational norm = Rational(1) / factorial(arity);
    std::vector<int> permuted(static_cast<size_t>(arity));
    do {
        int sign = permutation_sign(perm);
        for (int out = 0; out < d; ++out)
            for (TupleIter it(d, arity); it; it.next()) {
                for (int i = 0; i < arity; ++i)
                    permuted[size_t(i)] = it.idx[size_t(perm[size_t(i)])];
                const Rational& c = A.at(out, permuted);
                if (c != 0)
                    r.at(out, it.idx) += sign < 0 ? -c : c;
            }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto& c : r.data())
        c *= norm;
    return r;
}

MultilinearOp unshuffle_insertion(const MultilinearOp& A, const MultilinearOp& B) {
    if (A.dim() != B.dim())
        throw InputError("multilinear dimension mismatch");
    const int d = A.dim(), a = A.degree(), b = B.degree();
    MultilinearOp r = MultilinearOp::zero(d, a + b);
    if (a + b < -1 || a < 0)
        return r;
    const int arity = a + b + 1;
    // Unshuffles: choose positions of the first block (b+1 of them), both
    // blocks increasing. Sign is the parity of the concatenated selection.
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

    std::vector<int> a_args(static_cast<size_t>(a + 1)), b_args(static_cast<size_t>(b + 1)), seq(static_cast<size_t>(arity));
    for (int out = 0; out < d; ++out)
        for (TupleIter it(d, arity); it; it.next()) {
            Rational sum = 0;
            for (const auto& block : blocks) {
                std::vector<char> in_block(size_t(arity), 0);
                for (size_t i = 0; i < block.size(); ++i) {
                    seq[i] = block[i];
                    in_block[size_t(block[i])] = 1;
                    b_args[i] = it.idx[size_t(block[i])];
                }
                size_t w = block.size();
                for (int i = 0; i < arity; ++i)
                    if (!in_block[size_t(i)]) {
                        seq[w] = i;
                        a_args[w - block.size() + 1] = it.idx[size_t(i)];
                        ++w;
                    }
                int sign = permutation_sign(seq);
                Rational term = 0;
                for (int m = 0; m < d; ++m) {
                    const Rational& bc = B.at(m, b_args);
                    if (bc == 0)
                        continue;
                    a_args[0] = m;
                    const Rational& ac = A.at(out, a_args);
                    if (ac != 0)
                        term += ac * bc;
                }
                sum += sign < 0 ? -term : term;
            }
            r.at(out, it.idx) = std::move(sum);
        }
    return r;
}

MultilinearOp nr_bracket(const MultilinearOp& A, const MultilinearOp& B) {
    if (!A.is_skew() || !B.is_skew())
        throw InputError("nr_bracket requires skew-symmetric operators");
    const int a = A.degree(), b = B.degree();
    MultilinearOp iAB = unshuffle_insertion(B, A); // i_A B
    MultilinearOp iBA = unshuffle_insertion(A, B); // i_B A
    int sign = (a % 2 != 0 && b % 2 != 0) ? -1 : 1;
    return (sign < 0 ? -iBA : iBA) - iAB;
}

MultilinearOp nr_bracket_via_skew(const MultilinearOp& A, const MultilinearOp& B) {
    if (!A.is_skew() || !B.is_skew())
        throw InputError("nr_bracket requires skew-symmetric operators");
    const int a = A.degree(), b = B.degree();
    MultilinearOp g = gerstenhaber_bracket(A, B);
    if (a + b < -1)
        return g;
    Rational factor = factorial(a + b + 1) / (factorial(a + 1) * factorial(b + 1));
    return skew_projector(g).scaled(factor);
}

MultilinearOp op_product(const MultilinearOp& A, const MultilinearOp& B, const Algebra& alg) {
    if (A.dim() != B.dim() || A.dim() != alg.dim)
        throw InputError("multilinear dimension mismatch");
    const int d = A.dim(), a = A.degree(), b = B.degree();
    MultilinearOp r = MultilinearOp::zero(d, a + b + 1);
    const int arity = a + b + 2;
    for (TupleIter it(d, arity); it; it.next()) {
        std::span<const int> a_args(it.idx.data(), size_t(a + 1));
        std::span<const int> b_args(it.idx.data() + a + 1, size_t(b + 1));
        std::vector<Rational> v = alg.mul(A.apply_basis(a_args), B.apply_basis(b_args));
        for (int out = 0; out < d; ++out)
            if (v[size_t(out)] != 0)
                r.at(out, it.idx) = v[size_t(out)];
    }
    return r;
}

MultilinearOp wedge_multilinear(const MultilinearOp& A, const MultilinearOp& B,
                                const Algebra& alg) {
    const int a = A.degree(), b = B.degree();
    Rational factor = factorial(a + b + 2) / (factorial(a + 1) * factorial(b + 1));
    return skew_projector(op_product(A, B, alg)).scaled(factor);
}

} // namespace schouten
