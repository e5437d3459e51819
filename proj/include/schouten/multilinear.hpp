#pragma once

#include "schouten/rational.hpp"

#include <span>
#include <vector>

namespace schouten {

// Dense (p+1)-linear map A: V^{p+1} -> V on V = Q^d, Lie degree p >= -1.
// Degree -1 elements are plain vectors of V. Storage is a flat tensor
// T[out][in_0]...[in_p] in row-major layout, d^{p+2} entries (d for p = -1).
class MultilinearOp {
  public:
    MultilinearOp() = default;
    static MultilinearOp zero(int dim, int degree);
    static MultilinearOp vector(std::vector<Rational> v); // degree -1
    static MultilinearOp identity(int dim);               // degree 0
    static MultilinearOp basis_vector(int dim, int i);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    int arity() const { return degree_ + 1; }
    bool is_zero() const;

    const Rational& at(int out, std::span<const int> ins) const;
    Rational& at(int out, std::span<const int> ins);
    const std::vector<Rational>& data() const { return t_; }
    std::vector<Rational>& data() { return t_; }

    // Applies the map to basis-index arguments, returning a vector of V.
    std::vector<Rational> apply_basis(std::span<const int> ins) const;

    MultilinearOp operator-() const;
    MultilinearOp operator+(const MultilinearOp& o) const;
    MultilinearOp operator-(const MultilinearOp& o) const;
    MultilinearOp scaled(const Rational& c) const;
    bool operator==(const MultilinearOp& o) const;
    bool operator!=(const MultilinearOp& o) const { return !(*this == o); }

    bool is_skew() const;

  private:
    int dim_ = 0;
    int degree_ = -1;
    std::vector<Rational> t_;
};

// Finite-dimensional commutative associative unital algebra on Q^d, used by
// the wedge product and the first-order splitting.
struct Algebra {
    int dim = 0;
    std::vector<Rational> mult; // [i*d*d + j*d + k]: e_i e_j = sum_k mult[...] e_k
    std::vector<Rational> unit;

    static Algebra truncated_polynomial(int dim); // Q[s]/(s^dim), basis 1..s^{dim-1}
    static Algebra diagonal(int dim);             // componentwise product

    std::vector<Rational> mul(std::span<const Rational> a, std::span<const Rational> b) const;
    bool is_commutative_associative_unital() const;
    MultilinearOp product_op() const;      // multiplication as a degree-1 op
    MultilinearOp unit_element() const;    // the unit as a degree -1 op
    // s^a d/ds for a = 1..dim-1; derivations of the truncated algebra.
    static MultilinearOp truncated_derivation(int dim, int a);
};

// Insertion with the Gerstenhaber sign:
// iota_B A(x_0,...,x_{a+b}) =
//   sum_{k=0}^{a} (-1)^{b k} A(x_0,...,x_{k-1}, B(x_k,...,x_{k+b}), ...).
MultilinearOp g_insertion(const MultilinearOp& A, const MultilinearOp& B);

// [A,B]^G = -iota_A B + (-1)^{ab} iota_B A.
MultilinearOp gerstenhaber_bracket(const MultilinearOp& A, const MultilinearOp& B);

// Antisymmetrization projector (idempotent).
MultilinearOp skew_projector(const MultilinearOp& A);

// Unshuffle insertion i_B A with sigma(0)<...<sigma(b), sigma(b+1)<...<sigma(a+b).
MultilinearOp unshuffle_insertion(const MultilinearOp& A, const MultilinearOp& B);

// [A,B]^NR = -i_A B + (-1)^{ab} i_B A on skew operators (primary route).
MultilinearOp nr_bracket(const MultilinearOp& A, const MultilinearOp& B);

// [A,B]^NR = (a+b+1)!/((a+1)!(b+1)!) skew([A,B]^G) (cross-check route).
MultilinearOp nr_bracket_via_skew(const MultilinearOp& A, const MultilinearOp& B);

// A.B(x_0,...,x_{a+b+1}) = A(x_0..x_a) B(x_{a+1}..x_{a+b+1}) in the algebra.
MultilinearOp op_product(const MultilinearOp& A, const MultilinearOp& B, const Algebra& alg);

// A^B = (a+b+2)!/((a+1)!(b+1)!) skew(A.B).
MultilinearOp wedge_multilinear(const MultilinearOp& A, const MultilinearOp& B,
                                const Algebra& alg);

} // namespace schouten
