#pragma once

#include "schouten/grassmann.hpp"

#include <functional>

namespace schouten {

// Tangent frame of a chart: one generator "d_<coord>" per base and fiber
// coordinate, acting as the partial derivative in that coordinate.
GenList tangent_section_gens(const Chart& chart);
std::vector<std::string> tangent_coord_names(const Chart& chart);

// A (p+1)-linear operator on the function algebra of a chart, represented by
// its evaluator. Degree -1 elements are functions themselves (0-ary). Used
// as the pointwise oracle for first-order multidifferential operators.
class FnOp {
  public:
    using Eval = std::function<Scalar(std::span<const Scalar>)>;

    FnOp() = default;
    FnOp(Chart chart, int degree, Eval eval);

    static FnOp value(const Chart& chart, Scalar v); // degree -1
    static FnOp unit(const Chart& chart);            // the constant function 1
    static FnOp identity(const Chart& chart);        // I(f) = f, degree 0
    static FnOp zero(const Chart& chart, int degree);

    // Operator of a multivector field X = sum c_I d_{i_0}^...^d_{i_q}:
    // (f_0,...,f_q) -> sum_I c_I det[ d_{i_b} f_a ]. X must live over
    // tangent_section_gens(chart); tensor degree q+1 gives op degree q.
    static FnOp from_multivector(const GrassmannElement& X);

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    int arity() const { return degree_ + 1; }

    Scalar apply(std::span<const Scalar> args) const;
    Scalar apply(std::initializer_list<Scalar> args) const;

    FnOp operator-() const;
    FnOp operator+(const FnOp& o) const;
    FnOp operator-(const FnOp& o) const;
    FnOp scaled(const Rational& c) const;

  private:
    Chart chart_;
    int degree_ = -1;
    Eval eval_;
};

// Unshuffle insertion i_B A and the Nijenhuis-Richardson bracket, evaluated
// pointwise. Inputs are assumed skew.
FnOp fn_unshuffle_insertion(const FnOp& A, const FnOp& B);
FnOp fn_nr_bracket(const FnOp& A, const FnOp& B);

// A^B with the factorial normalization (a+b+2)!/((a+1)!(b+1)!) skew(A.B).
FnOp fn_wedge(const FnOp& A, const FnOp& B);

// First-order test in every slot: D(fg) = f D(g) + g D(f) - fg D(1) against
// probe monomials of degree <= 2 (detects second-derivative dependence).
bool fn_is_first_order(const FnOp& A);

// Theorem-2 splitting A = A_1 + I^A_2 with A_2 = A(1,.,...,.): extracts both
// parts as multivector fields over tangent_section_gens(chart) and verifies
// the reconstruction on a probe set. Throws InputError when A is not first
// order or the extracted parts fail to reproduce A.
struct FirstOrderSplit {
    GrassmannElement derivation_part; // A_1, tensor degree a+1
    GrassmannElement zero_order_part; // A_2, tensor degree a
};
FirstOrderSplit split_first_order(const FnOp& A);

// Probe argument tuples (coordinates and quadratic monomials) used by the
// oracles; deterministic for a given chart and arity.
std::vector<std::vector<Scalar>> probe_tuples(const Chart& chart, int arity, int max_tuples);

// Pointwise equality of two operators on the probe set.
bool fn_equal_on_probes(const FnOp& A, const FnOp& B, int max_tuples = 24);

} // namespace schouten
