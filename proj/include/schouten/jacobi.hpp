#pragma once

#include "schouten/algebroid.hpp"

namespace schouten {

// Lie algebroid together with a 1-cocycle Phi (a closed 1-form). The pair
// determines the Schouten-Jacobi bracket on the Grassmann algebra.
struct JacobiAlgebroid {
    AlgebroidSpec algebroid;
    GrassmannElement cocycle; // form, tensor degree 1

    // Throws unless the cocycle is a 1-form over the algebroid with dPhi = 0.
    static JacobiAlgebroid make(AlgebroidSpec A, GrassmannElement cocycle);
    // No closedness check; used for deliberately perturbed structures.
    static JacobiAlgebroid make_unchecked(AlgebroidSpec A, GrassmannElement cocycle);

    bool cocycle_closed() const;
};

// i_Phi X, the dual contraction by the cocycle.
GrassmannElement cocycle_contract(const GrassmannElement& X, const JacobiAlgebroid& J);

// [X,Y]^Phi = [X,Y]^SN + x X ^ i_Phi Y - (-1)^x y i_Phi X ^ Y,
// applied per homogeneous component.
GrassmannElement sj_bracket(const GrassmannElement& X, const GrassmannElement& Y,
                            const JacobiAlgebroid& J);

// Deformation part [X,Y]^Phi_0 = x X ^ i_Phi Y - (-1)^x y i_Phi X ^ Y and the
// interpolated bracket [X,Y]^SN + h [X,Y]^Phi_0.
GrassmannElement sj_deformation(const GrassmannElement& X, const GrassmannElement& Y,
                                const JacobiAlgebroid& J);
GrassmannElement sj_bracket_h(const GrassmannElement& X, const GrassmannElement& Y,
                              const JacobiAlgebroid& J, const Rational& h);

// d^Phi mu = d mu + Phi ^ mu.
GrassmannElement d_phi(const GrassmannElement& mu, const JacobiAlgebroid& J);

// Lie differential of the Jacobi calculus: i_X d^Phi + d^Phi i_X.
GrassmannElement lie_phi(const GrassmannElement& X, const GrassmannElement& mu,
                         const JacobiAlgebroid& J);

// The extension L+R of an algebroid: one extra frame I with zero anchor,
// bracket [(X,f),(Y,g)] = ([X,Y], a(X)(g)-a(Y)(f)), cocycle Phi((X,f)) = f.
struct ExtensionAlgebroid {
    JacobiAlgebroid ext;
    AlgebroidSpec base;
    int unit_frame = 0; // index of the added frame I

    static ExtensionAlgebroid make(const AlgebroidSpec& A, const std::string& unit_name = "I");

    // A_1 + I ^ A_2 for parts living over the base algebroid.
    GrassmannElement embed_pair(const GrassmannElement& a1, const GrassmannElement& a2) const;
    // Inverse of embed_pair: splits off the terms containing I.
    std::pair<GrassmannElement, GrassmannElement> split_element(const GrassmannElement& X) const;
    // Sections/forms of the base algebroid transported to the extension.
    GrassmannElement lift_section_element(const GrassmannElement& X) const;
    GrassmannElement lift_form_element(const GrassmannElement& mu) const;
};

// Pair (A_1, A_2) realizing the first-order operator A = A_1 + I ^ A_2 of
// lie degree `degree` over a common algebroid; A_1 has tensor degree
// degree+1 and A_2 tensor degree degree.
struct FirstOrderOp {
    int degree = 0;
    GrassmannElement part1;
    GrassmannElement part2;

    static FirstOrderOp make(int degree, GrassmannElement a1, GrassmannElement a2);
    bool is_zero() const { return part1.is_zero() && part2.is_zero(); }
    FirstOrderOp operator+(const FirstOrderOp& o) const;
    FirstOrderOp operator-(const FirstOrderOp& o) const;
    FirstOrderOp scaled(const Rational& c) const;
    FirstOrderOp scaled_by(const Scalar& s) const;
    bool operator==(const FirstOrderOp& o) const;
};

// Schouten-Jacobi bracket in the splitting representation:
// [A_1+I^A_2, B_1+I^B_2] = [A_1,B_1] + a A_1^B_2 - (-1)^a b A_2^B_1
//   + I^( (-1)^a [A_1,B_2] + [A_2,B_1] + (a-b) A_2^B_2 ).
FirstOrderOp nr_structural_bracket(const FirstOrderOp& A, const FirstOrderOp& B,
                                   const AlgebroidSpec& alg);

// Wedge in the splitting representation:
// (A_1+I^A_2)^(B_1+I^B_2) = A_1^B_1 + I^(A_2^B_1 + (-1)^{a+1} A_1^B_2).
FirstOrderOp first_order_wedge(const FirstOrderOp& A, const FirstOrderOp& B);

struct JacobiStructureReport {
    bool pass = false;
    GrassmannElement defect_gamma_lambda; // [Gamma,Lambda]^SN
    GrassmannElement defect_lambda;       // [Lambda,Lambda]^SN + 2 Lambda^Gamma
    bool function_jacobi_ok = true;       // Jacobi identity of {f,g} on probes
    std::string text() const;
};

// Checks [Gamma,Lambda]^SN = 0 and [Lambda,Lambda]^SN = -2 Lambda^Gamma; on
// success also verifies the Jacobi identity of the induced bracket
// {f,g} = <Lambda, df^dg> + f Gamma(g) - g Gamma(f) on probe monomials.
JacobiStructureReport jacobi_structure_check(const GrassmannElement& lambda,
                                             const GrassmannElement& gamma,
                                             const AlgebroidSpec& A);

// The bracket {f,g} above.
Scalar jacobi_fn_bracket(const Scalar& f, const Scalar& g, const GrassmannElement& lambda,
                         const GrassmannElement& gamma, const AlgebroidSpec& A);

// H_Z(A_1 + I^A_2) = A_1 + Z ^ A_2.
GrassmannElement h_z_map(const FirstOrderOp& A, const GrassmannElement& Z);

// Z-homogeneity: [Z, A]^Phi = -a A with Z a section of the base algebroid.
bool z_homogeneous_check(const FirstOrderOp& A, const GrassmannElement& Z,
                         const AlgebroidSpec& alg);

} // namespace schouten
