#pragma once

#include "schouten/jacobi.hpp"

namespace schouten {

// Total space of the bundle underlying an algebroid: the base chart gains
// one fiber coordinate per frame, and multivector fields on the total space
// live over the tangent algebroid of the enlarged chart.
class TotalSpace {
  public:
    // fiber_names: one name per frame; defaults to y1..yr.
    static TotalSpace make(const AlgebroidSpec& A, std::vector<std::string> fiber_names = {});

    const AlgebroidSpec& base() const { return base_; }
    const Chart& chart() const { return chart_; }
    const AlgebroidSpec& tangent() const { return tangent_; }

    int base_dir(int mu) const;  // tangent generator of d/dx^mu
    int fiber_dir(int i) const;  // tangent generator of d/dy^i

    Scalar pull_back(const Scalar& f) const;
    // Fiberwise-linear function iota_mu = mu_i(x) y^i of a dual section.
    Scalar iota(const GrassmannElement& mu) const;
    // Liouville vector field y^i d/dy^i.
    GrassmannElement liouville() const;
    // Multivectors over the base algebroid's sections -> vertical lift.
    GrassmannElement vertical_lift(const GrassmannElement& X) const;
    // Unique lift with f^c = iota_{df}, X^c(iota_mu) = iota_{L_X mu} and
    // (X^Y)^c = X^c^Y^v + X^v^Y^c.
    GrassmannElement complete_lift(const GrassmannElement& X) const;

    GrassmannElement zero_field() const;

  private:
    AlgebroidSpec base_;
    Chart chart_;
    AlgebroidSpec tangent_;
    int n_base_ = 0;
};

// Liouville-weight homogeneity: every contraction with differentials of
// fiberwise-linear functions is again fiberwise linear. Decided exactly on
// polynomial coefficients via the weight of each term.
bool is_homogeneous_multivector(const GrassmannElement& X, const TotalSpace& ts);

// Jacobi lift X^ = X^c - x iota_Phi X^v + I^(i_Phi X)^v as a first-order
// pair over the tangent algebroid of the total space.
FirstOrderOp jacobi_lift(const GrassmannElement& X, const JacobiAlgebroid& J,
                         const TotalSpace& ts);

// Poisson lift X^c_Phi = X^c - x iota_Phi X^v + Liouville^(i_Phi X)^v.
GrassmannElement poisson_lift(const GrassmannElement& X, const JacobiAlgebroid& J,
                              const TotalSpace& ts);

// Product algebroid L x TR over M x R with the added exponential coordinate,
// hosting the Poissonization embeddings U and U-tilde.
class Poissonization {
  public:
    static Poissonization make(const JacobiAlgebroid& J, const std::string& time_name = "t");

    const JacobiAlgebroid& source() const { return source_; }
    const AlgebroidSpec& extended() const { return ext_; }
    int time_frame() const { return dt_; }

    GrassmannElement lift_element(const GrassmannElement& X) const;
    // U_Phi(X) = X + d_t ^ i_Phi X.
    GrassmannElement embed(const GrassmannElement& X) const;
    // U~_Phi(X) = e^{-x t} U_Phi(X), per homogeneous component.
    GrassmannElement tilde_embed(const GrassmannElement& X) const;

  private:
    JacobiAlgebroid source_;
    AlgebroidSpec ext_;
    int dt_ = 0;
};

// Bracket induced by a homogeneous multivector on the total space:
// iota_{[mu_0..mu_p]} = <X, d iota_{mu_0} ^ ... ^ d iota_{mu_p}>. Throws when
// a contraction fails to be fiberwise linear.
GrassmannElement induced_bracket(const GrassmannElement& X,
                                 std::span<const GrassmannElement> mus, const TotalSpace& ts);

// Hamiltonian vector field X_{mu_0..mu_{p-1}}(f) = [mu_0,...,mu_{p-1}, df]_X.
Scalar hamiltonian_apply(const GrassmannElement& X, std::span<const GrassmannElement> mus,
                         const Scalar& f, const TotalSpace& ts);

// Koszul bracket of forms of a Poisson bivector, defined for all degrees by
// the generating operator (P10 route); the classical P8 formula for 1-forms
// is kept as an independent cross-check.
GrassmannElement generating_operator(const GrassmannElement& mu, const GrassmannElement& lambda,
                                     const AlgebroidSpec& A);
GrassmannElement koszul_bracket(const GrassmannElement& mu, const GrassmannElement& nu,
                                const GrassmannElement& lambda, const AlgebroidSpec& A);
GrassmannElement koszul_bracket_p8(const GrassmannElement& mu, const GrassmannElement& nu,
                                   const GrassmannElement& lambda, const AlgebroidSpec& A);

// Theorem-13 harness: a Jacobi structure (Lambda, Gamma) over an algebroid,
// its extension with the canonical cocycle, the bisection X = Lambda + I^Gamma
// and its Poisson lift on the total space of the extension.
struct JacobiFormSetup {
    ExtensionAlgebroid E;
    TotalSpace ts;
    GrassmannElement lambda, gamma; // over the base algebroid
    GrassmannElement X;             // over E.ext
    GrassmannElement lift;          // Poisson lift of X

    static JacobiFormSetup make(const GrassmannElement& lambda, const GrassmannElement& gamma,
                                const AlgebroidSpec& A, std::vector<std::string> fiber_names = {});
    // (alpha, f) -> alpha + f eps_I as a 1-form over the extension.
    GrassmannElement dual_section(const GrassmannElement& alpha, const Scalar& f) const;
    std::pair<GrassmannElement, Scalar> split_dual(const GrassmannElement& mu) const;
};

// The three routes of the bracket on sections of T*M + R; all return the
// 1-form over the extension algebroid.
GrassmannElement jacobi_form_bracket_induced(const JacobiFormSetup& s, const GrassmannElement& mu,
                                             const GrassmannElement& nu);
GrassmannElement jacobi_form_bracket_br(const JacobiFormSetup& s, const GrassmannElement& mu,
                                        const GrassmannElement& nu);
GrassmannElement jacobi_form_bracket_jb(const JacobiFormSetup& s, const GrassmannElement& mu,
                                        const GrassmannElement& nu);

// Higher-arity bracket induced by the Poisson lift of a Jacobi element.
GrassmannElement generalized_bracket(const JacobiFormSetup& s,
                                     std::span<const GrassmannElement> mus);

} // namespace schouten
