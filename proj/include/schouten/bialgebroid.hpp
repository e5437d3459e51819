#pragma once

#include "schouten/jacobi.hpp"

#include <cstdint>

namespace schouten {

// Dual pair of Jacobi algebroids on L and L*, over a common chart with
// frames dual by position. Multivectors over L double as forms over L*.
struct DualPair {
    JacobiAlgebroid primal; // structure on L
    JacobiAlgebroid dual;   // structure on L* (its cocycle is a section of L)

    static DualPair make(JacobiAlgebroid primal, JacobiAlgebroid dual);
};

// A multivector over L reinterpreted as a form over L*, and back.
GrassmannElement as_dual_form(const GrassmannElement& X, const DualPair& P);
GrassmannElement as_primal_multivector(const GrassmannElement& mu, const DualPair& P);

// d_* X: the dual Jacobi differential applied to X viewed as a form over L*.
GrassmannElement d_star(const GrassmannElement& X, const DualPair& P);

// Compatibility defect d_*[X,Y] - [d_*X,Y] - (-1)^x [X,d_*Y] of Eq-style
// derivation property; zero on Jacobi bialgebroids.
GrassmannElement bialgebroid_defect(const GrassmannElement& X, const GrassmannElement& Y,
                                    const DualPair& P);

struct BialgebroidReport {
    bool pass = true;
    int stage = 0;            // 0 = passed both; otherwise failing stage 1 or 2
    std::string defect_where; // description of the first defect
    std::string defect_value; // printed defect element
    int coefficient_degree_bound = 0;
    int depth = 0;
    std::uint64_t seed = 0;
    std::string text() const;
};

// Two-stage compatibility check. Stage 1 follows the degree-0 sufficiency:
// the defect is evaluated for frame pairs with monomial coefficients up to
// the degree bound, and for X a function or section against Y = 1. Stage 2
// runs seeded random spot checks on elements of higher degree (lie degrees
// x+y <= depth) and re-verifies the wedge-reduction identity term by term.
BialgebroidReport bialgebroid_check(const DualPair& P, int depth, std::uint64_t seed,
                                    int coeff_degree_bound = 2, int stage2_cases = 8);

// Both sides of the wedge-reduction identity for d_*[X, Y^Z]; they agree for
// arbitrary pairs. Returned as (lhs, rhs).
std::pair<GrassmannElement, GrassmannElement> wedge_reduction_sides(
    const GrassmannElement& X, const GrassmannElement& Y, const GrassmannElement& Z,
    const DualPair& P);

// Triangular pair of a Jacobi element X (lie degree 1, [X,X]^Phi = 0): dual
// bracket from the form bracket generated by X, dual cocycle -i_Phi X.
DualPair triangular_construct(const GrassmannElement& X, const JacobiAlgebroid& J,
                              std::vector<std::string> dual_frame_names = {});

} // namespace schouten
