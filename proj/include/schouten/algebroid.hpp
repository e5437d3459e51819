#pragma once

#include "schouten/grassmann.hpp"

#include <optional>

namespace schouten {

// Trivialized Lie algebroid over a chart: rank r frame e_1..e_r, anchor
// matrix a^mu_i of scalars over the listed anchor coordinates, and skew
// structure functions c^k_{ij} with [e_i,e_j] = c^k_{ij} e_k. The stored
// data is skew by construction; the Jacobi identity and the anchor
// morphism property are checked by validate().
class AlgebroidSpec {
  public:
    AlgebroidSpec() = default;
    // structure_functions: entries ((i,j,k), c) for i<j; skew-completed.
    AlgebroidSpec(Chart chart, std::vector<std::string> frames,
                  std::vector<std::string> anchor_coords,
                  std::vector<std::vector<Scalar>> anchor,
                  const std::map<std::tuple<int, int, int>, Scalar>& structure_functions);

    // Tangent algebroid of the chart: frames d_<coord> over base and fiber
    // coordinates, identity anchor, vanishing structure functions.
    static AlgebroidSpec tangent(const Chart& chart);

    const Chart& chart() const { return chart_; }
    int rank() const { return int(frames_.size()); }
    const std::vector<std::string>& frames() const { return frames_; }
    const std::vector<std::string>& anchor_coords() const { return anchor_coords_; }
    const Scalar& anchor_entry(int frame, int coord) const; // a^{coord}_{frame}
    const Scalar& structure_fn(int k, int i, int j) const;  // c^k_{ij}

    GenList section_gens() const { return sections_; }
    GenList form_gens() const { return forms_; }
    GrassmannElement zero_section() const;
    GrassmannElement section(int i) const;     // e_i
    GrassmannElement form(int i) const;        // eps^i
    GrassmannElement scalar_element(Scalar s) const; // degree-0 multivector
    GrassmannElement unit_element() const;           // the function 1

    // a(X)(f) for a tensor-degree-1 multivector X.
    Scalar anchor_apply(const GrassmannElement& X, const Scalar& f) const;
    // df as a 1-form: (df)(e_i) = a(e_i)(f).
    GrassmannElement differential_of(const Scalar& f) const;

    bool operator==(const AlgebroidSpec& o) const;

  private:
    Chart chart_;
    std::vector<std::string> frames_;
    std::vector<std::string> anchor_coords_;
    std::vector<int> anchor_coord_idx_;
    std::vector<std::vector<Scalar>> anchor_; // [frame][coord]
    std::vector<Scalar> c_;                   // [k][i][j] flattened
    GenList sections_, forms_;
};

struct AlgebroidDefect {
    std::string kind;        // "jacobi" or "anchor"
    std::vector<int> where;  // frame triple or (pair, coordinate)
    std::string detail;      // printed defect
};

struct ValidationReport {
    bool ok = true;
    std::vector<AlgebroidDefect> defects;
    std::string text() const;
};

// Checks the Jacobi identity of the section bracket on all frame triples and
// the anchor morphism a([X,Y]) = [a(X),a(Y)] on all frame pairs.
ValidationReport algebroid_validate(const AlgebroidSpec& A);

// Schouten-Nijenhuis bracket extending the section bracket: graded with
// lie degree = tensor degree - 1, [X,f] = a(X)(f), and ad_X a degree-x
// derivation of the wedge product. Accepts mixed-degree elements.
GrassmannElement sn_bracket(const GrassmannElement& X, const GrassmannElement& Y,
                            const AlgebroidSpec& A);

// Exterior derivative of a form by the Chevalley-Eilenberg formula.
GrassmannElement exterior_d(const GrassmannElement& mu, const AlgebroidSpec& A);

// Lie derivative along a tensor-degree-1 multivector: i_X d + d i_X.
GrassmannElement lie_derivative(const GrassmannElement& X, const GrassmannElement& mu,
                                const AlgebroidSpec& A);

} // namespace schouten
