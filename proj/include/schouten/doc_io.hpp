#pragma once

#include "schouten/jacobi.hpp"
#include "schouten/multilinear.hpp"

#include <optional>

namespace schouten {

// Structure-definition document: a line-oriented UTF-8 text format with
// explicit blocks. parse_doc(print_doc(d)) == d; the printer defines the
// canonical (golden-file) form. See README for the grammar.
struct StructureDoc {
    enum class Kind { Algebroid, JacobiAlgebroid, Tensor, FirstOrderOp, DualPair, Multilinear };

    Kind kind = Kind::Algebroid;
    Chart chart;

    std::optional<JacobiAlgebroid> primal; // Algebroid/JacobiAlgebroid/DualPair
    std::optional<JacobiAlgebroid> dual;   // DualPair only

    GenList op_gens;                          // Tensor / FirstOrderOp
    std::optional<GrassmannElement> tensor;   // Tensor
    std::optional<FirstOrderOp> first_order;  // FirstOrderOp

    std::optional<MultilinearOp> multilinear; // Multilinear (chart unused)

    bool operator==(const StructureDoc& o) const;
};

StructureDoc parse_doc(const std::string& text);
std::string print_doc(const StructureDoc& doc);

StructureDoc load_doc_file(const std::string& path);
void save_doc_file(const std::string& path, const StructureDoc& doc);

// Convenience wrappers used by the CLI and the suites.
StructureDoc doc_from_algebroid(const AlgebroidSpec& A);
StructureDoc doc_from_jacobi(const JacobiAlgebroid& J);
StructureDoc doc_from_tensor(const GrassmannElement& e);
StructureDoc doc_from_first_order(const FirstOrderOp& op, const Chart& chart,
                                  const GenList& gens);
StructureDoc doc_from_dual_pair(const JacobiAlgebroid& primal, const JacobiAlgebroid& dual);
StructureDoc doc_from_multilinear(const MultilinearOp& op);

} // namespace schouten
