#pragma once

#include "mmwb/family/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace mmwb::fam {

/// Sparse row: column → nonzero coefficient.
using SparseRow = std::map<int, Poly>;

struct EliminationLimits {
  std::size_t max_terms = 400000;  // total monomials across all rows
};

struct NullspaceResult {
  bool ok = false;
  std::string diagnostic;
  std::vector<int> pivot_columns;
  /// Dense integer-polynomial vectors spanning the nullspace over the
  /// fraction field of Z[x]; one per free column.
  std::vector<std::vector<Poly>> basis;
};

/// Fraction-free Gauss–Jordan elimination. Pivots prefer constant entries
/// (smallest magnitude), then the fewest terms. Rows are combined by
/// cross-multiplication, so no division happens during elimination; each
/// basis vector is scaled by the product of the pivots it involves and the
/// back-substitution quotients must be exact, otherwise ok = false.
NullspaceResult nullspace(std::vector<SparseRow> rows, int cols, const EliminationLimits& limits = {});

}  // namespace mmwb::fam
