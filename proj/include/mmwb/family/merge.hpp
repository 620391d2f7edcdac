#pragma once

#include "mmwb/scheme.hpp"

#include <optional>

namespace mmwb::fam {

struct MergeResult {
  Scheme scheme;    // m − 1 summands
  int removed;      // index of the eliminated summand in the input
  int shared;       // position whose matrices agree up to scalars
  int dependent;    // position where the removed matrix is a combination
  int folded;       // position receiving the fold-back
};

/// Looks for summands sharing a matrix (up to a scalar) in one position
/// whose matrices in another position are linearly dependent, and folds one
/// summand into the rest through the third position. Over Int the fold-back
/// coefficients must be integers.
std::optional<MergeResult> merge_reduction(const Scheme& s);

}  // namespace mmwb::fam
