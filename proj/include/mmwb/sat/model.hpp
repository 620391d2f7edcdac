#pragma once

#include "mmwb/sat/cnf.hpp"
#include "mmwb/sat/encoder.hpp"
#include "mmwb/scheme.hpp"

#include <string_view>
#include <vector>

namespace mmwb::sat {

/// Accepts solver output with "v" lines (plus "s"/"c" lines) or a bare
/// whitespace-separated literal list; reading stops at the first 0.
std::vector<int> parse_model(std::string_view text);

/// Truth values indexed by variable - 1.
using Assignment = std::vector<bool>;

/// Builds the Z2 scheme from the α/β/γ literals of a model.
Scheme decode_model(const std::vector<int>& model, const VarMap& varmap);

bool check_assignment(const CnfFormula& f, const Assignment& assignment);

/// Extends a Z2 scheme's coefficients to every s, t and auxiliary variable of
/// an encoding (bottom-up, following the auxiliary definitions).
Assignment extend_assignment(const Scheme& s, const Encoding& enc);

/// Signed-literal form of an assignment.
std::vector<int> to_model(const Assignment& a);

}  // namespace mmwb::sat
