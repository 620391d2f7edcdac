#pragma once

#include "mmwb/scheme.hpp"

#include <string>
#include <utility>
#include <vector>

namespace mmwb::sym {

/// Univariate integer polynomial as (exponent, coefficient) pairs with
/// distinct exponents, sorted by descending exponent, no zero coefficients.
using UPoly = std::vector<std::pair<int, long>>;

struct InvariantKey {
  UPoly poly1;  // Σ_ι (x^rk A + x^rk B + x^rk C)
  UPoly poly2;  // Σ_ι x^(rk A + rk B + rk C)
  UPoly poly3;  // x^Σ rk A + x^Σ rk B + x^Σ rk C

  friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
};

InvariantKey invariant_key(const Scheme& s);
InvariantKey invariant_key(const std::vector<RankTriple>& profile);

/// "14*x^2 + 55*x^1"; the zero polynomial prints as "0".
std::string to_string(const UPoly& p);
/// The three polynomials joined by " | ".
std::string to_string(const InvariantKey& k);

}  // namespace mmwb::sym
