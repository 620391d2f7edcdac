#pragma once

#include "mmwb/family/poly.hpp"
#include "mmwb/scheme.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <filesystem>
#include <vector>

namespace mmwb::fam {

inline constexpr const char* kFamilyFormat = "mmfamily-v1";

/// n×n matrix of polynomial entries, row-major.
using PolyMat = std::vector<Poly>;
using PolySummand = std::array<PolyMat, 3>;

/// A scheme whose entries are integer polynomials in x1..x_params.
class ParamScheme {
 public:
  ParamScheme(int n, int params, std::vector<PolySummand> summands);

  int n() const { return n_; }
  int m() const { return static_cast<int>(summands_.size()); }
  int params() const { return params_; }
  const std::vector<PolySummand>& summands() const { return summands_; }
  const Poly& entry(int iota, int f, int r, int c) const { return summands_[iota][f][r * n_ + c]; }
  Poly& entry(int iota, int f, int r, int c) { return summands_[iota][f][r * n_ + c]; }

  friend bool operator==(const ParamScheme&, const ParamScheme&) = default;

 private:
  int n_;
  int params_;
  std::vector<PolySummand> summands_;
};

/// Zero-parameter family of an integral scheme (Rat entries must be integers).
ParamScheme family_from_scheme(const Scheme& s);

Scheme substitute_family(const ParamScheme& f, std::span<const mpz_class> point);

struct FamilyReport {
  bool correct = false;
  std::vector<BrentIndex> violations;
};

/// Expands every Brent residual as a polynomial and checks that it vanishes.
FamilyReport verify_family_exact(const ParamScheme& f);
Poly family_residual(const ParamScheme& f, const BrentIndex& idx);

ParamScheme family_from_json(const nlohmann::json& j);
nlohmann::json family_to_json(const ParamScheme& f);
ParamScheme read_family(const std::filesystem::path& path);
void write_family(const std::filesystem::path& path, const ParamScheme& f);

}  // namespace mmwb::fam
