#pragma once

#include "mmwb/gf2.hpp"
#include "mmwb/rng.hpp"
#include "mmwb/scheme.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

namespace mmwb::sym {

/// Element of S3 acting on the three tensor factors.
enum class Perm : std::uint8_t { Id, P12, P13, P23, P123, P132 };

inline constexpr std::array<Perm, 6> kAllPerms{Perm::Id,  Perm::P12,  Perm::P13,
                                               Perm::P23, Perm::P123, Perm::P132};

/// Factor i of π·(F0⊗F1⊗F2) is F[images(π)[i]], transposed when π is odd;
/// e.g. (1 2 3)·(A⊗B⊗C) = B⊗C⊗A and (1 2)·(A⊗B⊗C) = B⊤⊗A⊤⊗C⊤.
std::array<int, 3> images(Perm p);
bool is_odd(Perm p);
Perm perm_from_images(const std::array<int, 3>& img);
std::string_view perm_name(Perm p);
Perm parse_perm(std::string_view name);

/// |GL(3,Z2)|^3 · |S3|.
inline constexpr long kGroupOrderZ2n3 = 168L * 168L * 168L * 6L;

/// (U, V, W, π): first π permutes the factors, then
/// A⊗B⊗C ↦ UAV⁻¹ ⊗ VBW⁻¹ ⊗ WCU⁻¹.
struct GroupElement {
  Mat u, v, w;
  Perm perm = Perm::Id;

  const Mat& operator[](int i) const { return i == 0 ? u : (i == 1 ? v : w); }
  Mat& operator[](int i) { return i == 0 ? u : (i == 1 ? v : w); }
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement identity_element(int n);

/// Throws FormatError when a matrix is not invertible in the ring.
void check_invertible(const GroupElement& g, Ring ring);

Summand apply_group(const GroupElement& g, const Summand& t, Ring ring);
Scheme apply_group(const GroupElement& g, const Scheme& s);

/// g·h with apply_group(g·h, s) = apply_group(g, apply_group(h, s)).
GroupElement compose(const GroupElement& g, const GroupElement& h, Ring ring);

/// Uniform over GL(n,Z2)^3 × S3 when ring is Z2; otherwise matrices with
/// entries in {-1,0,1} that are invertible (unimodular for Int).
GroupElement random_element(int n, Ring ring, Rng& rng);

nlohmann::json element_to_json(const GroupElement& g);
GroupElement element_from_json(const nlohmann::json& j, int n);

/// True iff the summand multisets agree.
bool same_up_to_order(const Scheme& x, const Scheme& y);

// Packed GF(2) forms used by the fast Z2 paths.
using PackedSummand = std::array<gf2::BitMat, 3>;
using PackedScheme = std::vector<PackedSummand>;
struct PackedElement {
  std::array<gf2::BitMat, 3> x;
  Perm perm = Perm::Id;
};

PackedScheme pack(const Scheme& s);
Scheme unpack(const PackedScheme& p, int n);
PackedElement pack(const GroupElement& g);
GroupElement unpack(const PackedElement& g, int n);
PackedSummand permute(const PackedSummand& t, Perm p, int n);
PackedScheme apply_packed(const PackedElement& g, const PackedScheme& s, int n);
PackedElement random_packed(int n, Rng& rng);
long packed_weight(const PackedScheme& s);

}  // namespace mmwb::sym
