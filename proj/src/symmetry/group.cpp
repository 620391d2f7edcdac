#include "mmwb/symmetry/group.hpp"

#include "mmwb/scheme_io.hpp"

#include <algorithm>

namespace mmwb::sym {

namespace {

constexpr std::array<std::array<int, 3>, 6> kImages{{
    {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
constexpr std::array<std::string_view, 6> kNames{"id", "(12)", "(13)", "(23)", "(123)", "(132)"};

int slot(Perm p) { return static_cast<int>(p); }

Mat neg_transpose_inverse(const Mat& x, Ring ring) {
  auto inv = inverse(x, ring);
  if (!inv) throw FormatError("group element matrix is not invertible in the ring");
  return inv->transposed();
}

}  // namespace

std::array<int, 3> images(Perm p) { return kImages[slot(p)]; }

bool is_odd(Perm p) { return p == Perm::P12 || p == Perm::P13 || p == Perm::P23; }

Perm perm_from_images(const std::array<int, 3>& img) {
  for (Perm p : kAllPerms)
    if (kImages[slot(p)] == img) return p;
  throw FormatError("not a permutation of three factors");
}

std::string_view perm_name(Perm p) { return kNames[slot(p)]; }

Perm parse_perm(std::string_view name) {
  for (Perm p : kAllPerms)
    if (kNames[slot(p)] == name) return p;
  throw FormatError("unknown permutation '" + std::string(name) + "'");
}

GroupElement identity_element(int n) {
  check_dimension(n);
  return {Mat::identity(n), Mat::identity(n), Mat::identity(n), Perm::Id};
}

void check_invertible(const GroupElement& g, Ring ring) {
  for (int i = 0; i < 3; ++i) {
    if (!inverse(g[i], ring)) {
      throw FormatError("group element matrix " + std::to_string(i) +
                        " is not invertible over " + std::string(ring_name(ring)));
    }
  }
}

Summand apply_group(const GroupElement& g, const Summand& t, Ring ring) {
  const auto img = images(g.perm);
  const bool odd = is_odd(g.perm);
  Summand p;
  for (int i = 0; i < 3; ++i) p[i] = odd ? t[img[i]].transposed() : t[img[i]];
  Summand out;
  for (int i = 0; i < 3; ++i) {
    auto inv = inverse(g[(i + 1) % 3], ring);
    if (!inv) throw FormatError("group element matrix is not invertible in the ring");
    out[i] = (g[i] * p[i] * *inv).normalized(ring);
  }
  return out;
}

Scheme apply_group(const GroupElement& g, const Scheme& s) {
  check_invertible(g, s.ring());
  if (s.ring() == Ring::Z2) return unpack(apply_packed(pack(g), pack(s), s.n()), s.n());
  std::vector<Summand> out;
  out.reserve(s.summands().size());
  for (const auto& t : s.summands()) out.push_back(apply_group(g, t, s.ring()));
  return Scheme(s.ring(), s.n(), std::move(out));
}

GroupElement compose(const GroupElement& g, const GroupElement& h, Ring ring) {
  // Moving π_g past S_Xh: P S_X = S_Y P with Y_i = X_{p(i)} for even π and
  // Y_i = X_{p(i)+1}^{-⊤} for odd π (all reflections satisfy p(i) = k - i).
  const auto pg = images(g.perm);
  const auto ph = images(h.perm);
  GroupElement out;
  for (int i = 0; i < 3; ++i) {
    const Mat y = is_odd(g.perm) ? neg_transpose_inverse(h[(pg[i] + 1) % 3], ring) : h[pg[i]];
    out[i] = (g[i] * y).normalized(ring);
  }
  out.perm = perm_from_images({ph[pg[0]], ph[pg[1]], ph[pg[2]]});
  return out;
}

namespace {

Mat random_small_matrix(int n, Ring ring, Rng& rng) {
  while (true) {
    Mat x(n);
    for (auto& e : x.entries()) e = static_cast<long>(rng.below(3)) - 1;
    if (inverse(x, ring)) return x;
  }
}

}  // namespace

GroupElement random_element(int n, Ring ring, Rng& rng) {
  check_dimension(n);
  if (ring == Ring::Z2) return unpack(random_packed(n, rng), n);
  GroupElement g;
  for (int i = 0; i < 3; ++i) g[i] = random_small_matrix(n, ring, rng);
  g.perm = kAllPerms[rng.below(6)];
  return g;
}

nlohmann::json element_to_json(const GroupElement& g) {
  return {{"u", mat_to_json(g.u, Ring::Rat)},
          {"v", mat_to_json(g.v, Ring::Rat)},
          {"w", mat_to_json(g.w, Ring::Rat)},
          {"perm", std::string(perm_name(g.perm))}};
}

GroupElement element_from_json(const nlohmann::json& j, int n) {
  if (!j.is_object()) throw FormatError("group element must be an object");
  for (const char* key : {"u", "v", "w", "perm"})
    if (!j.contains(key)) throw FormatError(std::string("group element lacks '") + key + "'");
  if (!j["perm"].is_string()) throw FormatError("group element 'perm' must be a string");
  return {mat_from_json(j["u"], n), mat_from_json(j["v"], n), mat_from_json(j["w"], n),
          parse_perm(j["perm"].get<std::string>())};
}

bool same_up_to_order(const Scheme& x, const Scheme& y) {
  if (x.ring() != y.ring() || x.n() != y.n() || x.m() != y.m()) return false;
  auto keys = [](const Scheme& s) {
    std::vector<std::string> k;
    for (const auto& t : s.summands()) {
      std::string e;
      for (int f = 0; f < 3; ++f)
        for (const auto& v : t[f].entries()) e += v.get_str() + ",";
      k.push_back(std::move(e));
    }
    std::sort(k.begin(), k.end());
    return k;
  };
  return keys(x) == keys(y);
}

PackedScheme pack(const Scheme& s) {
  if (s.ring() != Ring::Z2) throw FormatError("packed form requires a Z2 scheme");
  const int n = s.n();
  PackedScheme out;
  out.reserve(s.summands().size());
  for (const auto& t : s.summands()) {
    PackedSummand p{};
    for (int f = 0; f < 3; ++f)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (t[f](r, c) != 0) p[f].set(n, r, c);
    out.push_back(p);
  }
  return out;
}

namespace {

Mat unpack_mat(gf2::BitMat b, int n) {
  Mat x(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) x(r, c) = b.get(n, r, c) ? 1 : 0;
  return x;
}

gf2::BitMat pack_mat(const Mat& x) {
  const int n = x.dim();
  gf2::BitMat b;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const mpq_class v = normalize(Ring::Z2, x(r, c));
      if (v != 0) b.set(n, r, c);
    }
  return b;
}

}  // namespace

Scheme unpack(const PackedScheme& p, int n) {
  std::vector<Summand> out;
  out.reserve(p.size());
  for (const auto& t : p) out.push_back({unpack_mat(t[0], n), unpack_mat(t[1], n), unpack_mat(t[2], n)});
  return Scheme(Ring::Z2, n, std::move(out));
}

PackedElement pack(const GroupElement& g) {
  return {{pack_mat(g.u), pack_mat(g.v), pack_mat(g.w)}, g.perm};
}

GroupElement unpack(const PackedElement& g, int n) {
  return {unpack_mat(g.x[0], n), unpack_mat(g.x[1], n), unpack_mat(g.x[2], n), g.perm};
}

PackedSummand permute(const PackedSummand& t, Perm p, int n) {
  const auto img = images(p);
  PackedSummand out;
  for (int i = 0; i < 3; ++i) out[i] = is_odd(p) ? gf2::transpose(n, t[img[i]]) : t[img[i]];
  return out;
}

PackedScheme apply_packed(const PackedElement& g, const PackedScheme& s, int n) {
  std::array<gf2::BitMat, 3> inv;
  for (int i = 0; i < 3; ++i) {
    auto x = gf2::inverse(n, g.x[i]);
    if (!x) throw FormatError("group element matrix is not invertible over Z2");
    inv[i] = *x;
  }
  PackedScheme out;
  out.reserve(s.size());
  for (const auto& t : s) {
    const PackedSummand p = permute(t, g.perm, n);
    PackedSummand r;
    for (int i = 0; i < 3; ++i) r[i] = gf2::mul(n, gf2::mul(n, g.x[i], p[i]), inv[(i + 1) % 3]);
    out.push_back(r);
  }
  return out;
}

PackedElement random_packed(int n, Rng& rng) {
  PackedElement g;
  for (auto& x : g.x) {
    do {
      x.bits = static_cast<std::uint16_t>(rng.below(1U << (n * n)));
    } while (!gf2::invertible(n, x));
  }
  g.perm = kAllPerms[rng.below(6)];
  return g;
}

long packed_weight(const PackedScheme& s) {
  long w = 0;
  for (const auto& t : s) w += static_cast<long>(t[0].nnz()) * t[1].nnz() * t[2].nnz();
  return w;
}

}  // namespace mmwb::sym
