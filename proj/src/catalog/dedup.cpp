#include "mmwb/catalog/dedup.hpp"

#include "mmwb/symmetry/equivalence.hpp"
#include "mmwb/symmetry/invariants.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace mmwb::cat {

DedupResult dedup_catalog(const std::vector<Scheme>& schemes, unsigned threads) {
  if (!schemes.empty()) {
    for (const auto& s : schemes)
      if (s.n() != schemes[0].n() || s.m() != schemes[0].m()) {
        throw FormatError("dedup requires schemes of uniform (n, m)");
      }
  }
  std::vector<Scheme> z2;
  z2.reserve(schemes.size());
  for (const auto& s : schemes) z2.push_back(s.ring() == Ring::Z2 ? s : reduce_mod2(s));

  std::map<std::string, std::vector<int>> buckets;
  for (std::size_t i = 0; i < z2.size(); ++i)
    buckets[sym::to_string(sym::invariant_key(z2[i]))].push_back(static_cast<int>(i));
  std::vector<std::pair<std::string, std::vector<int>>> work(buckets.begin(), buckets.end());

  std::vector<std::vector<DedupClass>> per_bucket(work.size());
  std::atomic<long> calls{0};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t b = next++; b < work.size(); b = next++) {
      auto& classes = per_bucket[b];
      for (int i : work[b].second) {
        bool placed = false;
        for (auto& c : classes) {
          ++calls;
          if (sym::equivalent(z2[c.representative], z2[i])) {
            c.members.push_back(i);
            placed = true;
            break;
          }
        }
        if (!placed) classes.push_back({i, {i}, work[b].first});
      }
    }
  };
  unsigned nthreads = threads ? threads : std::max(1U, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, static_cast<unsigned>(std::max<std::size_t>(work.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  DedupResult res;
  for (auto& cs : per_bucket)
    for (auto& c : cs) res.classes.push_back(std::move(c));
  std::sort(res.classes.begin(), res.classes.end(),
            [](const DedupClass& x, const DedupClass& y) { return x.representative < y.representative; });
  res.equivalence_calls = calls;
  return res;
}

std::array<InvariantTable, 3> invariant_tables(const std::vector<Scheme>& representatives) {
  std::array<std::map<std::string, long>, 3> counts;
  for (const auto& s : representatives) {
    const auto k = sym::invariant_key(s);
    ++counts[0][sym::to_string(k.poly1)];
    ++counts[1][sym::to_string(k.poly2)];
    ++counts[2][sym::to_string(k.poly3)];
  }
  std::array<InvariantTable, 3> out;
  for (int i = 0; i < 3; ++i) {
    out[i].assign(counts[i].begin(), counts[i].end());
    std::stable_sort(out[i].begin(), out[i].end(),
                     [](const auto& x, const auto& y) { return x.second < y.second; });
  }
  return out;
}

std::string table_csv(const InvariantTable& t) {
  std::string out = "polynomial,count\n";
  for (const auto& [p, c] : t) out += "\"" + p + "\"," + std::to_string(c) + "\n";
  return out;
}

}  // namespace mmwb::cat
