#include "mmwb/catalog/histogram.hpp"

#include "mmwb/catalog/catalog.hpp"
#include "mmwb/scheme_io.hpp"

#include <algorithm>

namespace mmwb::cat {

namespace fs = std::filesystem;

Histogram weight_histogram(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw FormatError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  if (fs::exists(dir / "index.json")) {
    for (const auto& r : Catalog(dir).records()) files.push_back(dir / r.path);
  } else {
    for (const auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
  }
  Histogram h;
  for (const auto& f : files) {
    try {
      const Scheme s = read_scheme(f);
      if (verify(s).correct) ++h.counts[weight(s)];
      else h.incorrect.push_back(f.string() + ": does not verify");
    } catch (const std::exception& e) {
      h.incorrect.push_back(f.string() + ": " + e.what());
    }
  }
  return h;
}

std::string histogram_csv(const Histogram& h) {
  std::string out = "weight,count\n";
  for (const auto& [w, c] : h.counts) out += std::to_string(w) + "," + std::to_string(c) + "\n";
  return out;
}

}  // namespace mmwb::cat
