#include "mmwb/catalog/catalog.hpp"

#include "mmwb/scheme_io.hpp"
#include "mmwb/symmetry/invariants.hpp"

#include <openssl/evp.h>
#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mmwb::cat {

namespace fs = std::filesystem;

namespace {

class FileLock {
 public:
  explicit FileLock(const fs::path& p) : fd_(::open(p.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) throw FormatError("cannot lock " + p.string());
  }
  ~FileLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FormatError("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const fs::path& p, const std::string& bytes) {
  const fs::path tmp = p.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << bytes;
  }
  fs::rename(tmp, p);
}

std::vector<CatalogRecord> read_index(const fs::path& index) {
  std::vector<CatalogRecord> out;
  if (!fs::exists(index)) return out;
  const auto j = nlohmann::json::parse(slurp(index));
  if (!j.is_object() || !j.contains("records") || !j["records"].is_array()) {
    throw FormatError("malformed catalog index " + index.string());
  }
  for (const auto& r : j["records"]) out.push_back(record_from_json(r));
  return out;
}

}  // namespace

nlohmann::json record_to_json(const CatalogRecord& r) {
  return {{"id", r.id}, {"path", r.path}, {"ring", std::string(ring_name(r.ring))}, {"n", r.n},
          {"m", r.m},   {"weight", r.weight}, {"invariant_key", r.invariant_key}};
}

CatalogRecord record_from_json(const nlohmann::json& j) {
  try {
    return {j.at("id").get<std::string>(), j.at("path").get<std::string>(),
            parse_ring(j.at("ring").get<std::string>()), j.at("n").get<int>(), j.at("m").get<int>(),
            j.at("weight").get<long>(), j.at("invariant_key").get<std::string>()};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed catalog record: ") + e.what());
  }
}

Scheme sort_summands(const Scheme& s) {
  std::vector<std::pair<std::string, Summand>> keyed;
  for (const auto& t : s.summands()) {
    const nlohmann::json j = {{"a", mat_to_json(t.a, s.ring())},
                              {"b", mat_to_json(t.b, s.ring())},
                              {"c", mat_to_json(t.c, s.ring())}};
    keyed.emplace_back(j.dump(), t);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Summand> out;
  for (auto& [k, t] : keyed) out.push_back(std::move(t));
  return Scheme(s.ring(), s.n(), std::move(out));
}

std::string canonical_file(const Scheme& s) { return canonical_bytes(sort_summands(s)); }

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

std::string scheme_id(const Scheme& s) { return sha256_hex(canonical_file(s)); }

Catalog::Catalog(fs::path root) : root_(std::move(root)) {}

fs::path Catalog::default_root() {
  const char* env = std::getenv(kCatalogEnv);
  return env && *env ? fs::path(env) : fs::path("catalog");
}

Catalog::AddResult Catalog::add(const Scheme& s) {
  if (!verify(s).correct) throw FormatError("refusing to catalog a scheme that does not verify");
  fs::create_directories(root_ / "schemes");
  const std::string bytes = canonical_file(s);
  CatalogRecord rec{sha256_hex(bytes), "", s.ring(), s.n(), s.m(), weight(s),
                    sym::to_string(sym::invariant_key(s))};
  rec.path = "schemes/" + rec.id + ".json";

  FileLock lock(root_ / ".lock");
  std::vector<CatalogRecord> recs = read_index(root_ / "index.json");
  for (const auto& r : recs)
    if (r.id == rec.id) return {r, false};
  write_atomic(root_ / rec.path, bytes);
  recs.push_back(rec);
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : recs) arr.push_back(record_to_json(r));
  write_atomic(root_ / "index.json", nlohmann::json{{"records", arr}}.dump(1) + "\n");
  return {rec, true};
}

std::vector<CatalogRecord> Catalog::records() const { return read_index(root_ / "index.json"); }

Scheme Catalog::load(const CatalogRecord& r) const { return read_scheme(root_ / r.path); }

}  // namespace mmwb::cat
