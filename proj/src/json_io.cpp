#include "ucx/json_io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ucx/errors.hpp"

namespace ucx {
namespace {

namespace fs = std::filesystem;

Json facets_to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json one = Json::array();
    f.for_each([&](int v) { one.push_back(v + 1); });
    facets.push_back(std::move(one));
  }
  return facets;
}

Json base_complex_json(const SimplicialComplex& k) {
  Json j;
  j["schema"] = "ucx/complex/v1";
  j["vertex_count"] = k.vertex_count();
  j["dim"] = k.dim();
  j["facets"] = facets_to_json(k);
  j["f_vector"] = fvector_to_json(k.f_vector());
  return j;
}

}  // namespace

std::string to_decimal(const mpz_class& z) { return z.get_str(); }

mpz_class from_decimal(const std::string& s) {
  if (s.empty()) throw PreconditionError("from_decimal: empty string");
  size_t start = s[0] == '-' ? 1 : 0;
  if (start == s.size())
    throw PreconditionError("from_decimal: no digits in '" + s + "'");
  for (size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw PreconditionError("from_decimal: bad digit in '" + s + "'");
  return mpz_class(s, 10);
}

Json complex_to_json(const SimplicialComplex& k) {
  return base_complex_json(k);
}

Json complex_to_json(const UniversalComplex& u) {
  Json j;
  j["schema"] = "ucx/complex/v1";
  j["family"] = u.family == Family::X ? "X" : "K";
  j["p"] = u.p;
  j["n"] = u.n;
  Json labels = Json::array();
  for (const auto& v : u.labels) {
    Json one = Json::array();
    for (uint8_t c : v) one.push_back(static_cast<int>(c));
    labels.push_back(std::move(one));
  }
  j["labels"] = std::move(labels);
  Json base = base_complex_json(u.complex);
  for (auto& [key, value] : base.items())
    if (key != "schema") j[key] = std::move(value);
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") ||
      j["schema"] != "ucx/complex/v1")
    throw PreconditionError("complex_from_json: not a ucx/complex/v1 object");
  if (!j.contains("vertex_count") || !j["vertex_count"].is_number_integer())
    throw PreconditionError("complex_from_json: missing vertex_count");
  const int m = j["vertex_count"].get<int>();
  if (m < 0 || m > 128)
    throw PreconditionError("complex_from_json: vertex_count out of range");
  if (!j.contains("facets") || !j["facets"].is_array())
    throw PreconditionError("complex_from_json: missing facets");
  std::vector<std::vector<int>> lists;
  for (const auto& f : j["facets"]) {
    if (!f.is_array())
      throw PreconditionError("complex_from_json: facet is not an array");
    std::vector<int> one;
    for (const auto& v : f) {
      if (!v.is_number_integer())
        throw PreconditionError("complex_from_json: vertex is not an integer");
      const int vi = v.get<int>();
      if (vi < 1 || vi > m)
        throw PreconditionError(
            "complex_from_json: vertex id outside 1..vertex_count");
      one.push_back(vi - 1);
    }
    lists.push_back(std::move(one));
  }
  return SimplicialComplex::from_vertex_lists(m, lists);
}

Json fvector_to_json(const FVector& fv) {
  Json arr = Json::array();
  for (const auto& c : fv.counts) arr.push_back(to_decimal(c));
  return arr;
}

Json betti_to_json(const BettiTable& t, const Json& meta) {
  Json j;
  j["schema"] = "ucx/betti/v1";
  for (const auto& [key, value] : meta.items()) j[key] = value;
  j["method"] = t.method;
  Json entries = Json::array();
  for (const auto& [key, value] : t.entries) {
    Json e;
    e["i"] = key.first;
    e["j"] = key.second;
    e["value"] = to_decimal(value);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  j["total"] = to_decimal(t.total());
  auto max = t.max_entry();
  Json m;
  m["i"] = max.i;
  m["j"] = max.j;
  m["value"] = to_decimal(max.value);
  j["max"] = std::move(m);
  return j;
}

BettiTable betti_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || j["schema"] != "ucx/betti/v1")
    throw PreconditionError("betti_from_json: not a ucx/betti/v1 object");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw PreconditionError("betti_from_json: missing entries");
  BettiTable t;
  if (j.contains("method") && j["method"].is_string())
    t.method = j["method"].get<std::string>();
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("i") || !e.contains("j") ||
        !e.contains("value") || !e["value"].is_string())
      throw PreconditionError("betti_from_json: malformed entry");
    t.entries[{e["i"].get<int>(), e["j"].get<int>()}] =
        from_decimal(e["value"].get<std::string>());
  }
  return t;
}

std::string betti_csv(const BettiTable& t, int rows, int columns) {
  std::ostringstream out;
  out << "l\\i";
  for (int i = 1; i <= columns; ++i) out << ',' << i;
  out << '\n';
  for (int l = 1; l <= rows; ++l) {
    out << l;
    for (int i = 1; i <= columns; ++i) out << ',' << to_decimal(t.at(i - l, i));
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("read_text_file: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof())
    throw ResourceError("read_text_file: cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ResourceError("write_text_file: cannot open " + path);
    out << text;
    if (!out.good())
      throw ResourceError("write_text_file: cannot write " + path);
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ResourceError("write_text_file: cannot replace " + path);
  }
}

uint64_t fnv1a64(const std::string& s) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string CacheKey::spell() const {
  std::ostringstream out;
  out << command << '|' << family << '|' << p << '|' << n << '|' << method
      << '|' << version;
  return out.str();
}

std::string CacheKey::filename() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(spell())));
  return std::string(buf) + ".json";
}

std::string Cache::dir_from_env() {
  const char* dir = std::getenv("UCX_CACHE_DIR");
  return dir ? dir : "";
}

std::optional<std::string> Cache::get(const CacheKey& key,
                                      std::string* warning) const {
  if (!enabled()) return std::nullopt;
  fs::path file = fs::path(dir_) / key.filename();
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  try {
    Json wrapper = Json::parse(read_text_file(file.string()));
    if (!wrapper.is_object() || wrapper.value("schema", "") != "ucx/cache/v1" ||
        !wrapper.contains("key") || !wrapper["key"].is_string() ||
        !wrapper.contains("artifact") || !wrapper["artifact"].is_string())
      throw PreconditionError("malformed wrapper");
    if (wrapper["key"].get<std::string>() != key.spell()) {
      if (warning)
        *warning = "cache entry " + file.string() +
                   " belongs to a different key; recomputing";
      return std::nullopt;
    }
    return wrapper["artifact"].get<std::string>();
  } catch (const std::exception&) {
    if (warning)
      *warning = "cache entry " + file.string() + " is corrupt; recomputing";
    return std::nullopt;
  }
}

void Cache::put(const CacheKey& key, const std::string& artifact) const {
  if (!enabled()) return;
  Json wrapper;
  wrapper["schema"] = "ucx/cache/v1";
  wrapper["key"] = key.spell();
  wrapper["artifact"] = artifact;
  fs::path file = fs::path(dir_) / key.filename();
  write_text_file(file.string(), wrapper.dump(2) + "\n");
}

}  // namespace ucx
