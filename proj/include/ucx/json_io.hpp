#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "ucx/scomplex.hpp"
#include "ucx/tor.hpp"
#include "ucx/universal.hpp"

namespace ucx {

/** Bumping this invalidates every cache entry. */
inline constexpr const char* kCodeVersion = "1.0.0";

/** Key-order-preserving JSON, so artifacts serialize deterministically. */
using Json = nlohmann::ordered_json;

/** Big integers travel as decimal strings; JSON numbers would lose
 * precision past 2^53 in downstream consumers. */
std::string to_decimal(const mpz_class& z);
mpz_class from_decimal(const std::string& s);

/** ucx/complex/v1. Vertices are 1-based outside the library; facets are
 * listed ascending, each ascending inside, so the artifact is canonical
 * and a read-write cycle is byte-identical. */
Json complex_to_json(const SimplicialComplex& k);
/** Same artifact plus family, p, n and the coordinate labels. */
Json complex_to_json(const UniversalComplex& u);
/** Reads vertex_count and facets; labels and family metadata are
 * ignored, so both artifact flavors load. */
SimplicialComplex complex_from_json(const Json& j);

Json fvector_to_json(const FVector& fv);

/** ucx/betti/v1. meta entries (family, p, n, ...) are copied in order
 * right after the schema field. Entries are sorted by (i, j). */
Json betti_to_json(const BettiTable& t, const Json& meta = Json::object());
BettiTable betti_from_json(const Json& j);

/** Table in the layout used for the reference tables: header row
 * l\i,1..columns, one row per l = 1..rows, entry at (l, i) the Betti
 * number of bidegree (-(i-l), 2i). */
std::string betti_csv(const BettiTable& t, int rows, int columns);

std::string read_text_file(const std::string& path);
/** Writes via a temporary file in the same directory plus rename, so
 * concurrent readers never observe a partial artifact. */
void write_text_file(const std::string& path, const std::string& text);

uint64_t fnv1a64(const std::string& s);

/** Cache identity of one artifact; version participates, so any code
 * version bump is an automatic miss. */
struct CacheKey {
  std::string command;
  std::string family;
  int p = 0;
  int n = 0;
  std::string method;
  std::string version = kCodeVersion;

  std::string spell() const;
  std::string filename() const;
};

/** Content-addressed artifact cache: one JSON wrapper file per key,
 * carrying the spelled key (verified on read, so a hash collision or a
 * truncated file degrades to a recompute) and the artifact bytes, which
 * replay bit-exactly. A default-constructed cache is disabled. */
class Cache {
 public:
  Cache() = default;
  explicit Cache(std::string dir) : dir_(std::move(dir)) {}

  /** $UCX_CACHE_DIR, or empty when unset. */
  static std::string dir_from_env();

  bool enabled() const { return !dir_.empty(); }
  const std::string& dir() const { return dir_; }

  /** The stored artifact bytes, or nullopt on miss. A corrupt entry
   * reports through *warning and counts as a miss. */
  std::optional<std::string> get(const CacheKey& key,
                                 std::string* warning) const;
  void put(const CacheKey& key, const std::string& artifact) const;

 private:
  std::string dir_;
};

}  // namespace ucx
