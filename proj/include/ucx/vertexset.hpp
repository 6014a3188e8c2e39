#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ucx {

/** Set of vertices drawn from {0, ..., 127}, stored in two machine words.
 *
 * Comparison is lexicographic on the ascending vertex list: {0,2} < {1},
 * {1} < {1,3}, and a proper prefix precedes its extensions. Sorted
 * containers and sorted output therefore list sets the way one would write
 * them down.
 */
class VertexSet {
 public:
  static constexpr int kMaxVertices = 128;

  constexpr VertexSet() = default;

  static VertexSet single(int v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  /** The full ground set {0, ..., m-1}. */
  static VertexSet full(int m) {
    assert(m >= 0 && m <= kMaxVertices);
    VertexSet s;
    if (m >= 64) {
      s.w_[0] = ~0ull;
      s.w_[1] = (m == 128) ? ~0ull : ((1ull << (m - 64)) - 1);
    } else if (m > 0) {
      s.w_[0] = (1ull << m) - 1;
    }
    return s;
  }

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  /** Vertices 0..63 taken from the bits of w. */
  static VertexSet from_word(uint64_t w) {
    VertexSet s;
    s.w_[0] = w;
    return s;
  }

  bool test(int v) const {
    assert(v >= 0 && v < kMaxVertices);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }

  void set(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] |= 1ull << (v & 63);
  }

  void reset(int v) {
    assert(v >= 0 && v < kMaxVertices);
    w_[v >> 6] &= ~(1ull << (v & 63));
  }

  int count() const { return std::popcount(w_[0]) + std::popcount(w_[1]); }

  bool empty() const { return (w_[0] | w_[1]) == 0; }

  /** True when other is a subset of this set. */
  bool contains(const VertexSet& other) const {
    return (other.w_[0] & ~w_[0]) == 0 && (other.w_[1] & ~w_[1]) == 0;
  }

  bool intersects(const VertexSet& other) const {
    return (w_[0] & other.w_[0]) || (w_[1] & other.w_[1]);
  }

  /** Smallest vertex, or -1 when empty. */
  int lowest() const {
    if (w_[0]) return std::countr_zero(w_[0]);
    if (w_[1]) return 64 + std::countr_zero(w_[1]);
    return -1;
  }

  /** Largest vertex, or -1 when empty. */
  int highest() const {
    if (w_[1]) return 127 - std::countl_zero(w_[1]);
    if (w_[0]) return 63 - std::countl_zero(w_[0]);
    return -1;
  }

  /** True when some vertex strictly greater than v is present. v may be -1,
   * in which case this asks whether the set is nonempty. */
  bool has_any_above(int v) const {
    assert(v >= -1 && v < kMaxVertices);
    if (v < 63) {
      uint64_t m0 = (v == 63) ? 0 : (~0ull << (v + 1));
      return (w_[0] & m0) || w_[1];
    }
    if (v == 63) return w_[1] != 0;
    int e = v - 64;
    if (e == 63) return false;
    return (w_[1] & (~0ull << (e + 1))) != 0;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  /** Calls fn(v) for each vertex in ascending order. */
  template <class F>
  void for_each(F&& fn) const {
    for (uint64_t w = w_[0]; w; w &= w - 1) fn(std::countr_zero(w));
    for (uint64_t w = w_[1]; w; w &= w - 1) fn(64 + std::countr_zero(w));
  }

  /** Bits for vertices 0..63; the whole set when it fits in one word. */
  uint64_t low_word() const { return w_[0]; }
  uint64_t high_word() const { return w_[1]; }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) {
    a.w_[0] |= b.w_[0];
    a.w_[1] |= b.w_[1];
    return a;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) {
    a.w_[0] &= b.w_[0];
    a.w_[1] &= b.w_[1];
    return a;
  }

  /** Set difference. */
  friend VertexSet operator-(VertexSet a, const VertexSet& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }

  VertexSet& operator|=(const VertexSet& b) {
    w_[0] |= b.w_[0];
    w_[1] |= b.w_[1];
    return *this;
  }

  VertexSet& operator&=(const VertexSet& b) {
    w_[0] &= b.w_[0];
    w_[1] &= b.w_[1];
    return *this;
  }

  VertexSet& operator-=(const VertexSet& b) {
    w_[0] &= ~b.w_[0];
    w_[1] &= ~b.w_[1];
    return *this;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.w_[0] == b.w_[0] && a.w_[1] == b.w_[1];
  }

  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    uint64_t x0 = a.w_[0] ^ b.w_[0];
    uint64_t x1 = a.w_[1] ^ b.w_[1];
    if (!(x0 | x1)) return false;
    // Smallest vertex in exactly one of the two sets. Elements below d
    // coincide, so the lists diverge at d: the set holding d is smaller
    // unless the other set stops there, making it a proper prefix.
    int d = x0 ? std::countr_zero(x0) : 64 + std::countr_zero(x1);
    if (a.test(d)) return b.has_any_above(d);
    return !a.has_any_above(d);
  }

 private:
  uint64_t w_[2] = {0, 0};
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const {
    // splitmix64 finalizer over the two words
    uint64_t h = s.low_word() + 0x9e3779b97f4a7c15ull;
    h ^= s.high_word() + (h << 6) + (h >> 2);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return static_cast<size_t>(h ^ (h >> 31));
  }
};

}  // namespace ucx
