#include "ucx/fp_linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace ucx {

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  a %= p;
  assert(a != 0);
  // Fermat: a^(p-2) mod p.
  uint64_t r = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

bool FpEliminator::push(const FpVec& v) {
  FpVec w = reduce(v);
  int piv = -1;
  for (int i = 0; i < n_; ++i)
    if (w[i] != 0) { piv = i; break; }
  if (piv < 0) return false;
  uint32_t inv = inv_mod_p(w[piv], p_);
  for (auto& c : w) c = static_cast<uint8_t>(c * inv % p_);
  basis_.push_back(std::move(w));
  pivot_.push_back(piv);
  return true;
}

void FpEliminator::pop() {
  assert(!basis_.empty());
  basis_.pop_back();
  pivot_.pop_back();
}

bool FpEliminator::in_span(const FpVec& v) const {
  FpVec w = reduce(v);
  for (auto c : w)
    if (c != 0) return false;
  return true;
}

FpVec FpEliminator::reduce(FpVec v) const {
  assert(static_cast<int>(v.size()) == n_);
  for (size_t i = 0; i < basis_.size(); ++i) {
    uint32_t c = v[pivot_[i]];
    if (c == 0) continue;
    uint32_t mul = p_ - c;  // v += mul * basis_[i] clears the pivot column
    for (int j = pivot_[i]; j < n_; ++j)
      v[j] = static_cast<uint8_t>((v[j] + mul * basis_[i][j]) % p_);
  }
  return v;
}

int rank_fp(FpMat rows, int p) {
  if (rows.empty()) return 0;
  FpEliminator e(static_cast<int>(rows[0].size()), p);
  for (auto& r : rows) e.push(r);
  return e.rank();
}

bool is_unimodular_fp(const FpMat& rows, int p) {
  return rank_fp(rows, p) == static_cast<int>(rows.size());
}

uint64_t code_of_vec(const FpVec& v, int p) {
  uint64_t c = 0;
  for (auto x : v) c = c * p + x;
  return c;
}

FpVec vec_of_code(uint64_t code, int n, int p) {
  FpVec v(n);
  for (int i = n - 1; i >= 0; --i) {
    v[i] = static_cast<uint8_t>(code % p);
    code /= p;
  }
  assert(code == 0);
  return v;
}

FpVec canonical_line(const FpVec& v, int p) {
  int lead = -1;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) { lead = static_cast<int>(i); break; }
  if (lead < 0) throw std::invalid_argument("canonical_line: zero vector");
  uint32_t inv = inv_mod_p(v[lead], p);
  FpVec w(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    w[i] = static_cast<uint8_t>(v[i] * inv % p);
  return w;
}

std::vector<FpVec> enumerate_lines(int n, int p) {
  std::vector<FpVec> lines;
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (uint64_t c = 1; c < total; ++c) {
    FpVec v = vec_of_code(c, n, p);
    if (canonical_line(v, p) == v) lines.push_back(std::move(v));
  }
  return lines;  // codes ascend, so lex order is automatic
}

}  // namespace ucx
