#include "ucx/z_lattice.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace ucx {

mpz_class det_bareiss(ZMat a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  for (auto& r : a)
    if (static_cast<int>(r.size()) != n)
      throw std::invalid_argument("det_bareiss: matrix not square");
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int s = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { s = i; break; }
      if (s < 0) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

mpz_class minor_det(const ZMat& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(cols.size());
  ZMat sub(k, ZVec(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub[i][j] = rows[i][cols[j]];
  return det_bareiss(std::move(sub));
}

}  // namespace

bool is_unimodular_z(const ZMat& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return true;
  const int n = static_cast<int>(rows[0].size());
  if (k > n) return false;
  std::vector<int> cols(k);
  for (int i = 0; i < k; ++i) cols[i] = i;
  mpz_class g = 0;
  while (true) {
    mpz_class d = minor_det(rows, cols);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return true;
    // next k-combination of {0..n-1}
    int i = k - 1;
    while (i >= 0 && cols[i] == n - k + i) --i;
    if (i < 0) break;
    ++cols[i];
    for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return false;
}

namespace {

// Column operations on `a` mirrored by inverse row operations on `w`,
// keeping a_current * w == a_original.
struct ColumnReducer {
  ZMat& a;
  ZMat& w;
  int rows, cols;

  void swap_cols(int c1, int c2) {
    if (c1 == c2) return;
    for (int i = 0; i < rows; ++i) std::swap(a[i][c1], a[i][c2]);
    std::swap(w[c1], w[c2]);
  }
  void negate_col(int c) {
    for (int i = 0; i < rows; ++i) a[i][c] = -a[i][c];
    for (auto& x : w[c]) x = -x;
  }
  // col_c += q * col_d
  void add_col(int c, int d, const mpz_class& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) a[i][c] += q * a[i][d];
    for (int j = 0; j < cols; ++j) w[d][j] -= q * w[c][j];
  }
};

}  // namespace

ZMat extend_to_basis_z(const ZMat& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) throw std::invalid_argument("extend_to_basis_z: empty input");
  const int n = static_cast<int>(rows[0].size());
  if (!is_unimodular_z(rows))
    throw std::invalid_argument("extend_to_basis_z: rows are not unimodular");

  ZMat a = rows;
  ZMat w(n, ZVec(n, 0));
  for (int i = 0; i < n; ++i) w[i][i] = 1;
  ColumnReducer red{a, w, k, n};

  // Make a lower triangular: Euclid across the columns >= r of each row.
  for (int r = 0; r < k; ++r) {
    while (true) {
      int best = -1;
      int nonzero = 0;
      for (int c = r; c < n; ++c) {
        if (a[r][c] == 0) continue;
        ++nonzero;
        if (best < 0 ||
            mpz_cmpabs(a[r][c].get_mpz_t(), a[r][best].get_mpz_t()) < 0)
          best = c;
      }
      assert(nonzero > 0);
      if (nonzero == 1) {
        red.swap_cols(r, best);
        break;
      }
      for (int c = r; c < n; ++c) {
        if (c == best || a[r][c] == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a[r][c].get_mpz_t(), a[r][best].get_mpz_t());
        red.add_col(c, best, -q);
      }
    }
  }
  // Unimodular input forces every diagonal entry to be +-1; normalize and
  // clear the below-diagonal part row by row.
  for (int r = 0; r < k; ++r) {
    assert(a[r][r] == 1 || a[r][r] == -1);
    if (a[r][r] == -1) red.negate_col(r);
    for (int c = 0; c < r; ++c)
      if (a[r][c] != 0) red.add_col(c, r, -a[r][c]);
  }

  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) assert(a[i][j] == (i == j ? 1 : 0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) assert(w[i][j] == rows[i][j]);
  mpz_class det = det_bareiss(w);
  assert(det == 1 || det == -1);
  (void)det;
  return w;
}

SmithResult smith_normal_form(ZMat a) {
  SmithResult res;
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int t = 0;
  while (true) {
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (a[i][j] != 0 &&
            (pi < 0 ||
             mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    std::swap(a[t], a[pi]);
    for (int i = t; i < rows; ++i) std::swap(a[i][t], a[i][pj]);

    bool stable = true;
    for (int i = t + 1; i < rows; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
      for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) stable = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q;
      mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
      for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) stable = false;
    }
    if (!stable) continue;  // remainders left in the cross; repeat with a smaller pivot

    // Pivot now divides its cleared cross; enforce divisibility on the rest.
    bool divides_all = true;
    for (int i = t + 1; i < rows && divides_all; ++i)
      for (int j = t + 1; j < cols; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int c = t; c < cols; ++c) a[t][c] += a[i][c];
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    res.divisors.push_back(abs(a[t][t]));
    ++t;
    if (t >= rows || t >= cols) break;
  }
  res.rank = static_cast<int>(res.divisors.size());
  return res;
}

}  // namespace ucx
