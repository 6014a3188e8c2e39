#include "ucx/cohomology.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ucx/errors.hpp"
#include "ucx/fp_linalg.hpp"
#include "ucx/z_lattice.hpp"

namespace ucx {
namespace {

struct Triplet {
  int r, c;
  int v;
};

struct Overflow {};

constexpr int64_t kEscalate = int64_t(1) << 61;

/** Invariant factors by unit-pivot sparse elimination with a dense exact
 * tail. Pivoting on a ±1 entry and clearing its column is an invertible
 * integer row operation, after which the pivot row clears by column
 * operations that touch nothing else; the factors are therefore the unit
 * pivots plus those of the residual matrix. Throws Overflow when an
 * intermediate entry leaves the safe int64 range. */
std::vector<mpz_class> snf_sparse(const std::vector<Triplet>& ts, int rows,
                                  int cols) {
  std::vector<std::unordered_map<int, int64_t>> row(rows);
  std::vector<std::unordered_set<int>> col_rows(cols);
  for (const auto& t : ts) {
    row[t.r][t.c] = t.v;
    col_rows[t.c].insert(t.r);
  }

  std::vector<mpz_class> divisors;
  while (true) {
    // lightest unit pivot by Markowitz score
    int pr = -1, pc = -1;
    long best = LONG_MAX;
    for (int r = 0; r < rows && best > 0; ++r) {
      for (const auto& [c, v] : row[r]) {
        if (v != 1 && v != -1) continue;
        long score = static_cast<long>(row[r].size() - 1) *
                     static_cast<long>(col_rows[c].size() - 1);
        if (score < best) {
          best = score;
          pr = r;
          pc = c;
          if (best == 0) break;
        }
      }
    }
    if (pr < 0) break;

    const int64_t pv = row[pr][pc];
    std::vector<std::pair<int, int64_t>> prow(row[pr].begin(), row[pr].end());
    std::vector<int> hit(col_rows[pc].begin(), col_rows[pc].end());
    for (int r : hit) {
      if (r == pr) continue;
      const int64_t factor = row[r][pc] * pv;
      for (const auto& [c, v] : prow) {
        auto it = row[r].find(c);
        __int128 nv =
            (it == row[r].end() ? static_cast<__int128>(0)
                                : static_cast<__int128>(it->second)) -
            static_cast<__int128>(factor) * v;
        if (nv > kEscalate || nv < -kEscalate) throw Overflow{};
        if (nv == 0) {
          if (it != row[r].end()) {
            row[r].erase(it);
            col_rows[c].erase(r);
          }
        } else if (it == row[r].end()) {
          row[r][c] = static_cast<int64_t>(nv);
          col_rows[c].insert(r);
        } else {
          it->second = static_cast<int64_t>(nv);
        }
      }
    }
    for (const auto& [c, v] : prow) col_rows[c].erase(pr);
    row[pr].clear();
    divisors.push_back(1);
  }

  // residual: no unit entries remain anywhere
  std::vector<int> rlist;
  std::unordered_map<int, int> cmap;
  for (int r = 0; r < rows; ++r) {
    if (row[r].empty()) continue;
    rlist.push_back(r);
    for (const auto& [c, v] : row[r])
      cmap.emplace(c, static_cast<int>(cmap.size()));
  }
  if (!rlist.empty()) {
    ZMat dense(rlist.size(), ZVec(cmap.size(), 0));
    for (size_t i = 0; i < rlist.size(); ++i)
      for (const auto& [c, v] : row[rlist[i]]) dense[i][cmap[c]] = v;
    auto tail = smith_normal_form(std::move(dense));
    for (auto& d : tail.divisors) divisors.push_back(d);
  }
  return divisors;
}

std::vector<mpz_class> snf_exact(const std::vector<Triplet>& ts, int rows,
                                 int cols) {
  try {
    return snf_sparse(ts, rows, cols);
  } catch (const Overflow&) {
    ZMat dense(rows, ZVec(cols, 0));
    for (const auto& t : ts) dense[t.r][t.c] = t.v;
    return smith_normal_form(std::move(dense)).divisors;
  }
}

}  // namespace

CohomologyResult reduced_cohomology(const SimplicialComplex& k,
                                    Coefficients coeff, int p) {
  if (coeff == Coefficients::ModP) {
    if (p < 2 || p > 251)
      throw PreconditionError("reduced_cohomology: p must be a small prime");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0)
        throw PreconditionError("reduced_cohomology: p must be prime");
  }

  auto levels = k.faces_by_card();
  const int nlev = static_cast<int>(levels.size());
  std::vector<std::unordered_map<VertexSet, int, VertexSetHash>> idx(nlev);
  for (int i = 0; i < nlev; ++i)
    for (int j = 0; j < static_cast<int>(levels[i].size()); ++j)
      idx[i].emplace(levels[i][j], j);

  CohomologyResult res;
  res.reduced_rank.assign(nlev, 0);
  res.torsion.assign(nlev, {});

  // rk[i] = rank of the coboundary from cardinality level i to i+1
  std::vector<int> rk(nlev, 0);
  for (int li = 0; li + 1 < nlev; ++li) {
    std::vector<Triplet> ts;
    for (int j = 0; j < static_cast<int>(levels[li + 1].size()); ++j) {
      const VertexSet& tau = levels[li + 1][j];
      tau.for_each([&](int v) {
        VertexSet sigma = tau;
        sigma.reset(v);
        int pos = (tau & VertexSet::full(v)).count();
        ts.push_back({idx[li].at(sigma), j, (pos % 2) ? -1 : 1});
      });
    }
    if (coeff == Coefficients::ModP) {
      FpMat m(levels[li].size(), FpVec(levels[li + 1].size(), 0));
      for (const auto& t : ts)
        m[t.r][t.c] = t.v > 0 ? 1 : static_cast<uint8_t>(p - 1);
      rk[li] = rank_fp(std::move(m), p);
    } else {
      auto div = snf_exact(ts, static_cast<int>(levels[li].size()),
                           static_cast<int>(levels[li + 1].size()));
      rk[li] = static_cast<int>(div.size());
      if (coeff == Coefficients::Integers)
        for (const auto& d : div)
          if (d > 1) res.torsion[li + 1].push_back(d);
    }
  }

  for (int i = 0; i < nlev; ++i) {
    int below = (i == 0) ? 0 : rk[i - 1];
    res.reduced_rank[i] =
        static_cast<int>(levels[i].size()) - rk[i] - below;
  }
  return res;
}

}  // namespace ucx
