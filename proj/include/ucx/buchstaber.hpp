#pragma once

#include <gmpxx.h>

#include <vector>

#include "ucx/fp_linalg.hpp"
#include "ucx/scomplex.hpp"
#include "ucx/universal.hpp"

namespace ucx {

inline constexpr long long kDefaultNodeBudget = 100000000;

/** True iff every facet of k maps to an independent set of lines; subsets
 * are then automatic. assignment[v] is a vector of length r over F_q
 * spanning the line vertex v maps to. */
bool is_nondegenerate(const SimplicialComplex& k, int q, int r,
                      const std::vector<FpVec>& assignment);

/** Exact chromatic number of the 1-skeleton, by branch and bound between
 * a greedy clique lower bound and a greedy coloring upper bound. */
int chromatic_number(const SimplicialComplex& k);

/** Outcome of the backtracking search for the least target rank r such
 * that some line assignment in F_q^r is nondegenerate. Ranks below
 * certified_rank_lower are proven impossible (count and dimension
 * obstructions, plus exhausted searches); feasible_rank carries a witness.
 * When the node budget runs out the two can differ and exact is false. */
struct RankSearch {
  int feasible_rank = -1;
  int certified_rank_lower = 0;
  bool exact = false;
  long long nodes = 0;
  bool budget_exhausted = false;
  std::vector<FpVec> assignment;
};

RankSearch min_target_rank(const SimplicialComplex& k, int q,
                           long long node_budget = kDefaultNodeBudget);

/** s_q(k) = m - r over the least nondegenerate target rank r, reported
 * with the searchless bounds: m - gamma from coloring into a basis,
 * m - dim - 1 from the rank a facet needs, and m - ceil(log_q((q-1)
 * gamma + 1)) from the line count a proper coloring requires. */
struct InvariantReport {
  int vertex_count = 0;
  int p = 0;
  int gamma = 0;
  int lower_from_coloring = 0;
  int upper_from_dimension = 0;
  int upper_from_line_count = 0;
  int s_lower = 0;
  int s_upper = 0;
  int value = -1;
  bool exact = false;
  int attained_rank = -1;
  long long nodes = 0;
  bool budget_exhausted = false;
  std::vector<FpVec> assignment;
};

InvariantReport s_p(const SimplicialComplex& k, int p,
                    long long node_budget = kDefaultNodeBudget);

/** The searchless part of s_p: bounds and their consistency chain only. */
InvariantReport bounds_report(const SimplicialComplex& k, int p);

/** Closed form for 1-dimensional complexes:
 * m - ceil(log_p((p-1) gamma + 1)). Higher dimension is rejected. */
int s_p_graph_formula(const SimplicialComplex& graph, int p);

/** Least rank r admitting a nondegenerate map from the line complex of
 * F_p^n into the lines of F_q^r. The count bound and the rank of the
 * source bracket the value; the search fills in the exact rank when the
 * instance is small enough to build and explore. */
struct OmegaReport {
  int p = 0;
  int q = 0;
  int n = 0;
  int lower = 0;
  mpz_class upper;
  int value = -1;
  bool exact = false;
  bool searched = false;
  long long nodes = 0;
  std::vector<FpVec> assignment;
};

OmegaReport omega(int p, int q, int n,
                  long long node_budget = kDefaultNodeBudget);

/** Bounds for the least integral target rank. Only bounds: the target has
 * infinitely many vertices, so no search runs. The lower bound is the
 * binary count bound, the largest one over all reduction primes; the
 * upper bound embeds the source in a simplex on its own vertices. */
struct ThetaBounds {
  int lower = 0;
  mpz_class upper;
};

ThetaBounds theta_bounds(int p, int n);

/** Exact s_p over the skeleton grid: entries for every simplex dimension
 * sm <= m_max and skeleton dimension sk <= sm, with the chain
 * s(sm+1, sk+1) <= s(sm, sk) <= s(sm+1, sk) <= s(sm, sk) + 1 checked on
 * every exact pair. Budget exhaustion leaves entries inexact and the
 * report incomplete. */
struct SkeletonEntry {
  int simplex_dim = 0;
  int skeleton_dim = 0;
  int s_value = -1;
  bool exact = false;
};

struct SkeletonReport {
  int p = 0;
  std::vector<SkeletonEntry> entries;
  bool chain_holds = true;
  bool complete = true;
};

SkeletonReport skeleton_checks(int p, int m_max,
                               long long node_budget = kDefaultNodeBudget);

/** For a source whose 1-skeleton is complete (the K family, or X over
 * F_2), a nondegenerate assignment must send vertices to pairwise
 * distinct lines. Returns true iff the assignment is nondegenerate and
 * injective on lines; the two agree for such sources. */
bool injectivity_check(const UniversalComplex& source, int q, int r,
                       const std::vector<FpVec>& assignment);

}  // namespace ucx
