#include "ucx/buchstaber.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ucx/errors.hpp"

namespace ucx {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void validate_field(int q, const char* who) {
  if (!is_prime(q) || q > 251)
    throw PreconditionError(std::string(who) + ": field order must be a small prime");
}

/** Smallest r with 1 + q + ... + q^(r-1) >= need. */
int rank_for_line_count(int q, long long need) {
  int r = 0;
  long long lines = 0, power = 1;
  const long long sat = 4000000000000000000LL / q;
  while (lines < need) {
    lines += power;
    if (power <= sat) power *= q;
    ++r;
  }
  return r;
}

/** Line count of F_q^r, clamped to cap + 1. */
long long line_count_capped(int q, int r, long long cap) {
  long long lines = 0, power = 1;
  for (int t = 0; t < r; ++t) {
    lines += power;
    if (lines > cap) return cap + 1;
    power *= q;
    if (power > cap + 1) power = cap + 1;
  }
  return lines;
}

/** Exact chromatic number of the 1-skeleton; fills colors when asked.
 * Branch and bound between a greedy clique and a greedy coloring, with
 * new-color indices forced ascending so color classes are canonical. */
bool try_color(const SimplicialComplex& k, const std::vector<int>& order,
               int limit, size_t pos, int used, std::vector<int>& colors,
               long long& guard) {
  if (++guard > 20000000)
    throw ResourceError("chromatic_number: search too large");
  if (pos == order.size()) return true;
  int v = order[pos];
  std::vector<char> taken(limit, 0);
  k.adjacency(v).for_each([&](int u) {
    if (colors[u] >= 0) taken[colors[u]] = 1;
  });
  int cap = std::min(limit - 1, used);
  for (int c = 0; c <= cap; ++c) {
    if (taken[c]) continue;
    colors[v] = c;
    if (try_color(k, order, limit, pos + 1, std::max(used, c + 1), colors,
                  guard))
      return true;
    colors[v] = -1;
  }
  return false;
}

int chromatic_with_coloring(const SimplicialComplex& k,
                            std::vector<int>* out) {
  const int m = k.vertex_count();
  if (out) out->assign(m, 0);
  if (m == 0) return 0;

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return k.adjacency(a).count() > k.adjacency(b).count();
  });

  VertexSet clique;
  for (int v : order)
    if (k.adjacency(v).contains(clique)) clique.set(v);
  const int lower = clique.count();

  std::vector<int> greedy(m, -1);
  int upper = 0;
  for (int v : order) {
    std::vector<char> taken(m, 0);
    k.adjacency(v).for_each([&](int u) {
      if (greedy[u] >= 0) taken[greedy[u]] = 1;
    });
    int c = 0;
    while (taken[c]) ++c;
    greedy[v] = c;
    upper = std::max(upper, c + 1);
  }
  if (out) *out = greedy;
  if (lower == upper) return upper;

  for (int limit = lower; limit < upper; ++limit) {
    std::vector<int> attempt(m, -1);
    long long guard = 0;
    if (try_color(k, order, limit, 0, 0, attempt, guard)) {
      if (out) *out = attempt;
      return limit;
    }
  }
  return upper;
}

enum class ProbeOutcome { kFound, kInfeasible, kBudget };

/** Depth-first search for a nondegenerate line assignment at one target
 * rank. Vertices are assigned in ascending order; for each new vertex only
 * the facets containing it are rechecked, over their already-assigned
 * members. The GL action is quotiented soundly: the first line ever used
 * must be line 0, the second line 1, and the third one of the two orbit
 * representatives under the stabilizer of the first two (the least line
 * inside their span and the least outside); later first-uses are free. */
class RankProbe {
 public:
  RankProbe(const SimplicialComplex& k, int q, int r, long long budget,
            long long* nodes)
      : k_(k),
        q_(q),
        r_(r),
        m_(k.vertex_count()),
        budget_(budget),
        nodes_(nodes),
        lines_(enumerate_lines(r, q)),
        elim_(r, q) {
    assign_.assign(m_, -1);
    used_.assign(lines_.size(), 0);
    if (lines_.size() >= 3) {
      FpEliminator span(r_, q_);
      span.push(lines_[0]);
      span.push(lines_[1]);
      for (size_t i = 2; i < lines_.size(); ++i) {
        if (span.in_span(lines_[i])) {
          if (c_in_ < 0) c_in_ = static_cast<int>(i);
        } else if (c_out_ < 0) {
          c_out_ = static_cast<int>(i);
        }
        if (c_in_ >= 0 && c_out_ >= 0) break;
      }
    }
  }

  ProbeOutcome run(std::vector<FpVec>* witness) {
    witness_ = witness;
    return dfs(0);
  }

 private:
  bool admissible(int t, int idx) {
    assign_[t] = idx;
    bool ok = true;
    for (int fi : k_.facets_of_vertex(t)) {
      elim_.clear();
      k_.facets()[fi].for_each([&](int v) {
        if (!ok || assign_[v] < 0) return;
        if (!elim_.push(lines_[assign_[v]])) ok = false;
      });
      if (!ok) break;
    }
    assign_[t] = -1;
    return ok;
  }

  ProbeOutcome dfs(int t) {
    if (t == m_) {
      if (witness_) {
        witness_->clear();
        for (int v = 0; v < m_; ++v) witness_->push_back(lines_[assign_[v]]);
      }
      return ProbeOutcome::kFound;
    }
    for (int idx = 0; idx < static_cast<int>(lines_.size()); ++idx) {
      if (!used_[idx]) {
        if (distinct_ == 0 && idx != 0) continue;
        if (distinct_ == 1 && idx != 1) continue;
        if (distinct_ == 2 && idx != c_in_ && idx != c_out_) continue;
      }
      if (++*nodes_ > budget_) return ProbeOutcome::kBudget;
      if (!admissible(t, idx)) continue;
      assign_[t] = idx;
      bool fresh = !used_[idx];
      if (fresh) {
        used_[idx] = 1;
        ++distinct_;
      }
      ProbeOutcome sub = dfs(t + 1);
      if (fresh) {
        used_[idx] = 0;
        --distinct_;
      }
      assign_[t] = -1;
      if (sub != ProbeOutcome::kInfeasible) return sub;
    }
    return ProbeOutcome::kInfeasible;
  }

  const SimplicialComplex& k_;
  int q_, r_, m_;
  long long budget_;
  long long* nodes_;
  std::vector<FpVec> lines_;
  FpEliminator elim_;
  std::vector<int> assign_;
  std::vector<char> used_;
  int distinct_ = 0;
  int c_in_ = -1, c_out_ = -1;
  std::vector<FpVec>* witness_ = nullptr;
};

constexpr long long kLineSpaceCap = 200000;

/** Ascending-rank search shared by min_target_rank, s_p and omega. */
RankSearch rank_search(const SimplicialComplex& k, int q, long long budget,
                       int* gamma_out) {
  const int m = k.vertex_count();
  RankSearch out;
  std::vector<int> coloring;
  int gamma = chromatic_with_coloring(k, &coloring);
  if (gamma_out) *gamma_out = gamma;
  if (m == 0) {
    out.feasible_rank = 0;
    out.exact = true;
    return out;
  }
  if (m > 64)
    throw ResourceError("min_target_rank: too many vertices to search");

  const int r_lo =
      std::max(k.dim() + 1, rank_for_line_count(q, gamma));
  out.certified_rank_lower = r_lo;
  out.feasible_rank = gamma;
  for (int r = r_lo; r <= gamma; ++r) {
    if (line_count_capped(q, r, kLineSpaceCap) > kLineSpaceCap) {
      out.budget_exhausted = true;
      break;
    }
    RankProbe probe(k, q, r, budget, &out.nodes);
    ProbeOutcome res = probe.run(&out.assignment);
    if (res == ProbeOutcome::kFound) {
      out.feasible_rank = r;
      break;
    }
    if (res == ProbeOutcome::kBudget) {
      out.budget_exhausted = true;
      break;
    }
    if (r == gamma)
      throw std::logic_error("rank_search: missed the coloring witness");
    out.certified_rank_lower = r + 1;
  }
  if (out.assignment.empty()) {
    // fall back to the proper coloring mapped onto basis lines
    out.assignment.reserve(m);
    for (int v = 0; v < m; ++v) {
      FpVec e(gamma, 0);
      e[coloring[v]] = 1;
      out.assignment.push_back(e);
    }
  }
  out.exact = out.feasible_rank == out.certified_rank_lower;
  return out;
}

}  // namespace

bool is_nondegenerate(const SimplicialComplex& k, int q, int r,
                      const std::vector<FpVec>& assignment) {
  validate_field(q, "is_nondegenerate");
  if (r < 0) throw PreconditionError("is_nondegenerate: negative rank");
  if (assignment.size() != static_cast<size_t>(k.vertex_count()))
    throw PreconditionError("is_nondegenerate: assignment must be total");
  for (const auto& v : assignment) {
    if (static_cast<int>(v.size()) != r)
      throw PreconditionError("is_nondegenerate: label length mismatch");
    for (uint8_t c : v)
      if (c >= q)
        throw PreconditionError("is_nondegenerate: label entry out of range");
  }
  for (const auto& facet : k.facets()) {
    FpEliminator elim(r, q);
    bool ok = true;
    facet.for_each([&](int v) {
      if (ok && !elim.push(assignment[v])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

int chromatic_number(const SimplicialComplex& k) {
  return chromatic_with_coloring(k, nullptr);
}

RankSearch min_target_rank(const SimplicialComplex& k, int q,
                           long long node_budget) {
  validate_field(q, "min_target_rank");
  return rank_search(k, q, node_budget, nullptr);
}

InvariantReport s_p(const SimplicialComplex& k, int p,
                    long long node_budget) {
  validate_field(p, "s_p");
  InvariantReport rep;
  rep.vertex_count = k.vertex_count();
  rep.p = p;
  if (rep.vertex_count == 0) {
    rep.exact = true;
    rep.value = 0;
    return rep;
  }
  const int m = rep.vertex_count;
  int gamma = 0;
  RankSearch rs = rank_search(k, p, node_budget, &gamma);
  rep.gamma = gamma;
  rep.lower_from_coloring = m - gamma;
  rep.upper_from_dimension = m - k.dim() - 1;
  // a nondegenerate map is a proper coloring by lines, so the target needs
  // at least gamma of them
  rep.upper_from_line_count = m - rank_for_line_count(p, gamma);
  rep.s_lower = m - rs.feasible_rank;
  rep.s_upper = m - rs.certified_rank_lower;
  rep.exact = rs.exact;
  rep.value = rs.exact ? rep.s_lower : -1;
  rep.attained_rank = rs.feasible_rank;
  rep.nodes = rs.nodes;
  rep.budget_exhausted = rs.budget_exhausted;
  rep.assignment = std::move(rs.assignment);
  if (rep.lower_from_coloring > rep.s_lower ||
      rep.s_upper > std::min(rep.upper_from_dimension,
                             rep.upper_from_line_count))
    throw std::logic_error("s_p: bound chain violated");
  return rep;
}

InvariantReport bounds_report(const SimplicialComplex& k, int p) {
  validate_field(p, "bounds_report");
  InvariantReport rep;
  rep.vertex_count = k.vertex_count();
  rep.p = p;
  if (rep.vertex_count == 0) {
    rep.exact = true;
    rep.value = 0;
    return rep;
  }
  const int m = rep.vertex_count;
  rep.gamma = chromatic_number(k);
  rep.lower_from_coloring = m - rep.gamma;
  rep.upper_from_dimension = m - k.dim() - 1;
  rep.upper_from_line_count = m - rank_for_line_count(p, rep.gamma);
  rep.s_lower = rep.lower_from_coloring;
  rep.s_upper = std::min(rep.upper_from_dimension, rep.upper_from_line_count);
  if (rep.s_lower > rep.s_upper)
    throw std::logic_error("bounds_report: bound chain violated");
  rep.exact = rep.s_lower == rep.s_upper;
  rep.value = rep.exact ? rep.s_lower : -1;
  return rep;
}

int s_p_graph_formula(const SimplicialComplex& graph, int p) {
  validate_field(p, "s_p_graph_formula");
  if (graph.vertex_count() == 0)
    throw PreconditionError("s_p_graph_formula: empty graph");
  if (graph.dim() > 1)
    throw PreconditionError("s_p_graph_formula: input must be a graph");
  // on a graph nondegeneracy is exactly proper coloring by lines, so the
  // minimal rank is the least r whose line count reaches the chromatic
  // number; no search needed
  int gamma = chromatic_number(graph);
  return graph.vertex_count() - rank_for_line_count(p, gamma);
}

OmegaReport omega(int p, int q, int n, long long node_budget) {
  validate_field(p, "omega");
  validate_field(q, "omega");
  if (n < 1) throw PreconditionError("omega: n must be >= 1");
  OmegaReport rep;
  rep.p = p;
  rep.q = q;
  rep.n = n;
  const mpz_class m = vertex_count_K(p, n);
  rep.upper = m;
  {
    mpz_class lines = 0, power = 1;
    int r = 0;
    while (lines < m) {
      lines += power;
      power *= q;
      ++r;
    }
    rep.lower = std::max(n, r);
  }
  if (m > 40) return rep;  // bounds only, flagged by searched = false
  try {
    UniversalComplex source = build_K(p, n);
    RankSearch rs = min_target_rank(source.complex, q, node_budget);
    rep.searched = true;
    rep.nodes = rs.nodes;
    rep.assignment = std::move(rs.assignment);
    rep.lower = std::max(rep.lower, rs.certified_rank_lower);
    rep.upper = rs.feasible_rank;
    rep.exact = rs.exact;
    if (rep.exact) rep.value = rs.feasible_rank;
  } catch (const ResourceError&) {
    // fall through with the counting bounds
  }
  return rep;
}

ThetaBounds theta_bounds(int p, int n) {
  validate_field(p, "theta_bounds");
  if (n < 1) throw PreconditionError("theta_bounds: n must be >= 1");
  ThetaBounds out;
  mpz_class m = vertex_count_K(p, n);
  // bit length of m equals ceil(log2(m + 1)); it dominates the rank bound n
  out.lower = static_cast<int>(mpz_sizeinbase(m.get_mpz_t(), 2));
  out.upper = m;
  return out;
}

SkeletonReport skeleton_checks(int p, int m_max, long long node_budget) {
  validate_field(p, "skeleton_checks");
  if (m_max < 0) throw PreconditionError("skeleton_checks: m_max negative");
  if (m_max > 8)
    throw ResourceError("skeleton_checks: grid too large to search");
  SkeletonReport rep;
  rep.p = p;
  long long spent = 0;
  // s[sm][sk]
  std::vector<std::vector<int>> s(m_max + 1);
  for (int sm = 0; sm <= m_max; ++sm) {
    s[sm].assign(sm + 1, -1);
    for (int sk = 0; sk <= sm; ++sk) {
      auto complex = SimplicialComplex::skeleton_of_simplex(sm + 1, sk);
      RankSearch rs =
          rank_search(complex, p, std::max(0LL, node_budget - spent), nullptr);
      spent += rs.nodes;
      SkeletonEntry entry;
      entry.simplex_dim = sm;
      entry.skeleton_dim = sk;
      entry.exact = rs.exact;
      if (rs.exact) {
        entry.s_value = sm + 1 - rs.feasible_rank;
        s[sm][sk] = entry.s_value;
      } else {
        rep.complete = false;
      }
      rep.entries.push_back(entry);
    }
  }
  for (int sm = 0; sm + 1 <= m_max; ++sm) {
    for (int sk = 0; sk <= sm; ++sk) {
      int a = s[sm][sk], up = s[sm + 1][sk], diag = s[sm + 1][sk + 1];
      if (a < 0 || up < 0 || diag < 0) continue;
      if (!(diag <= a && a <= up && up <= a + 1)) rep.chain_holds = false;
    }
  }
  return rep;
}

bool injectivity_check(const UniversalComplex& source, int q, int r,
                       const std::vector<FpVec>& assignment) {
  if (source.family != Family::K && source.p != 2)
    throw PreconditionError(
        "injectivity_check: source must have a complete 1-skeleton");
  if (!is_nondegenerate(source.complex, q, r, assignment)) return false;
  std::vector<uint64_t> codes;
  codes.reserve(assignment.size());
  for (const auto& v : assignment)
    codes.push_back(code_of_vec(canonical_line(v, q), q));
  std::sort(codes.begin(), codes.end());
  return std::adjacent_find(codes.begin(), codes.end()) == codes.end();
}

}  // namespace ucx
