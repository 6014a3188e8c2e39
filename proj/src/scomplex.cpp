#include "ucx/scomplex.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "ucx/bigint.hpp"
#include "ucx/errors.hpp"

namespace ucx {

namespace {

// All-subsets membership table limits: ground set must fit the table index
// and populating it (one pass per facet subset) must stay cheap.
constexpr int kFaceTableMaxVertices = 22;
constexpr uint64_t kFaceTableMaxWork = 1ull << 24;

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int num_vertices,
                                                 std::vector<VertexSet> facets) {
  if (num_vertices < 0 || num_vertices > VertexSet::kMaxVertices)
    throw PreconditionError("from_facets: vertex count out of range");
  for (const auto& f : facets)
    if (f.has_any_above(num_vertices - 1))
      throw PreconditionError("from_facets: facet outside the ground set");

  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  int maxc = -1;
  int minc = INT_MAX;
  for (const auto& f : facets) {
    int c = f.count();
    maxc = std::max(maxc, c);
    minc = std::min(minc, c);
  }

  std::vector<VertexSet> keep;
  if (facets.empty() || maxc == 0) {
    // no generators, or only the empty set: the complex {∅}
  } else if (minc == maxc) {
    // equal cardinalities: distinct sets cannot contain one another
    keep = std::move(facets);
  } else {
    // maximality filter, largest first; a set is non-maximal exactly when
    // some already-kept larger set contains it, and we only scan kept sets
    // through one of the candidate's vertices
    std::sort(facets.begin(), facets.end(), [](const VertexSet& a, const VertexSet& b) {
      int ca = a.count(), cb = b.count();
      return ca != cb ? ca > cb : a < b;
    });
    std::vector<std::vector<int>> kept_by_vertex(num_vertices);
    for (const auto& f : facets) {
      bool covered = false;
      if (f.empty()) {
        covered = !keep.empty();
      } else {
        for (int i : kept_by_vertex[f.lowest()]) {
          if (keep[i].count() > f.count() && keep[i].contains(f)) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) {
        int idx = static_cast<int>(keep.size());
        keep.push_back(f);
        f.for_each([&](int v) { kept_by_vertex[v].push_back(idx); });
      }
    }
    std::sort(keep.begin(), keep.end());
  }

  SimplicialComplex k;
  k.m_ = num_vertices;
  k.facets_ = std::move(keep);
  k.dim_ = k.facets_.empty() ? -1 : maxc - 1;
  k.build_indexes();
  return k;
}

SimplicialComplex SimplicialComplex::from_vertex_lists(
    int num_vertices, const std::vector<std::vector<int>>& lists) {
  std::vector<VertexSet> facets;
  facets.reserve(lists.size());
  for (const auto& l : lists) {
    VertexSet s;
    for (int v : l) {
      if (v < 0 || v >= VertexSet::kMaxVertices)
        throw PreconditionError("from_vertex_lists: vertex out of range");
      s.set(v);
    }
    facets.push_back(s);
  }
  return from_facets(num_vertices, std::move(facets));
}

SimplicialComplex SimplicialComplex::skeleton_of_simplex(int num_vertices, int k) {
  if (num_vertices < 0 || num_vertices > VertexSet::kMaxVertices || k < -1 ||
      k >= num_vertices)
    throw PreconditionError("skeleton_of_simplex: arguments out of range");
  if (k == -1) return from_facets(num_vertices, {});
  if (binomial(num_vertices, k + 1) > mpz_class(10000000))
    throw ResourceError("skeleton_of_simplex: facet count exceeds 10^7");

  std::vector<VertexSet> facets;
  std::vector<int> c(k + 1);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    VertexSet s;
    for (int v : c) s.set(v);
    facets.push_back(s);
    int i = k;
    while (i >= 0 && c[i] == num_vertices - (k + 1) + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int t = i + 1; t <= k; ++t) c[t] = c[t - 1] + 1;
  }
  return from_facets(num_vertices, std::move(facets));
}

void SimplicialComplex::build_indexes() {
  vertex_facets_.assign(m_, {});
  adj_.assign(m_, VertexSet());
  uint64_t subset_work = 0;
  for (int i = 0; i < static_cast<int>(facets_.size()); ++i) {
    const VertexSet& f = facets_[i];
    f.for_each([&](int v) {
      vertex_facets_[v].push_back(i);
      adj_[v] |= f;
    });
    subset_work += 1ull << std::min(f.count(), 62);
  }
  for (int v = 0; v < m_; ++v) adj_[v].reset(v);

  face_table_enabled_ =
      m_ <= kFaceTableMaxVertices && subset_work <= kFaceTableMaxWork;
  if (face_table_enabled_) {
    face_table_.assign(1ull << m_, false);
    face_table_[0] = true;
    for (const auto& f : facets_) {
      uint64_t fw = f.low_word();
      for (uint64_t s = fw;; s = (s - 1) & fw) {
        face_table_[s] = true;
        if (!s) break;
      }
    }
  }
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.count() != dim_ + 1) return false;
  return true;
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet u;
  for (const auto& f : facets_) u |= f;
  return u;
}

bool SimplicialComplex::is_simplex(const VertexSet& s) const {
  if (s.empty()) return true;
  if (s.has_any_above(m_ - 1)) return false;
  if (face_table_enabled_) return face_table_[s.low_word()];
  if (s.count() == 2) {
    int u = s.lowest();
    return adj_[u].test(s.highest());
  }
  for (int i : vertex_facets_[s.lowest()])
    if (facets_[i].contains(s)) return true;
  return false;
}

void SimplicialComplex::for_each_face(
    const std::function<void(const VertexSet&, int)>& fn) const {
  fn(VertexSet(), -1);
  if (facets_.empty()) return;
  std::vector<int> all(facets_.size());
  std::iota(all.begin(), all.end(), 0);
  // grow faces by ascending vertex; supp lists the facets containing the
  // current face, so each face is visited exactly once, in lex order
  std::function<void(const VertexSet&, const std::vector<int>&, int)> rec =
      [&](const VertexSet& sigma, const std::vector<int>& supp, int maxv) {
        VertexSet cand;
        for (int i : supp) cand |= facets_[i];
        cand -= VertexSet::full(maxv + 1);
        cand.for_each([&](int v) {
          std::vector<int> supp2;
          supp2.reserve(supp.size());
          for (int i : supp)
            if (facets_[i].test(v)) supp2.push_back(i);
          VertexSet sigma2 = sigma;
          sigma2.set(v);
          fn(sigma2, sigma2.count() - 1);
          rec(sigma2, supp2, v);
        });
      };
  rec(VertexSet(), all, -1);
}

std::vector<std::vector<VertexSet>> SimplicialComplex::faces_by_card() const {
  std::vector<std::vector<VertexSet>> levels(dim_ + 2);
  for_each_face([&](const VertexSet& f, int d) { levels[d + 1].push_back(f); });
  return levels;
}

FVector SimplicialComplex::f_vector() const {
  FVector fv;
  fv.counts.assign(dim_ + 2, mpz_class(0));
  for_each_face([&](const VertexSet&, int d) { fv.counts[d + 1] += 1; });
  return fv;
}

mpz_class SimplicialComplex::euler_characteristic() const {
  FVector fv = f_vector();
  mpz_class chi = 0;
  for (size_t k = 1; k < fv.counts.size(); ++k) {
    if (k % 2)
      chi += fv.counts[k];
    else
      chi -= fv.counts[k];
  }
  return chi;
}

mpz_class SimplicialComplex::reduced_euler_characteristic() const {
  return euler_characteristic() - 1;
}

ReindexedComplex SimplicialComplex::full_subcomplex(
    const VertexSet& j_set) const {
  if (!VertexSet::full(m_).contains(j_set))
    throw PreconditionError("full_subcomplex: set outside the ground set");
  std::vector<int> map = j_set.to_vector();
  std::vector<int> old2new(m_, -1);
  for (size_t i = 0; i < map.size(); ++i) old2new[map[i]] = static_cast<int>(i);

  std::unordered_set<VertexSet, VertexSetHash> seen;
  std::vector<VertexSet> cuts;
  for (const auto& f : facets_) {
    VertexSet g = f & j_set;
    if (!seen.insert(g).second) continue;
    VertexSet t;
    g.for_each([&](int v) { t.set(old2new[v]); });
    cuts.push_back(t);
  }
  return {from_facets(static_cast<int>(map.size()), std::move(cuts)),
          std::move(map)};
}

ReindexedComplex SimplicialComplex::link(const VertexSet& sigma) const {
  if (!is_simplex(sigma))
    throw PreconditionError("link: argument is not a face");
  std::vector<VertexSet> rels;
  VertexSet uni;
  auto take = [&](const VertexSet& f) {
    if (!f.contains(sigma)) return;
    VertexSet r = f - sigma;
    uni |= r;
    rels.push_back(r);
  };
  if (sigma.empty()) {
    for (const auto& f : facets_) take(f);
  } else {
    for (int i : vertex_facets_[sigma.lowest()]) take(facets_[i]);
  }

  std::vector<int> map = uni.to_vector();
  std::vector<int> old2new(m_, -1);
  for (size_t i = 0; i < map.size(); ++i) old2new[map[i]] = static_cast<int>(i);
  for (auto& r : rels) {
    VertexSet t;
    r.for_each([&](int v) { t.set(old2new[v]); });
    r = t;
  }
  return {from_facets(static_cast<int>(map.size()), std::move(rels)),
          std::move(map)};
}

bool SimplicialComplex::is_matroid() const {
  auto levels = faces_by_card();
  std::unordered_set<VertexSet, VertexSetHash> index;
  for (const auto& lv : levels)
    for (const auto& f : lv) index.insert(f);
  // augmentation for |B| = |A| + 1 implies the general exchange axiom
  for (size_t s = 1; s + 1 < levels.size(); ++s) {
    for (const auto& a : levels[s]) {
      for (const auto& b : levels[s + 1]) {
        bool ok = false;
        (b - a).for_each([&](int v) {
          if (ok) return;
          VertexSet c = a;
          c.set(v);
          if (index.count(c)) ok = true;
        });
        if (!ok) return false;
      }
    }
  }
  return true;
}

int SimplicialComplex::matroid_rank() const {
  if (!is_pure())
    throw PreconditionError("matroid_rank: complex is not pure");
  return dim_ + 1;
}

std::vector<VertexSet> SimplicialComplex::minimal_nonsimplices(int j) const {
  if (j < 1) throw PreconditionError("minimal_nonsimplices: j must be >= 1");
  std::vector<VertexSet> out;
  if (m_ == 0) return out;

  if (j == 1) {
    // non-edges between genuine vertices
    for (int u = 0; u < m_; ++u) {
      if (vertex_facets_[u].empty()) continue;
      for (int v = u + 1; v < m_; ++v) {
        if (vertex_facets_[v].empty() || adj_[u].test(v)) continue;
        out.push_back(VertexSet::of({u, v}));
      }
    }
    return out;
  }

  // Membership oracle for the subset checks at the bottom of the search.
  std::unordered_set<VertexSet, VertexSetHash> index;
  if (!face_table_enabled_)
    for_each_face([&](const VertexSet& f, int) { index.insert(f); });
  auto member = [&](const VertexSet& s) {
    return face_table_enabled_ ? is_simplex(s) : index.count(s) != 0;
  };

  // Grow ascending face prefixes of size j; candidates stay adjacent to
  // every chosen vertex since all pairs inside a minimal nonsimplex of
  // three or more vertices must be edges.
  std::function<void(const VertexSet&, const std::vector<int>&, const VertexSet&)>
      grow = [&](const VertexSet& sigma, const std::vector<int>& supp,
                 const VertexSet& cand) {
        if (sigma.count() == j) {
          cand.for_each([&](int v) {
            for (int i : supp)
              if (facets_[i].test(v)) return;  // sigma ∪ {v} is a face
            VertexSet s = sigma;
            s.set(v);
            bool minimal = true;
            sigma.for_each([&](int u) {
              if (!minimal) return;
              VertexSet t = s;
              t.reset(u);
              if (!member(t)) minimal = false;
            });
            if (minimal) out.push_back(s);
          });
          return;
        }
        cand.for_each([&](int v) {
          std::vector<int> supp2;
          for (int i : supp)
            if (facets_[i].test(v)) supp2.push_back(i);
          if (supp2.empty()) return;  // prefixes must remain faces
          VertexSet sigma2 = sigma;
          sigma2.set(v);
          VertexSet cand2 = (cand & adj_[v]) - VertexSet::full(v + 1);
          grow(sigma2, supp2, cand2);
        });
      };

  for (int u = 0; u < m_; ++u) {
    if (vertex_facets_[u].empty()) continue;
    VertexSet cand = adj_[u] - VertexSet::full(u + 1);
    grow(VertexSet::single(u), vertex_facets_[u], cand);
  }
  return out;
}

}  // namespace ucx
