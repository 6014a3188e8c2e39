#include "ucx/tor.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

#include "ucx/bigint.hpp"
#include "ucx/cohomology.hpp"
#include "ucx/errors.hpp"
#include "ucx/qbinom.hpp"

namespace ucx {

namespace {

// y in B is witnessed when a smaller x in A keeps B - y + x a face
bool witnessed(const SimplicialComplex& k, const VertexSet& a,
               const VertexSet& b, int y) {
  VertexSet base = b;
  base.reset(y);
  VertexSet cand = a & VertexSet::full(y);
  bool hit = false;
  cand.for_each([&](int x) {
    if (hit) return;
    VertexSet q = base;
    q.set(x);
    if (k.is_simplex(q)) hit = true;
  });
  return hit;
}

// number of cells (one per face and disjoint A) on m vertices
mpz_class cell_count(const SimplicialComplex& k) {
  FVector fv = k.f_vector();
  mpz_class cells = 0;
  for (std::size_t c = 0; c < fv.counts.size(); ++c)
    cells += fv.counts[c] *
             pow_mpz(2, static_cast<unsigned long>(k.vertex_count()) - c);
  return cells;
}

// greedy independent subset size; equals the rank of s in a matroid
int greedy_rank(const SimplicialComplex& k, const VertexSet& s) {
  VertexSet ind;
  int rank = 0;
  s.for_each([&](int v) {
    VertexSet t = ind;
    t.set(v);
    if (k.is_simplex(t)) {
      ind = t;
      ++rank;
    }
  });
  return rank;
}

}  // namespace

mpz_class BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? mpz_class(0) : it->second;
}

mpz_class BettiTable::total() const {
  mpz_class s = 0;
  for (const auto& [key, value] : entries) s += value;
  return s;
}

BettiTable::Extreme BettiTable::max_entry() const {
  Extreme e;
  for (const auto& [key, value] : entries) {
    if (e.i < 0 || value > e.value) {
      e.i = key.first;
      e.j = key.second;
      e.value = value;
    }
  }
  return e;
}

std::vector<KoszulCell> cells_for_support(const SimplicialComplex& k,
                                          const VertexSet& s) {
  ReindexedComplex sub = k.full_subcomplex(s);
  std::vector<KoszulCell> out;
  sub.complex.for_each_face([&](const VertexSet& f, int) {
    VertexSet b;
    f.for_each([&](int v) { b.set(sub.vertex_map[v]); });
    out.push_back({s - b, b});
  });
  return out;
}

std::vector<std::pair<KoszulCell, int>> differential(
    const SimplicialComplex& k, const KoszulCell& c) {
  std::vector<std::pair<KoszulCell, int>> out;
  int pos = 0;
  for (int v : c.a.to_vector()) {
    ++pos;
    VertexSet nb = c.b;
    nb.set(v);
    if (!k.is_simplex(nb)) continue;
    VertexSet na = c.a;
    na.reset(v);
    out.push_back({KoszulCell{na, nb}, (pos % 2) ? -1 : 1});
  }
  return out;
}

MorseSets morse_sets(const SimplicialComplex& k, const KoszulCell& c) {
  MorseSets s;
  int bstar = -1;
  c.b.for_each([&](int y) {
    if (bstar < 0 && !witnessed(k, c.a, c.b, y)) bstar = y;
  });
  if (bstar >= 0) {
    s.into_a.set(bstar);
  } else {
    int astar = -1;
    c.a.for_each([&](int x) {
      if (astar >= 0) return;
      VertexSet q = c.b;
      q.set(x);
      if (k.is_simplex(q)) astar = x;
    });
    if (astar >= 0) s.into_b.set(astar);
  }
  if (s.into_a.count() + s.into_b.count() > 1)
    throw std::logic_error("morse_sets: move is not a singleton");
  return s;
}

CellClass classify_cell(const SimplicialComplex& k, const KoszulCell& c) {
  int found = -1;
  c.b.for_each([&](int y) {
    if (found < 0 && !witnessed(k, c.a, c.b, y)) found = y;
  });
  if (found >= 0) return {CellKind::MoveToA, found};
  c.a.for_each([&](int x) {
    if (found >= 0) return;
    VertexSet q = c.b;
    q.set(x);
    if (k.is_simplex(q)) found = x;
  });
  if (found >= 0) return {CellKind::MoveToB, found};
  return {CellKind::Critical, -1};
}

bool verify_matching(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  if (m > 20) throw ResourceError("verify_matching: at most 20 vertices");
  if (cell_count(k) > 200000000)
    throw ResourceError("verify_matching: too many cells");

  for (std::uint32_t smask = 0; smask < (1u << m); ++smask) {
    const VertexSet s = VertexSet::from_word(smask);
    const std::vector<KoszulCell> cells = cells_for_support(k, s);
    std::unordered_map<KoszulCell, int, KoszulCellHash> index;
    for (std::size_t i = 0; i < cells.size(); ++i)
      index.emplace(cells[i], static_cast<int>(i));

    std::vector<CellClass> cls(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const MorseSets ms = morse_sets(k, cells[i]);
      cls[i] = classify_cell(k, cells[i]);
      switch (cls[i].kind) {
        case CellKind::Critical:
          if (!ms.into_a.empty() || !ms.into_b.empty()) return false;
          break;
        case CellKind::MoveToA:
          if (ms.into_a != VertexSet::single(cls[i].vertex)) return false;
          if (!ms.into_b.empty()) return false;
          break;
        case CellKind::MoveToB:
          if (ms.into_b != VertexSet::single(cls[i].vertex)) return false;
          if (!ms.into_a.empty()) return false;
          break;
      }
    }

    // the move is an involution between partner cells
    std::vector<int> partner(cells.size(), -1);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cls[i].kind == CellKind::Critical) continue;
      const int v = cls[i].vertex;
      KoszulCell pc = cells[i];
      if (cls[i].kind == CellKind::MoveToA) {
        pc.a.set(v);
        pc.b.reset(v);
      } else {
        pc.a.reset(v);
        pc.b.set(v);
      }
      auto it = index.find(pc);
      if (it == index.end()) return false;
      partner[i] = it->second;
      const CellClass& pcls = cls[static_cast<std::size_t>(it->second)];
      if (pcls.kind == cls[i].kind || pcls.kind == CellKind::Critical)
        return false;
      if (pcls.vertex != v) return false;
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (partner[i] >= 0 &&
          partner[static_cast<std::size_t>(partner[i])] !=
              static_cast<int>(i))
        return false;

    // pairs keyed by their upper cell (the one whose move lands in B);
    // the matched differential coefficient must be a unit, and the flow
    // from uppers to lowers of other pairs must be acyclic
    std::vector<int> pair_id(cells.size(), -1);
    std::vector<int> uppers;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cls[i].kind == CellKind::MoveToB) {
        pair_id[i] = static_cast<int>(uppers.size());
        uppers.push_back(static_cast<int>(i));
      }
    std::vector<std::vector<int>> edges(uppers.size());
    for (std::size_t pi = 0; pi < uppers.size(); ++pi) {
      const int u = uppers[pi];
      bool matched_unit = false;
      for (const auto& [d, coef] : differential(k, cells[u])) {
        auto it = index.find(d);
        if (it == index.end()) return false;
        const int di = it->second;
        if (di == partner[u]) {
          matched_unit = coef == 1 || coef == -1;
          continue;
        }
        if (cls[di].kind == CellKind::MoveToA)
          edges[pi].push_back(pair_id[static_cast<std::size_t>(partner[di])]);
      }
      if (!matched_unit) return false;
    }

    std::vector<int> color(uppers.size(), 0);
    std::vector<std::pair<int, std::size_t>> stack;
    for (std::size_t root = 0; root < uppers.size(); ++root) {
      if (color[root] != 0) continue;
      color[root] = 1;
      stack.push_back({static_cast<int>(root), 0});
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < edges[static_cast<std::size_t>(node)].size()) {
          const int to = edges[static_cast<std::size_t>(node)][next++];
          if (color[to] == 1) return false;  // directed cycle
          if (color[to] == 0) {
            color[to] = 1;
            stack.push_back({to, 0});
          }
        } else {
          color[node] = 2;
          stack.pop_back();
        }
      }
    }
  }
  return true;
}

BettiTable betti_via_morse(const SimplicialComplex& k, int threads) {
  const int m = k.vertex_count();
  if (m > 64) throw PreconditionError("betti_via_morse: at most 64 vertices");
  if (!k.is_matroid())
    throw PreconditionError("betti_via_morse: the matching needs a matroid");
  if (cell_count(k) > 2000000000)
    throw ResourceError("betti_via_morse: too many cells");

  std::vector<VertexSet> faces;
  k.for_each_face([&](const VertexSet& f, int) { faces.push_back(f); });

  threads = std::clamp(threads, 1, 64);
  std::vector<std::map<std::pair<int, int>, long long>> local(
      static_cast<std::size_t>(threads));
  std::atomic<std::size_t> next{0};

  auto worker = [&](int tid) {
    auto& out = local[static_cast<std::size_t>(tid)];
    for (;;) {
      const std::size_t fi = next.fetch_add(1);
      if (fi >= faces.size()) break;
      const VertexSet& b = faces[fi];
      const int bc = static_cast<int>(b.count());
      std::vector<int> open;
      open.reserve(static_cast<std::size_t>(m - bc));
      for (int v = 0; v < m; ++v)
        if (!b.test(v)) open.push_back(v);
      const std::uint64_t lim = 1ull << open.size();
      for (std::uint64_t w = 0; w < lim; ++w) {
        VertexSet a;
        for (std::uint64_t t = w; t; t &= t - 1)
          a.set(open[static_cast<std::size_t>(std::countr_zero(t))]);
        if (classify_cell(k, {a, b}).kind != CellKind::Critical) continue;
        // critical cells of a matroid land at |B| = rank of the support
        if (greedy_rank(k, a | b) != bc)
          throw std::logic_error("betti_via_morse: critical off the rank row");
        ++out[{static_cast<int>(a.count()), static_cast<int>(a.count()) + bc}];
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          worker(t);
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  BettiTable table;
  table.method = "morse";
  for (const auto& part : local)
    for (const auto& [key, count] : part)
      table.entries[key] += static_cast<long>(count);
  return table;
}

BettiTable betti_via_hochster_euler(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  if (m > 24)
    throw ResourceError("betti_via_hochster_euler: at most 24 vertices");
  if (!k.is_matroid())
    throw PreconditionError("betti_via_hochster_euler: needs a matroid");
  if (cell_count(k) > 2000000000)
    throw ResourceError("betti_via_hochster_euler: too many subsets");

  // reduced Euler characteristic and largest face size per vertex subset
  std::vector<std::int32_t> chi(std::size_t(1) << m, 0);
  std::vector<std::int8_t> top(std::size_t(1) << m, 0);
  k.for_each_face([&](const VertexSet& f, int) {
    const int fc = static_cast<int>(f.count());
    const std::int32_t sign = (fc % 2) ? 1 : -1;
    const std::uint32_t fmask = static_cast<std::uint32_t>(f.low_word());
    std::vector<int> open;
    for (int v = 0; v < m; ++v)
      if (!f.test(v)) open.push_back(v);
    const std::uint64_t lim = 1ull << open.size();
    for (std::uint64_t w = 0; w < lim; ++w) {
      std::uint32_t jmask = fmask;
      for (std::uint64_t t = w; t; t &= t - 1)
        jmask |= 1u << open[static_cast<std::size_t>(std::countr_zero(t))];
      chi[jmask] += sign;
      if (fc > top[jmask]) top[jmask] = static_cast<std::int8_t>(fc);
    }
  });

  BettiTable table;
  table.method = "hochster-euler";
  std::map<std::pair<int, int>, long long> acc;
  for (std::size_t jm = 0; jm < chi.size(); ++jm) {
    const int j = std::popcount(jm);
    const int r = top[jm];
    // cohomology of a matroid restriction concentrates in degree r - 1
    const long long contrib = ((r % 2) ? 1ll : -1ll) * chi[jm];
    if (contrib < 0)
      throw std::logic_error(
          "betti_via_hochster_euler: negative subset contribution");
    if (contrib) acc[{j - r, j}] += contrib;
  }
  for (const auto& [key, value] : acc)
    table.entries[key] = static_cast<long>(value);
  return table;
}

BettiTable betti_via_cohomology(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  if (m > 16)
    throw ResourceError("betti_via_cohomology: at most 16 vertices");
  BettiTable table;
  table.method = "cohomology";
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ReindexedComplex sub = k.full_subcomplex(VertexSet::from_word(mask));
    const CohomologyResult coh =
        reduced_cohomology(sub.complex, Coefficients::Rationals);
    const int j = std::popcount(mask);
    for (int d = -1; d <= j; ++d) {
      const int r = coh.rank(d);
      if (r) table.entries[{j - d - 1, j}] += r;
    }
  }
  return table;
}

namespace {

mpz_class family_vertices(Family fam, int p, int l) {
  if (l == 0) return 0;
  return fam == Family::X ? vertex_count_X(p, l) : vertex_count_K(p, l);
}

// spanning supports of size j inside an l-dimensional space, counted with
// the rank-concentrated cohomology weight
struct DiagonalCtx {
  Family fam;
  int p;
  std::map<std::pair<int, int>, mpz_class> memo;
  std::map<int, FVector> fvs;

  const FVector& fv(int l) {
    auto it = fvs.find(l);
    if (it == fvs.end()) it = fvs.emplace(l, f_vector_closed(fam, p, l)).first;
    return it->second;
  }

  mpz_class diag(int l, int j) {
    if (l == 0) return j == 0 ? 1 : 0;
    if (j < l) return 0;  // too few vertices to span
    const auto key = std::make_pair(l, j);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const mpz_class ml = family_vertices(fam, p, l);
    const FVector& f = fv(l);
    mpz_class acc = 0;
    // alternating count of (face, size-j superset) incidences
    for (int c = 0; c <= l && c <= j; ++c) {
      const mpz_class g = f.counts[static_cast<std::size_t>(c)] *
                          binomial(ml - c, j - c);
      if ((l - c) % 2)
        acc -= g;
      else
        acc += g;
    }
    // remove the supports of smaller rank, grouped by their span
    for (int t = 0; t < l; ++t) {
      const mpz_class s =
          gaussian_binomial(static_cast<unsigned>(l), static_cast<unsigned>(t),
                            static_cast<unsigned>(p)) *
          diag(t, j);
      if ((l - t) % 2)
        acc += s;
      else
        acc -= s;
    }
    memo.emplace(key, acc);
    return acc;
  }
};

}  // namespace

BettiTable betti_recursion(Family fam, int p, int n) {
  const mpz_class m_top = fam == Family::X ? vertex_count_X(p, n)
                                           : vertex_count_K(p, n);
  if (m_top > 65536) throw ResourceError("betti_recursion: table too wide");

  DiagonalCtx ctx{fam, p, {}, {}};
  BettiTable table;
  table.method = "recursion";
  table.entries[{0, 0}] = 1;
  for (int l = 1; l <= n; ++l) {
    const long ml = family_vertices(fam, p, l).get_si();
    const mpz_class subspaces = gaussian_binomial(
        static_cast<unsigned>(n), static_cast<unsigned>(l),
        static_cast<unsigned>(p));
    for (long j = l; j <= ml; ++j) {
      const mpz_class v = subspaces * ctx.diag(l, static_cast<int>(j));
      if (v < 0) throw std::logic_error("betti_recursion: negative entry");
      if (v != 0)
        table.entries[{static_cast<int>(j) - l, static_cast<int>(j)}] = v;
    }
  }
  return table;
}

mpz_class generator_count(const SimplicialComplex& k, int i, int j) {
  const int bsize = j - i;
  if (i < 0 || bsize < 0) return 0;
  const FVector fv = k.f_vector();
  if (bsize >= static_cast<int>(fv.counts.size())) return 0;
  return fv.counts[static_cast<std::size_t>(bsize)] *
         binomial(mpz_class(k.vertex_count() - bsize), i);
}

TorsionReport torsion_check(const SimplicialComplex& k, int max_vertices) {
  const int m = k.vertex_count();
  if (m > max_vertices || m > 20)
    throw ResourceError("torsion_check: vertex cap exceeded");
  TorsionReport rep;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    ReindexedComplex sub = k.full_subcomplex(VertexSet::from_word(mask));
    const CohomologyResult coh =
        reduced_cohomology(sub.complex, Coefficients::Integers);
    if (coh.torsion_free()) continue;
    rep.torsion_free = false;
    rep.witness = VertexSet::from_word(mask);
    for (const auto& degree : coh.torsion)
      for (const auto& factor : degree) rep.factors.push_back(factor);
    return rep;
  }
  return rep;
}

}  // namespace ucx
