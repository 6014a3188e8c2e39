#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ucx/scomplex.hpp"
#include "ucx/universal.hpp"
#include "ucx/vertexset.hpp"

namespace ucx {

/** One generator u_A v_B of the Koszul bicomplex of a complex: A and B are
 * disjoint vertex sets and B is a face. The cell sits in bidegree
 * (-|A|, 2(|A|+|B|)), and the differential preserves the support A|B. */
struct KoszulCell {
  VertexSet a, b;

  VertexSet support() const { return a | b; }
  bool operator==(const KoszulCell& o) const { return a == o.a && b == o.b; }
  bool operator!=(const KoszulCell& o) const { return !(*this == o); }
};

struct KoszulCellHash {
  std::size_t operator()(const KoszulCell& c) const {
    std::size_t h = VertexSetHash{}(c.a);
    std::size_t g = VertexSetHash{}(c.b);
    return h ^ (g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
  }
};

/** Bigraded Betti numbers. Keys are (i, j) for the entry in bidegree
 * (-i, 2j); only nonzero entries are stored, so tables produced by
 * different methods compare equal exactly when they agree everywhere. */
struct BettiTable {
  std::string method;
  std::map<std::pair<int, int>, mpz_class> entries;

  /** Entry at bidegree (-i, 2j); zero when absent. */
  mpz_class at(int i, int j) const;

  /** Sum of all entries. */
  mpz_class total() const;

  struct Extreme {
    int i = -1, j = -1;
    mpz_class value;
  };
  /** Largest entry; ties resolved to the smallest key. */
  Extreme max_entry() const;

  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  bool operator!=(const BettiTable& o) const { return !(*this == o); }
};

/** All cells with support exactly s, one per face of k inside s, in
 * ascending face order. */
std::vector<KoszulCell> cells_for_support(const SimplicialComplex& k,
                                          const VertexSet& s);

/** Differential of a cell: each vertex of A whose transfer into B lands on
 * a face contributes the transferred cell with sign (-1)^pos, pos being
 * the 1-based position of the vertex in ascending A. */
std::vector<std::pair<KoszulCell, int>> differential(
    const SimplicialComplex& k, const KoszulCell& c);

/** The matching move available at a cell. A vertex y of B is witnessed
 * when some smaller x in A keeps B - y + x a face. The least unwitnessed
 * vertex of B, if any, moves into A; otherwise the least vertex of A that
 * extends B to a face moves into B; cells with neither move are critical.
 * At most one of the two sets is nonempty, and it is a singleton. */
struct MorseSets {
  VertexSet into_a;
  VertexSet into_b;
};
MorseSets morse_sets(const SimplicialComplex& k, const KoszulCell& c);

enum class CellKind { Critical, MoveToA, MoveToB };
struct CellClass {
  CellKind kind = CellKind::Critical;
  int vertex = -1;
};
/** Early-exit equivalent of morse_sets. */
CellClass classify_cell(const SimplicialComplex& k, const KoszulCell& c);

/** Audits the matching cell by cell: moves are at most singletons, the
 * move is an involution between partner cells, the matched differential
 * coefficient is a unit, and the flow graph of each support is acyclic. */
bool verify_matching(const SimplicialComplex& k);

/** Betti numbers by counting critical cells of the matching. Requires a
 * matroid, where the matching is perfect. Cells stream by face, split
 * across the given number of threads with a deterministic merge. */
BettiTable betti_via_morse(const SimplicialComplex& k, int threads = 1);

/** Betti numbers from reduced Euler characteristics of full subcomplexes,
 * using that a matroid's subcomplexes have their reduced cohomology
 * concentrated in degree rank - 1. Requires a matroid. */
BettiTable betti_via_hochster_euler(const SimplicialComplex& k);

/** Betti numbers from rational cohomology of every full subcomplex. Works
 * for arbitrary complexes; capped at 16 vertices. */
BettiTable betti_via_cohomology(const SimplicialComplex& k);

/** Betti numbers of X(F_p^n) or K(F_p^n) in closed form: supports of rank
 * l split over the l-dimensional subspaces, and the count for spanning
 * supports satisfies a rank recursion with Gaussian binomial weights. */
BettiTable betti_recursion(Family fam, int p, int n);

/** Number of Koszul cells in bidegree (-i, 2j). */
mpz_class generator_count(const SimplicialComplex& k, int i, int j);

/** Integral cohomology sweep over every full subcomplex, stopping at the
 * first one with torsion. */
struct TorsionReport {
  bool torsion_free = true;
  VertexSet witness;
  std::vector<mpz_class> factors;
};
TorsionReport torsion_check(const SimplicialComplex& k,
                            int max_vertices = 16);

}  // namespace ucx
