#pragma once

#include <gmpxx.h>

#include <vector>

#include "ucx/fp_linalg.hpp"
#include "ucx/scomplex.hpp"

namespace ucx {

/** The two families: X lives on the nonzero vectors of F_p^n, K on the
 * lines through the origin. Faces are the linearly independent subsets. */
enum class Family { X, K };

struct BuildCaps {
  int max_vertices = 200;
  long max_facets = 10000000;
};

/** A built complex together with the coordinate labels of its vertices.
 * X-vertices are numbered by the base-p codes of their vectors (first
 * coordinate most significant); K-vertices by the codes of the canonical
 * line representatives, whose first nonzero coordinate is 1. Both
 * numberings are ascending in code, i.e. lexicographic. */
struct UniversalComplex {
  Family family = Family::X;
  int p = 0;
  int n = 0;
  SimplicialComplex complex;
  std::vector<FpVec> labels;
};

mpz_class vertex_count_X(int p, int n);
mpz_class vertex_count_K(int p, int n);

UniversalComplex build_X(int p, int n, const BuildCaps& caps = {});
UniversalComplex build_K(int p, int n, const BuildCaps& caps = {});

/** Face counts in closed form, no enumeration: a d-face of X is an
 * independent (d+1)-set of vectors, counted by products of (p^n - p^t);
 * for K each vector choice collapses by a factor p-1 per vertex. */
FVector f_vector_closed(Family fam, int p, int n);

/** Face counts of the link of any face_dim-dimensional face (all links in
 * one dimension agree). face_dim = -1 recovers the whole complex. */
FVector link_f_vector_closed(Family fam, int p, int n, int face_dim);

/** Number of top-dimensional spheres in the homotopy wedge. For the K
 * family at n = 1 the value is fixed to 0 by convention and flagged. */
struct WedgeCount {
  mpz_class value;
  bool convention_flagged = false;
};
WedgeCount wedge_count(Family fam, int p, int n);

/** Closed count of minimal j-nonsimplices of X(F_p^n); requires n >= 2 and
 * 1 <= j <= n. */
mpz_class count_minimal_nonsimplices_closed(int p, int n, int j);

/** Counts minimal j-nonsimplices by generating (face, coefficients) pairs:
 * an independent j-set plus a combination with every coefficient nonzero
 * yields a minimal nonsimplex, and each arises a fixed number of times. */
mpz_class count_minimal_nonsimplices_enumerated(const UniversalComplex& u,
                                                int j);

/** Rank over F_p of the labels of the given vertices. */
int rank_of(const UniversalComplex& u, const VertexSet& s);

/** Vertex of k carrying the line through x-vertex v. */
int line_of(const UniversalComplex& x, const UniversalComplex& k, int v);

/** Vertex of x carrying the canonical representative of k-vertex l. */
int representative_of(const UniversalComplex& x, const UniversalComplex& k,
                      int l);

/** Round-trip and simplex-preservation checks for the line and
 * representative maps between matching X and K. */
bool check_structure_maps(const UniversalComplex& x,
                          const UniversalComplex& k);

}  // namespace ucx
