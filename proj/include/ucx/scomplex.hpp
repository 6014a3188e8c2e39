#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "ucx/vertexset.hpp"

namespace ucx {

/** Face-count vector. Entry d+1 counts the d-dimensional faces, so
 * counts[0] = 1 stands for the empty face and counts.size() == dim + 2. */
struct FVector {
  std::vector<mpz_class> counts;

  int dim() const { return static_cast<int>(counts.size()) - 2; }
  bool operator==(const FVector& o) const { return counts == o.counts; }
  bool operator!=(const FVector& o) const { return !(*this == o); }
};

struct ReindexedComplex;

/** Finite abstract simplicial complex on the ground set {0, ..., m-1},
 * stored by its facets (inclusion-maximal faces).
 *
 * The empty set is always a face; a complex with no facets is {∅}. Ground
 * set vertices that appear in no facet are not faces ("ghost" vertices,
 * which full subcomplexes may produce). Facets are kept deduplicated,
 * maximal, and sorted in the VertexSet order, so construction from any
 * generating list is canonical.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_facets(int num_vertices,
                                       std::vector<VertexSet> facets);

  /** Convenience wrapper for literal facet lists. */
  static SimplicialComplex from_vertex_lists(
      int num_vertices, const std::vector<std::vector<int>>& lists);

  /** The k-skeleton of the simplex on num_vertices vertices: every
   * (k+1)-subset is a facet. k = -1 gives {∅}. */
  static SimplicialComplex skeleton_of_simplex(int num_vertices, int k);

  int vertex_count() const { return m_; }
  const std::vector<VertexSet>& facets() const { return facets_; }

  /** Dimension of the complex; -1 for {∅}. */
  int dim() const { return dim_; }

  bool is_pure() const;

  /** Vertices that are actually faces. */
  VertexSet vertices() const;

  bool is_simplex(const VertexSet& s) const;

  /** Vertices sharing some facet with v, excluding v itself. Equivalently
   * the set of u with {u, v} a face. */
  const VertexSet& adjacency(int v) const { return adj_[v]; }

  /** Indices into facets() of the facets containing v. */
  const std::vector<int>& facets_of_vertex(int v) const {
    return vertex_facets_[v];
  }

  /** Calls fn(face, dim) for every face including the empty one (dim -1),
   * in lexicographic order. */
  void for_each_face(
      const std::function<void(const VertexSet&, int)>& fn) const;

  /** All faces grouped by cardinality: level k holds the faces of k
   * vertices, so level 0 is {∅}. */
  std::vector<std::vector<VertexSet>> faces_by_card() const;

  FVector f_vector() const;
  mpz_class euler_characteristic() const;
  mpz_class reduced_euler_characteristic() const;

  /** Full subcomplex on J: all faces contained in J. The result's ground
   * set is J itself (renumbered 0..|J|-1), so members of J that are not
   * vertices of this complex stay ghost vertices. */
  ReindexedComplex full_subcomplex(const VertexSet& j_set) const;

  /** Link of a face: all tau disjoint from sigma with tau ∪ sigma a face.
   * The result's ground set is the union of the link's facets. */
  ReindexedComplex link(const VertexSet& sigma) const;

  /** Exchange test: for every pair of faces A, B with |B| = |A| + 1 some
   * b in B \ A keeps A ∪ {b} a face. Exactly the independence complexes
   * of matroids pass. */
  bool is_matroid() const;

  /** Common facet cardinality of a pure complex. */
  int matroid_rank() const;

  /** All (j+1)-subsets that are not faces while every proper subset is,
   * in lexicographic order. Requires j >= 1. */
  std::vector<VertexSet> minimal_nonsimplices(int j) const;

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && facets_ == o.facets_;
  }

 private:
  int m_ = 0;
  int dim_ = -1;
  std::vector<VertexSet> facets_;
  std::vector<std::vector<int>> vertex_facets_;
  std::vector<VertexSet> adj_;
  // all-subsets membership table, built when the ground set and the total
  // facet subset count are small enough
  std::vector<bool> face_table_;
  bool face_table_enabled_ = false;

  void build_indexes();
};

/** A derived complex together with the renumbering back into its parent:
 * vertex_map[new] is the parent vertex the new index came from. */
struct ReindexedComplex {
  SimplicialComplex complex;
  std::vector<int> vertex_map;
};

}  // namespace ucx
