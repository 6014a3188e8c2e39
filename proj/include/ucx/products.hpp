#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ucx/scomplex.hpp"
#include "ucx/universal.hpp"

namespace ucx {

/** A family of disjoint vertex sets certifying a lower bound on the cup
 * length of the moment-angle complex. Each part spans a sphere inside the
 * full subcomplex on it (reduced cohomology of rank 1, concentrated in
 * degree sphere_dims[t]), and the parts' label spans intersect trivially,
 * so the full subcomplex on the union is the join of the parts and the
 * product of the per-part classes survives. */
struct JoinWitness {
  std::vector<VertexSet> parts;
  std::vector<int> sphere_dims;
};

/** Span additivity of label sets: true iff the span dimensions of the
 * parts add up to the span dimension of their union, in which case the
 * full subcomplex on the union is the join of the parts' subcomplexes.
 * A vector shared by two parts makes the sums differ, so the test is
 * false on overlapping parts. Each part must be nonempty and all labels
 * must have the same length. */
bool join_condition(int p, const std::vector<std::vector<FpVec>>& parts);

/** Largest k allowed by degrees alone: a product of k classes needs
 * k - 1 join suspensions plus the class degrees to fit under dim(K), so
 * k <= (dim K + 1)/(s + 1) where s is the smallest degree in which any
 * full subcomplex has reduced cohomology. s is read off the smallest
 * nonsimplex cardinality c as s = c - 2. A complex with no nonsimplex is
 * a simplex and yields 0. Every ground-set vertex must be a face. */
int cup_length_upper(const SimplicialComplex& k);

/** Certified lower bound: builds the coordinate witness family (antipodal
 * vector pairs {e_j, 2e_j} for X with p > 2, line triples
 * {l(e_{2j-1}), l(e_{2j}), l(e_{2j-1}+e_{2j})} otherwise), extends it
 * greedily by small minimal nonsimplices while span additivity holds, and
 * re-validates the result before returning it. */
std::pair<int, JoinWitness> cup_length_lower(const UniversalComplex& u);

/** Full check of a claimed witness: parts nonempty, pairwise disjoint,
 * each concentrated in its declared degree with rank exactly 1, span
 * additivity across parts, and rank >= 1 in degree sum(sphere_dims) + k - 1
 * of the union subcomplex. */
bool validate_join_witness(const UniversalComplex& u, const JoinWitness& w);

/** Both cup-length bounds plus the derived category interval
 * [lower, (m + dim + 1)/2]; the upper end is the half-dimension estimate
 * for the simply connected moment-angle complex. */
struct CupLengthBounds {
  int lower = 0;
  int upper = 0;
  JoinWitness witness;
  int ls_lower = 0;
  int ls_upper = 0;
  std::string note;
};

CupLengthBounds cup_length(const UniversalComplex& u);

}  // namespace ucx
