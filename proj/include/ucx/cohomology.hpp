#pragma once

#include <gmpxx.h>

#include <vector>

#include "ucx/scomplex.hpp"

namespace ucx {

enum class Coefficients { Rationals, Integers, ModP };

/** Reduced cohomology of a finite simplicial complex. Degrees run from -1
 * (the empty face generates the augmentation) through dim; entry d+1 of
 * each vector refers to degree d. The complex {∅} has rank 1 in degree -1.
 */
struct CohomologyResult {
  std::vector<int> reduced_rank;
  // invariant factors > 1 of the torsion subgroup per degree; filled only
  // for integer coefficients
  std::vector<std::vector<mpz_class>> torsion;

  int rank(int d) const {
    int i = d + 1;
    return (i >= 0 && i < static_cast<int>(reduced_rank.size()))
               ? reduced_rank[i]
               : 0;
  }

  bool torsion_free() const {
    for (const auto& t : torsion)
      if (!t.empty()) return false;
    return true;
  }
};

/** Computes reduced cohomology from the augmented cochain complex. With
 * ModP the prime p must be given; the other coefficient choices ignore it.
 * Integer coefficients report free ranks plus the invariant factors of
 * each torsion subgroup. */
CohomologyResult reduced_cohomology(const SimplicialComplex& k,
                                    Coefficients coeff, int p = 0);

}  // namespace ucx
