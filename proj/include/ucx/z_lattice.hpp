#pragma once

#include <gmpxx.h>

#include <vector>

namespace ucx {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

/** Determinant of a square integer matrix by fraction-free elimination. */
mpz_class det_bareiss(ZMat a);

/** True iff the k rows span a rank-k direct summand of Z^n; equivalently the
    gcd of all k-by-k minors is 1. Short-circuits once the running gcd is 1. */
bool is_unimodular_z(const ZMat& rows);

/** Extends unimodular rows (k of them, in Z^n) to an n-by-n matrix of
    determinant +-1 whose first k rows are exactly the input.
    Throws std::invalid_argument when the input is not unimodular. */
ZMat extend_to_basis_z(const ZMat& rows);

struct SmithResult {
  std::vector<mpz_class> divisors;  // positive, each dividing the next
  int rank = 0;                     // number of nonzero divisors
};

/** Smith normal form invariant factors of an integer matrix. */
SmithResult smith_normal_form(ZMat a);

}  // namespace ucx
