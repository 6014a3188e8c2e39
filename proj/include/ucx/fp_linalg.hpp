#pragma once

#include <cstdint>
#include <vector>

namespace ucx {

// Coordinate vector over F_p with entries in [0, p). The first coordinate is the
// most significant one for comparisons, so lexicographic order on vectors equals
// numeric order on their base-p encodings.
using FpVec = std::vector<uint8_t>;
using FpMat = std::vector<FpVec>;

/** Multiplicative inverse of a mod p (p prime, a not divisible by p). */
uint32_t inv_mod_p(uint32_t a, uint32_t p);

/** Rank of the span of the given row vectors over F_p. */
int rank_fp(FpMat rows, int p);

/** True iff the rows are linearly independent over F_p, i.e. they span a
    direct summand of F_p^n of their own cardinality. */
bool is_unimodular_fp(const FpMat& rows, int p);

/** Base-p encoding of a vector, first coordinate most significant. */
uint64_t code_of_vec(const FpVec& v, int p);

/** Inverse of code_of_vec for vectors of length n. */
FpVec vec_of_code(uint64_t code, int n, int p);

/** Canonical representative of the line through v (v nonzero): the scalar
    multiple whose first nonzero coordinate is 1. Equals the lex-least multiple. */
FpVec canonical_line(const FpVec& v, int p);

/** All canonical line representatives in F_p^n, in lex order. */
std::vector<FpVec> enumerate_lines(int n, int p);

/** Incremental Gaussian elimination: push vectors, query the rank, undo pushes
    in LIFO order. push() leaves the state unchanged when the vector is
    dependent on the current span. */
class FpEliminator {
 public:
  FpEliminator(int n, int p) : n_(n), p_(p) {}

  bool push(const FpVec& v);
  void pop();
  int rank() const { return static_cast<int>(basis_.size()); }
  void clear() { basis_.clear(); pivot_.clear(); }

  /** True iff v lies in the current span. */
  bool in_span(const FpVec& v) const;

 private:
  FpVec reduce(FpVec v) const;

  int n_, p_;
  FpMat basis_;            // each row normalized to a leading 1 at pivot_[i]
  std::vector<int> pivot_;
};

}  // namespace ucx
