#pragma once

#include <gmpxx.h>

namespace ucx {

/** Product (p-1)(p^2-1)...(p^k-1); the empty product (k = 0) is 1. */
mpz_class q_bracket_product(unsigned k, unsigned p);

/** Gaussian binomial [n over l]_p: the number of l-dimensional subspaces of
    an n-dimensional space over the field with p elements. Zero when l > n. */
mpz_class gaussian_binomial(unsigned n, unsigned l, unsigned p);

}  // namespace ucx
