#include "ucx/qbinom.hpp"

#include "ucx/bigint.hpp"

namespace ucx {

mpz_class q_bracket_product(unsigned k, unsigned p) {
  mpz_class r = 1;
  mpz_class pw = 1;
  for (unsigned i = 1; i <= k; ++i) {
    pw *= p;
    r *= pw - 1;
  }
  return r;
}

mpz_class gaussian_binomial(unsigned n, unsigned l, unsigned p) {
  if (l > n) return 0;
  return exact_div(q_bracket_product(n, p),
                   q_bracket_product(l, p) * q_bracket_product(n - l, p));
}

}  // namespace ucx
