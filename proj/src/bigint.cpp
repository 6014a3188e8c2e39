#include "ucx/bigint.hpp"

#include <stdexcept>

namespace ucx {

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(const mpz_class& n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
  if (b == 0 || a % b != 0) throw std::invalid_argument("exact_div: not divisible");
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace ucx
