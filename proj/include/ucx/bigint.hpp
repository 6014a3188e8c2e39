#pragma once

#include <gmpxx.h>

namespace ucx {

/** Exact n!. */
mpz_class factorial(unsigned long n);

/** Binomial coefficient C(n, k); 0 whenever k < 0, n < 0 or k > n. */
mpz_class binomial(const mpz_class& n, long k);

/** base^e with an arbitrary-precision base. */
mpz_class pow_mpz(const mpz_class& base, unsigned long e);

/** Quotient a / b, asserting that b divides a exactly. */
mpz_class exact_div(const mpz_class& a, const mpz_class& b);

}  // namespace ucx
