#pragma once

#include <gmpxx.h>

#include <string>

namespace bslab {

// Exact arbitrary-precision arithmetic. Coefficients are never floats.
using Integer = mpz_class;
using Rational = mpq_class;

// Reduced "p" or "p/q" with q > 1.
inline std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace bslab
