#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cgk {

// Arbitrary-precision signed integer. GMP does the heavy lifting; the helpers
// below cover the handful of operations the rest of the library needs.
using BigInt = mpz_class;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const BigInt& d, const BigInt& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline BigInt div_exact(const BigInt& a, const BigInt& d) {
  if (d == 0 || !divides(d, a)) throw std::logic_error("div_exact: inexact division");
  BigInt r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  return r;
}

inline long to_long(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("BigInt does not fit in long: " + v.get_str());
  return v.get_si();
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace cgk
