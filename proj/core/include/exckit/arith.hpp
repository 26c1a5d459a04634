#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace exckit {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

/// Exact rational, kept in lowest terms with positive denominator.
using Rat = mpq_class;

/// Twist degrees and filtration degrees live in 64 bits; every quantity
/// derived from them is arbitrary precision.
using Degree = std::int64_t;

static_assert(sizeof(long) >= sizeof(Degree), "Degree must fit in a long for GMP interop");

inline Int make_int(Degree v) { return Int(static_cast<long>(v)); }

/// num/den in canonical form; throws std::invalid_argument on a zero denominator.
inline Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int factorial(unsigned long k) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

/// base^exp with the convention 0^0 = 1.
inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

/// Exact power of a 64-bit degree; stays in machine words when the result fits.
Int degree_pow(Degree base, unsigned exp);

inline std::string to_decimal(const Int& v) { return v.get_str(10); }

/// Parses a base-10 integer; throws std::invalid_argument on malformed input.
inline Int int_from_decimal(const std::string& s) { return Int(s, 10); }

}  // namespace exckit
