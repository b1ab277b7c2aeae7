// Exact integer and rational types shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cybord {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const Integer& x) { return x.get_str(10); }

inline Integer make_integer(std::int64_t v) {
  Integer r;
  // mpz_class has no int64 constructor on every platform.
  r = static_cast<long>(v);
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

}  // namespace cybord
