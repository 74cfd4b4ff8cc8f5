#pragma once

#include <gmpxx.h>

#include <string>

namespace dcrit {

/// Exact rational number. GMP keeps results of arithmetic canonical
/// (lowest terms, positive denominator, zero as 0/1).
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace dcrit
