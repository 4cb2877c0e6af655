#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hurwitz {

/// Exact rationals. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// num/den in canonical form. Prefer this to the two-argument mpq_class
/// constructor, which leaves the fraction unreduced.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "a", "-a" or "a/b" in decimal. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Integer factorial(int n);
Integer ipow(const Integer& base, int exponent);
Rational rpow(const Rational& base, int exponent);

}  // namespace hurwitz
