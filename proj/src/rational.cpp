#include "hurwitz/rational.hpp"

#include <stdexcept>

namespace hurwitz {

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Integer ipow(const Integer& base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative integer exponent");
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

Rational rpow(const Rational& base, int exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    return rpow(Rational(1) / base, -exponent);
  }
  Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

}  // namespace hurwitz
