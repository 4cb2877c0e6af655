#pragma once

#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int m);
int euler_phi(int m);

/// Exact element of Q(xi), xi = exp(2 pi i / m), stored as the residue of a
/// polynomial in xi modulo Phi_m (phi(m) rational coefficients).
///
/// Conductor 1 doubles as "plain rational": mixing a conductor-1 value with a
/// conductor-m value promotes it. Mixing two different conductors > 1 throws.
class CycloNumber {
 public:
  CycloNumber() : m_(1), coeffs_(1) {}
  CycloNumber(const Rational& r) : m_(1), coeffs_{r} {}  // NOLINT: implicit promotion
  CycloNumber(int value) : CycloNumber(Rational(value)) {}  // NOLINT
  CycloNumber(int m, const Rational& r);
  /// Reduces an arbitrary polynomial sum_k coeffs[k] xi^k modulo Phi_m.
  CycloNumber(int m, const std::vector<Rational>& poly);

  static CycloNumber xi_pow(int m, long exponent);

  int m() const { return m_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;
  /// True iff the value lies in Q.
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational rational_value() const;
  /// Re-expresses a conductor-1 value with conductor m (no-op otherwise).
  CycloNumber promoted(int m) const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  /// Throws std::domain_error for zero.
  CycloNumber inverse() const;
  /// Complex conjugation xi -> xi^{-1}.
  CycloNumber conj() const;

  /// Equality as field elements (conductor-1 values compare after promotion).
  bool operator==(const CycloNumber& o) const;

  /// e.g. "1/2 + 3*x - x^2" with x = xi_m; "0" for zero.
  std::string to_string() const;

 private:
  int m_;
  std::vector<Rational> coeffs_;
};

/// sum_a weights[a] xi^a.
CycloNumber root_sum(int m, const std::map<int, Rational>& weights);

inline bool is_zero(const CycloNumber& x) { return x.is_zero(); }
std::string to_string(const CycloNumber& x);
inline CycloNumber conj(const CycloNumber& x) { return x.conj(); }
inline Rational conj(const Rational& x) { return x; }

}  // namespace hurwitz
