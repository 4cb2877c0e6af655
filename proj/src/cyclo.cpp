#include "hurwitz/cyclo.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hurwitz {

namespace {

struct Field {
  int m;
  int phi;
  std::vector<Integer> cyclo;
  // reduce_table[k] = x^k mod Phi_m, k < 2m.
  std::vector<std::vector<Rational>> reduce_table;
};

// Exact division of integer polynomials; the divisor is monic.
std::vector<Integer> divide_monic(std::vector<Integer> num, const std::vector<Integer>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<Integer> q(num.size() - dn);
  for (std::size_t k = num.size(); k-- > dn;) {
    Integer c = num[k];
    q[k - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

std::vector<Integer> compute_cyclotomic(int m) {
  std::vector<Integer> poly(static_cast<std::size_t>(m) + 1);
  poly[0] = -1;
  poly[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  return poly;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

std::unordered_map<int, std::unique_ptr<std::vector<Integer>>>& poly_cache() {
  static std::unordered_map<int, std::unique_ptr<std::vector<Integer>>> cache;
  return cache;
}

const Field& field(int m) {
  static std::unordered_map<int, std::unique_ptr<Field>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find(m);
    if (it != cache.end()) return *it->second;
  }
  auto f = std::make_unique<Field>();
  f->m = m;
  f->cyclo = cyclotomic_polynomial(m);
  f->phi = static_cast<int>(f->cyclo.size()) - 1;
  const auto phi = static_cast<std::size_t>(f->phi);
  std::vector<Rational> cur(phi);
  cur[0] = 1;
  for (int k = 0; k < 2 * m; ++k) {
    f->reduce_table.push_back(cur);
    // multiply by x, then subtract the leading coefficient times Phi_m.
    Rational top = cur[phi - 1];
    for (std::size_t j = phi - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t j = 0; j < phi; ++j) cur[j] -= top * Rational(f->cyclo[j]);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = cache.emplace(m, std::move(f));
  return *it->second;
}

std::vector<Rational> reduce(const Field& f, const std::vector<Rational>& poly) {
  std::vector<Rational> out(static_cast<std::size_t>(f.phi));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (sgn(poly[k]) == 0) continue;
    const auto& row = f.reduce_table[k % static_cast<std::size_t>(f.m)];
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (sgn(row[j]) != 0) out[j] += poly[k] * row[j];
    }
  }
  return out;
}

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int m) {
  check_m(m);
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = poly_cache().find(m);
    if (it != poly_cache().end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<Integer>>(compute_cyclotomic(m));
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto [it, inserted] = poly_cache().emplace(m, std::move(poly));
  return *it->second;
}

int euler_phi(int m) { return static_cast<int>(cyclotomic_polynomial(m).size()) - 1; }

CycloNumber::CycloNumber(int m, const Rational& r) : m_(m) {
  check_m(m);
  coeffs_.assign(static_cast<std::size_t>(euler_phi(m)), Rational(0));
  coeffs_[0] = r;
}

CycloNumber::CycloNumber(int m, const std::vector<Rational>& poly) : m_(m) {
  check_m(m);
  coeffs_ = reduce(field(m), poly);
}

CycloNumber CycloNumber::xi_pow(int m, long exponent) {
  check_m(m);
  long e = exponent % m;
  if (e < 0) e += m;
  CycloNumber out;
  out.m_ = m;
  out.coeffs_ = field(m).reduce_table[static_cast<std::size_t>(e)];
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    if (sgn(coeffs_[j]) != 0) return false;
  }
  return true;
}

Rational CycloNumber::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

CycloNumber CycloNumber::promoted(int m) const {
  if (m_ == m) return *this;
  if (m_ != 1) throw std::invalid_argument("cannot mix cyclotomic numbers of different conductors");
  return CycloNumber(m, coeffs_[0]);
}

namespace {

int common_conductor(int a, int b) {
  if (a == b || b == 1) return a;
  if (a == 1) return b;
  throw std::invalid_argument("cannot mix cyclotomic numbers of different conductors");
}

}  // namespace

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  const int m = common_conductor(m_, o.m_);
  if (m_ != m) *this = promoted(m);
  const CycloNumber b = o.promoted(m);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += b.coeffs_[j];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  const int m = common_conductor(m_, o.m_);
  if (o.m_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    return *this;
  }
  if (m_ == 1) {
    const Rational s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  std::vector<Rational> prod(2 * coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (sgn(o.coeffs_[j]) != 0) prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  m_ = m;
  coeffs_ = reduce(field(m), prod);
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (m_ == 1 || is_rational()) return CycloNumber(m_, Rational(1) / coeffs_[0]);
  // Solve (multiplication-by-this matrix) * c = e_0 by Gauss-Jordan over Q.
  const std::size_t d = coeffs_.size();
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (std::size_t j = 0; j < d; ++j) {
    CycloNumber col = *this * CycloNumber::xi_pow(m_, static_cast<long>(j));
    for (std::size_t i = 0; i < d; ++i) a[i][j] = col.coeffs_[i];
  }
  a[0][d] = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(a[piv][col]) == 0) ++piv;
    if (piv == d) throw std::logic_error("singular multiplication matrix in cyclotomic inverse");
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= d; ++c) a[r][c] -= f * a[col][c];
    }
  }
  CycloNumber out;
  out.m_ = m_;
  out.coeffs_.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.coeffs_[i] = a[i][d];
  return out;
}

CycloNumber CycloNumber::conj() const {
  if (m_ <= 2) return *this;
  std::vector<Rational> poly(static_cast<std::size_t>(m_));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    poly[(static_cast<std::size_t>(m_) - j) % static_cast<std::size_t>(m_)] += coeffs_[j];
  }
  return CycloNumber(m_, poly);
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  const int m = common_conductor(m_, o.m_);
  return promoted(m).coeffs_ == o.promoted(m).coeffs_;
}

std::string CycloNumber::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (j == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += "x";
    if (j > 1) out += "^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

CycloNumber root_sum(int m, const std::map<int, Rational>& weights) {
  check_m(m);
  std::vector<Rational> poly(static_cast<std::size_t>(m));
  for (const auto& [a, w] : weights) {
    int e = a % m;
    if (e < 0) e += m;
    poly[static_cast<std::size_t>(e)] += w;
  }
  return CycloNumber(m, poly);
}

std::string to_string(const CycloNumber& x) { return x.to_string(); }

}  // namespace hurwitz
