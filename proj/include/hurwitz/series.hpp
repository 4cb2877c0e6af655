#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hurwitz/polyring.hpp"

namespace hurwitz {

/// Truncated power series in formal parameters beta_0..beta_{r-1} with
/// polynomial coefficients: sum_o beta^o P_o(x). Exponent o_i is kept only up
/// to orders[i]; polynomial terms only up to weighted degree max_degree.
template <class F>
class FormalSeries {
 public:
  using Exponent = std::vector<int>;

  FormalSeries() = default;
  FormalSeries(int m, Basis basis, std::vector<int> orders, int max_degree)
      : m_(m), basis_(basis), orders_(std::move(orders)), max_degree_(max_degree) {}

  int colors() const { return m_; }
  Basis basis() const { return basis_; }
  const std::vector<int>& orders() const { return orders_; }
  int max_degree() const { return max_degree_; }
  const std::map<Exponent, GradedPoly<F>>& coeffs() const { return coeffs_; }

  bool in_range(const Exponent& o) const {
    if (o.size() != orders_.size()) throw std::invalid_argument("beta exponent has wrong length");
    for (std::size_t i = 0; i < o.size(); ++i) {
      if (o[i] < 0 || o[i] > orders_[i]) return false;
    }
    return true;
  }

  /// Adds beta^o * poly, dropping whatever lies beyond the truncation.
  void add(const Exponent& o, const GradedPoly<F>& poly) {
    if (!in_range(o)) return;
    auto it = coeffs_.find(o);
    if (it == coeffs_.end()) it = coeffs_.emplace(o, GradedPoly<F>(m_, basis_)).first;
    it->second += poly.truncated(max_degree_);
    if (it->second.empty()) coeffs_.erase(it);
  }

  GradedPoly<F> coeff(const Exponent& o) const {
    auto it = coeffs_.find(o);
    return it == coeffs_.end() ? GradedPoly<F>(m_, basis_) : it->second;
  }

  bool is_zero() const { return coeffs_.empty(); }

  FormalSeries& operator+=(const FormalSeries& o) {
    check(o);
    for (const auto& [e, p] : o.coeffs_) add(e, p);
    return *this;
  }
  FormalSeries& operator-=(const FormalSeries& o) {
    check(o);
    for (const auto& [e, p] : o.coeffs_) add(e, -p);
    return *this;
  }
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) { return a += b; }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) { return a -= b; }

  FormalSeries scaled(const F& s) const {
    FormalSeries out = empty_like();
    for (const auto& [e, p] : coeffs_) out.add(e, p.scaled(s));
    return out;
  }

  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    a.check(b);
    FormalSeries out = a.empty_like();
    for (const auto& [ea, pa] : a.coeffs_) {
      for (const auto& [eb, pb] : b.coeffs_) {
        Exponent e(ea.size());
        bool ok = true;
        for (std::size_t i = 0; i < e.size(); ++i) {
          e[i] = ea[i] + eb[i];
          ok = ok && e[i] <= a.orders_[i];
        }
        if (ok) out.add(e, pa.mul_truncated(pb, a.max_degree_));
      }
    }
    return out;
  }

  bool operator==(const FormalSeries& o) const {
    return m_ == o.m_ && basis_ == o.basis_ && orders_ == o.orders_ && max_degree_ == o.max_degree_ &&
           coeffs_ == o.coeffs_;
  }

  /// Keeps the polynomial terms of weighted degree exactly d.
  FormalSeries degree_component(int d) const {
    FormalSeries out = empty_like();
    for (const auto& [e, p] : coeffs_) out.add(e, p.homogeneous_component(d));
    return out;
  }

  FormalSeries truncated(int max_degree) const {
    FormalSeries out(m_, basis_, orders_, std::min(max_degree, max_degree_));
    for (const auto& [e, p] : coeffs_) out.add(e, p);
    return out;
  }

  /// Applies a coefficientwise polynomial map (e.g. a derivative).
  FormalSeries map(const std::function<GradedPoly<F>(const GradedPoly<F>&)>& fn) const {
    FormalSeries out = empty_like();
    for (const auto& [e, p] : coeffs_) out.add(e, fn(p));
    return out;
  }

  /// Logarithm. Requires the degree-0 part to be exactly 1. Uses the grading
  /// by polynomial degree: n F_n = n H_n - sum_{j<n} j F_j H_{n-j}.
  FormalSeries log() const {
    const FormalSeries h0 = degree_component(0);
    if (!(h0 == one())) throw std::domain_error("log needs constant term 1");
    std::vector<FormalSeries> h, f;
    for (int d = 0; d <= max_degree_; ++d) h.push_back(degree_component(d));
    f.push_back(empty_like());
    FormalSeries out = empty_like();
    for (int n = 1; n <= max_degree_; ++n) {
      FormalSeries acc = h[static_cast<std::size_t>(n)];
      for (int j = 1; j < n; ++j) {
        acc -= (f[static_cast<std::size_t>(j)] * h[static_cast<std::size_t>(n - j)]).scaled(F(ratio(j, n)));
      }
      f.push_back(acc.degree_component(n));
      out += f.back();
    }
    return out;
  }

  /// Exponential. Requires the degree-0 part to vanish: n E_n = sum_{j=1}^n j F_j E_{n-j}.
  FormalSeries exp() const {
    if (!degree_component(0).is_zero()) throw std::domain_error("exp needs vanishing degree-0 part");
    std::vector<FormalSeries> f, e;
    for (int d = 0; d <= max_degree_; ++d) f.push_back(degree_component(d));
    e.push_back(one());
    FormalSeries out = one();
    for (int n = 1; n <= max_degree_; ++n) {
      FormalSeries acc = empty_like();
      for (int j = 1; j <= n; ++j) {
        acc += (f[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(n - j)]).scaled(F(ratio(j, n)));
      }
      e.push_back(acc.degree_component(n));
      out += e.back();
    }
    return out;
  }

  FormalSeries empty_like() const { return FormalSeries(m_, basis_, orders_, max_degree_); }
  FormalSeries one() const {
    FormalSeries out = empty_like();
    out.add(Exponent(orders_.size(), 0), GradedPoly<F>::constant(m_, F(1), basis_));
    return out;
  }

 private:
  void check(const FormalSeries& o) const {
    if (m_ != o.m_ || basis_ != o.basis_ || orders_ != o.orders_ || max_degree_ != o.max_degree_) {
      throw std::invalid_argument("incompatible formal series");
    }
  }

  int m_ = 1;
  Basis basis_ = Basis::P;
  std::vector<int> orders_;
  int max_degree_ = 0;
  std::map<Exponent, GradedPoly<F>> coeffs_;
};

/// exp(sum_i beta_i ops[i]) applied to init, for commuting degree-preserving
/// operators, computed as an ordered product of truncated exponentials.
template <class F>
FormalSeries<F> exp_operators_apply(const std::vector<LinearOperator<F>>& ops, const GradedPoly<F>& init,
                                    const std::vector<int>& orders, int max_degree) {
  if (ops.size() != orders.size()) throw std::invalid_argument("one order per operator required");
  FormalSeries<F> out(init.colors(), init.basis(), orders, max_degree);
  std::map<std::vector<int>, GradedPoly<F>> slices;
  std::vector<int> cur(orders.size(), 0);
  // Lexicographic walk: o - e_i (i = first nonzero slot) precedes o.
  while (true) {
    std::size_t i = 0;
    while (i < cur.size() && cur[i] == 0) ++i;
    GradedPoly<F> value;
    if (i == cur.size()) {
      value = init.truncated(max_degree);
    } else {
      std::vector<int> prev = cur;
      --prev[i];
      value = ops[i].apply(slices.at(prev)).scaled(F(ratio(1, cur[i])));
    }
    out.add(cur, value);
    slices.emplace(cur, std::move(value));
    std::size_t k = cur.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (cur[k] < orders[k]) {
        ++cur[k];
        done = false;
        break;
      }
      cur[k] = 0;
    }
    if (done) break;
  }
  return out;
}

}  // namespace hurwitz
