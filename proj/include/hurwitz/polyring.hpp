#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/cyclo.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Which family of variables a polynomial is written in: raw power sums
/// p^{(a)}_k or their DFT images u^{(a)}_k.
enum class Basis { P, U };

/// A monomial prod_a prod_j x^{(a)}_{lambda_{a,j}} is keyed by the colored
/// partition lambda; its weighted degree is |lambda|.
using Monomial = ColoredPartition;

template <class F>
class GradedPoly {
 public:
  using Terms = std::map<Monomial, F>;

  GradedPoly() = default;
  explicit GradedPoly(int m, Basis basis = Basis::P) : m_(m), basis_(basis) {
    if (m < 1) throw std::invalid_argument("GradedPoly needs m >= 1");
  }

  static GradedPoly monomial(const Monomial& mono, const F& coeff = F(1), Basis basis = Basis::P) {
    GradedPoly out(mono.colors(), basis);
    out.add_term(mono, coeff);
    return out;
  }
  static GradedPoly constant(int m, const F& c, Basis basis = Basis::P) {
    return monomial(ColoredPartition::empty(m), c, basis);
  }
  /// The single variable x^{(family)}_k.
  static GradedPoly variable(int m, int family, int k, Basis basis = Basis::P) {
    return monomial(single_part(m, family, k), F(1), basis);
  }
  static Monomial single_part(int m, int family, int k) {
    std::vector<Partition> comps(static_cast<std::size_t>(m));
    comps.at(static_cast<std::size_t>(family)) = Partition({k});
    return ColoredPartition(std::move(comps));
  }

  int colors() const { return m_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  F coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? F(0) : it->second;
  }

  void add_term(const Monomial& mono, const F& c) {
    if (mono.colors() != m_) throw std::invalid_argument("monomial has wrong number of families");
    if (is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  GradedPoly& operator+=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  GradedPoly& operator-=(const GradedPoly& o) {
    check_compatible(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  GradedPoly operator-() const { return scaled(F(-1)); }

  GradedPoly scaled(const F& s) const {
    GradedPoly out(m_, basis_);
    if (is_zero(s)) return out;
    for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, c * s);
    return out;
  }

  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    a.check_compatible(b);
    GradedPoly out(a.m_, a.basis_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(merge(ma, mb), ca * cb);
    }
    return out;
  }

  /// Product dropping every term of weighted degree above max_degree.
  GradedPoly mul_truncated(const GradedPoly& b, int max_degree) const {
    check_compatible(b);
    GradedPoly out(m_, basis_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        if (ma.total() + mb.total() <= max_degree) out.add_term(merge(ma, mb), ca * cb);
      }
    }
    return out;
  }

  bool operator==(const GradedPoly& o) const {
    return m_ == o.m_ && basis_ == o.basis_ && terms_ == o.terms_;
  }

  GradedPoly homogeneous_component(int n) const {
    GradedPoly out(m_, basis_);
    for (const auto& [mono, c] : terms_) {
      if (mono.total() == n) out.terms_.emplace(mono, c);
    }
    return out;
  }
  GradedPoly truncated(int max_degree) const {
    GradedPoly out(m_, basis_);
    for (const auto& [mono, c] : terms_) {
      if (mono.total() <= max_degree) out.terms_.emplace(mono, c);
    }
    return out;
  }
  /// -1 for the zero polynomial.
  int max_degree() const {
    int d = -1;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.total());
    return d;
  }
  bool is_homogeneous(int n) const {
    for (const auto& [mono, c] : terms_) {
      if (mono.total() != n) return false;
    }
    return true;
  }

  /// Replaces the basis tag without touching coefficients.
  GradedPoly relabeled(Basis b) const {
    GradedPoly out = *this;
    out.basis_ = b;
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const char var = basis_ == Basis::P ? 'p' : 'u';
    std::string out;
    for (const auto& [mono, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + hurwitz::to_string(c) + ")";
      for (int a = 0; a < m_; ++a) {
        const auto mult = mono[static_cast<std::size_t>(a)].multiplicities();
        for (std::size_t k = 1; k < mult.size(); ++k) {
          if (mult[k] == 0) continue;
          out += "*";
          out += var;
          out += std::to_string(a) + "_" + std::to_string(k);
          if (mult[k] > 1) out += "^" + std::to_string(mult[k]);
        }
      }
    }
    return out;
  }

 private:
  void check_compatible(const GradedPoly& o) const {
    if (m_ != o.m_ || basis_ != o.basis_) throw std::invalid_argument("incompatible polynomials");
  }

  int m_ = 1;
  Basis basis_ = Basis::P;
  Terms terms_;
};

/// Removes one copy of part k from family a of mono; returns false if absent.
inline bool remove_part(const Monomial& mono, int family, int k, Monomial& out, int& multiplicity) {
  const Partition& comp = mono[static_cast<std::size_t>(family)];
  multiplicity = comp.multiplicity(k);
  if (multiplicity == 0) return false;
  std::vector<int> parts = comp.parts();
  parts.erase(std::find(parts.begin(), parts.end(), k));
  std::vector<Partition> comps = mono.components();
  comps[static_cast<std::size_t>(family)] = Partition(std::move(parts));
  out = ColoredPartition(std::move(comps));
  return true;
}

/// Formal derivative d/dx^{(family)}_k.
template <class F>
GradedPoly<F> partial(const GradedPoly<F>& poly, int family, int k) {
  GradedPoly<F> out(poly.colors(), poly.basis());
  for (const auto& [mono, c] : poly.terms()) {
    Monomial reduced;
    int mult = 0;
    if (remove_part(mono, family, k, reduced, mult)) out.add_term(reduced, c * F(mult));
  }
  return out;
}

/// Coefficient-field change, e.g. Rational -> CycloNumber of conductor m.
template <class G, class F, class Fn>
GradedPoly<G> convert(const GradedPoly<F>& poly, Fn fn) {
  GradedPoly<G> out(poly.colors(), poly.basis());
  for (const auto& [mono, c] : poly.terms()) out.add_term(mono, fn(c));
  return out;
}

inline GradedPoly<CycloNumber> to_cyclo(const GradedPoly<Rational>& poly, int m) {
  return convert<CycloNumber>(poly, [m](const Rational& r) { return CycloNumber(m, r); });
}

/// Sparse matrix stored by columns.
template <class F>
class SparseMatrix {
 public:
  using Column = std::map<std::size_t, F>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(cols) {}
  static SparseMatrix identity(std::size_t n) {
    SparseMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.data_[i].emplace(i, F(1));
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Column& column(std::size_t c) const { return data_.at(c); }

  F get(std::size_t r, std::size_t c) const {
    const auto& col = data_.at(c);
    auto it = col.find(r);
    return it == col.end() ? F(0) : it->second;
  }
  void add_to(std::size_t r, std::size_t c, const F& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (is_zero(v)) return;
    auto& col = data_[c];
    auto [it, inserted] = col.try_emplace(r, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) col.erase(it);
    }
  }
  void set(std::size_t r, std::size_t c, const F& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (is_zero(v)) {
      data_[c].erase(r);
    } else {
      data_[c][r] = v;
    }
  }
  void set_column(std::size_t c, Column col) { data_.at(c) = std::move(col); }

  std::size_t nnz() const {
    std::size_t n = 0;
    for (const auto& col : data_) n += col.size();
    return n;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<F> out(rows_, F(0));
    for (std::size_t c = 0; c < cols_; ++c) {
      if (is_zero(v[c])) continue;
      for (const auto& [r, x] : data_[c]) out[r] += x * v[c];
    }
    return out;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    SparseMatrix out(a.rows_, b.cols_);
    for (std::size_t c = 0; c < b.cols_; ++c) {
      for (const auto& [k, y] : b.data_[c]) {
        for (const auto& [r, x] : a.data_[k]) out.add_to(r, c, x * y);
      }
    }
    return out;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) {
    a.check_shape(b);
    for (std::size_t c = 0; c < b.cols_; ++c) {
      for (const auto& [r, x] : b.data_[c]) a.add_to(r, c, x);
    }
    return a;
  }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.scaled(F(-1)); }

  SparseMatrix scaled(const F& s) const {
    SparseMatrix out(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      for (const auto& [r, x] : data_[c]) out.add_to(r, c, x * s);
    }
    return out;
  }

  bool operator==(const SparseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool is_zero_matrix() const { return nnz() == 0; }
  bool is_diagonal() const {
    for (std::size_t c = 0; c < cols_; ++c) {
      for (const auto& [r, x] : data_[c]) {
        if (r != c) return false;
      }
    }
    return true;
  }

  template <class G, class Fn>
  SparseMatrix<G> transform(Fn fn) const {
    SparseMatrix<G> out(rows_, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
      for (const auto& [r, x] : data_[c]) out.add_to(r, c, fn(x));
    }
    return out;
  }

 private:
  void check_shape(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Column> data_;
};

template <class F>
SparseMatrix<F> commutator(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
  return a * b - b * a;
}

/// Degree-preserving linear operator given by its action on monomials.
/// Images of monomials are memoized; the memo is guarded so one operator can
/// be shared between threads.
template <class F>
class LinearOperator {
 public:
  using Rule = std::function<GradedPoly<F>(const Monomial&)>;

  LinearOperator() = default;
  LinearOperator(int m, Basis basis, Rule rule)
      : m_(m), basis_(basis), rule_(std::move(rule)), memo_(std::make_shared<Memo>()) {}

  /// Operator defined on one degree component by a matrix in the ColoredBasis(m, n) order.
  static LinearOperator from_matrix(int m, int n, Basis basis, const SparseMatrix<F>& mat) {
    auto b = std::make_shared<ColoredBasis>(m, n);
    if (mat.rows() != b->size() || mat.cols() != b->size()) throw std::invalid_argument("matrix dimension mismatch");
    auto matp = std::make_shared<SparseMatrix<F>>(mat);
    return LinearOperator(m, basis, [m, n, basis, b, matp](const Monomial& mono) {
      GradedPoly<F> out(m, basis);
      if (mono.total() != n) throw std::invalid_argument("matrix operator applied outside its degree");
      for (const auto& [r, x] : matp->column(b->index_of(mono))) out.add_term(b->at_index(r), x);
      return out;
    });
  }

  int colors() const { return m_; }
  Basis basis() const { return basis_; }

  const GradedPoly<F>& image(const Monomial& mono) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      auto it = memo_->images.find(mono);
      if (it != memo_->images.end()) return it->second;
    }
    GradedPoly<F> img = rule_(mono);
    std::lock_guard<std::mutex> lock(memo_->mu);
    return memo_->images.emplace(mono, std::move(img)).first->second;
  }

  GradedPoly<F> apply(const GradedPoly<F>& poly) const {
    if (poly.colors() != m_ || poly.basis() != basis_) throw std::invalid_argument("operator/polynomial mismatch");
    GradedPoly<F> out(m_, basis_);
    for (const auto& [mono, c] : poly.terms()) {
      for (const auto& [m2, c2] : image(mono).terms()) out.add_term(m2, c * c2);
    }
    return out;
  }

  /// Matrix on the degree-n component: column j holds the image of basis element j.
  SparseMatrix<F> matrix(int n) const {
    ColoredBasis b(m_, n);
    SparseMatrix<F> out(b.size(), b.size());
    for (std::size_t j = 0; j < b.size(); ++j) {
      for (const auto& [mono, c] : image(b.at_index(j)).terms()) {
        if (mono.total() != n) throw std::logic_error("operator does not preserve degree");
        out.add_to(b.index_of(mono), j, c);
      }
    }
    return out;
  }

 private:
  struct Memo {
    std::mutex mu;
    std::map<Monomial, GradedPoly<F>> images;
  };
  int m_ = 1;
  Basis basis_ = Basis::P;
  Rule rule_;
  std::shared_ptr<Memo> memo_;
};

/// Euler field sum_a sum_k k x^{(a)}_k d/dx^{(a)}_k restricted to the given
/// families (all families if empty): multiplies each monomial by its weight
/// in those families.
template <class F>
LinearOperator<F> euler_field(int m, Basis basis, std::vector<int> families = {}) {
  if (families.empty()) {
    for (int a = 0; a < m; ++a) families.push_back(a);
  }
  return LinearOperator<F>(m, basis, [m, basis, families](const Monomial& mono) {
    int w = 0;
    for (int a : families) w += mono[static_cast<std::size_t>(a)].size();
    GradedPoly<F> out(m, basis);
    out.add_term(mono, F(w));
    return out;
  });
}

/// sum_{k <= order} op^k(poly) beta^k / k!, returned as the list of beta-coefficients.
template <class F>
std::vector<GradedPoly<F>> truncated_exp_apply(const LinearOperator<F>& op, const GradedPoly<F>& poly, int order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  std::vector<GradedPoly<F>> out;
  out.reserve(static_cast<std::size_t>(order) + 1);
  out.push_back(poly);
  for (int k = 1; k <= order; ++k) {
    out.push_back(op.apply(out.back()).scaled(F(ratio(1, k))));
  }
  return out;
}

/// Coordinates of the normalized class sums C_lambda of G(m,1,n).
struct ClassVector {
  int m = 1;
  int n = 0;
  std::map<ColoredPartition, Rational> coeffs;

  bool operator==(const ClassVector& o) const { return m == o.m && n == o.n && coeffs == o.coeffs; }
};

/// The isomorphism C_lambda -> p_lambda. Throws on keys of the wrong degree.
inline GradedPoly<Rational> theta(const ClassVector& v) {
  GradedPoly<Rational> out(v.m, Basis::P);
  for (const auto& [lambda, c] : v.coeffs) {
    if (lambda.total() != v.n || lambda.colors() != v.m) throw std::invalid_argument("theta: degree mixing");
    out.add_term(lambda, c);
  }
  return out;
}

/// Inverse of theta on a homogeneous degree-n polynomial.
inline ClassVector theta_inv(const GradedPoly<Rational>& poly, int n) {
  if (poly.basis() != Basis::P) throw std::invalid_argument("theta_inv needs the p-basis");
  ClassVector v{poly.colors(), n, {}};
  for (const auto& [mono, c] : poly.terms()) {
    if (mono.total() != n) throw std::invalid_argument("theta_inv: degree mixing");
    v.coeffs.emplace(mono, c);
  }
  return v;
}

}  // namespace hurwitz
