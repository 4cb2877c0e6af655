#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Element [u; g] of Z/mZ wr S_n, i.e. of G(m,1,n): the monomial matrix with
/// entry exp(2 pi i g_k / m) in column k, row u(k).
///
/// Points are stored 0-based internally; every textual form (cycle notation,
/// JSON) is 1-based.
class WreathElement {
 public:
  WreathElement() = default;
  /// perm[k] = u(k) (0-based images); colors[k] = g_k. Colors are reduced mod m.
  /// Throws std::invalid_argument if perm is not a bijection.
  WreathElement(int m, std::vector<int> perm, std::vector<int> colors);
  static WreathElement identity(int m, int n);
  /// Builds an element from 1-based cycles of u and per-point colors.
  static WreathElement from_cycles(int m, int n, const std::vector<std::vector<int>>& cycles,
                                   std::vector<int> colors);

  int m() const { return m_; }
  int n() const { return static_cast<int>(perm_.size()); }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& colors() const { return colors_; }

  /// [u;g]·[v;b] = [uv; v(g) + b] with v(g) = (g_{v(1)}, ..., g_{v(n)}).
  /// Throws std::invalid_argument on mismatched (m, n).
  WreathElement operator*(const WreathElement& other) const;
  WreathElement inverse() const;
  bool is_identity() const;

  bool operator==(const WreathElement& other) const = default;

  /// 0-based cycles of u, each starting at its smallest point.
  std::vector<std::vector<int>> cycles() const;
  /// e.g. "[(1 2);1,0]"
  std::string to_string() const;

 private:
  int m_ = 1;
  std::vector<int> perm_;
  std::vector<int> colors_;
};

/// A permutation of {1, ..., N}, stored as 0-based images.
class BigPermutation {
 public:
  BigPermutation() = default;
  explicit BigPermutation(std::vector<int> images);
  static BigPermutation identity(int size);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& images() const { return images_; }

  /// Composition: (a * b)(x) = a(b(x)).
  BigPermutation operator*(const BigPermutation& other) const;
  BigPermutation inverse() const;
  bool commutes_with(const BigPermutation& other) const;
  bool operator==(const BigPermutation& other) const = default;

  std::vector<std::vector<int>> cycles() const;
  /// 1-based cycle notation without fixed points, "()" for the identity.
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// tau = (1 n+1 ... (m-1)n+1)(2 n+2 ...)...(n 2n ... mn), a product of n disjoint m-cycles.
BigPermutation tau(int m, int n);

/// The embedding G(m,1,n) -> S_{mn}: point j + n k maps to u(j) + n (k + g_j mod m).
BigPermutation embed(const WreathElement& x);

/// Inverse of embed on the commutant of tau. Throws std::invalid_argument if p
/// does not commute with tau(m, n).
WreathElement unembed(int m, int n, const BigPermutation& p);

/// Colored cycle type: each cycle of u contributes its length to the
/// component indexed by its cycle-product (sum of colors along the cycle mod m).
ColoredPartition colored_type(const WreathElement& x);

/// Classifies the cycles of p (which must commute with tau) into beta_alpha
/// families read off directly in S_{mn}: a family of gcd(m, alpha) cycles of
/// length k m / gcd(m, alpha) contributes a part k to component alpha.
/// Throws std::invalid_argument if p does not commute with tau(m, n).
ColoredPartition beta_type(int m, int n, const BigPermutation& p);

struct Reflection {
  enum class Kind { R, L };
  Kind kind;
  int i;      // 1-based
  int j;      // 1-based, only for R
  int power;  // alpha for R, k for L
  WreathElement element;

  /// Reflection class index: 0 for R, k for L^k.
  int class_index() const { return kind == Kind::R ? 0 : power; }
  std::string label() const;
};

/// r_{ij}^{(alpha)} = [(i j); alpha at i, -alpha at j], 1 <= i < j <= n.
Reflection reflection_r(int m, int n, int i, int j, int alpha);
/// l_i^k = [id; k at i].
Reflection reflection_l(int m, int n, int i, int k);

/// All m n(n-1)/2 reflections of type R followed by all n(m-1) of type L.
std::vector<Reflection> all_reflections(int m, int n);
/// Reflections of class 0 (R) or class k (L^k).
std::vector<Reflection> reflections_in_class(int m, int n, int class_index);

/// Centralizer order prod_alpha z_{lambda_alpha} m^{l(lambda_alpha)}.
Integer centralizer_order(int m, const ColoredPartition& lambda);
/// |C_lambda| = m^n n! / centralizer order.
Integer class_size(int m, const ColoredPartition& lambda);
/// z_lambda = prod_i i^{c_i} c_i!.
Integer z_constant(const Partition& lambda);

/// A representative element of the class C_lambda.
WreathElement class_representative(int m, const ColoredPartition& lambda);

/// Random-access enumeration of G(m,1,n): index = perm_rank * m^n + color code.
class GroupEnumerator {
 public:
  static constexpr std::uint64_t kDefaultBudget = 100'000'000;

  /// Throws std::length_error if m^n n! exceeds the budget.
  GroupEnumerator(int m, int n, std::uint64_t budget = kDefaultBudget);

  int m() const { return m_; }
  int n() const { return n_; }
  std::uint64_t size() const { return size_; }
  WreathElement at(std::uint64_t index) const;
  std::uint64_t index_of(const WreathElement& x) const;
  void for_each(const std::function<void(const WreathElement&)>& fn) const;

 private:
  int m_;
  int n_;
  std::uint64_t colorings_;
  std::uint64_t size_;
};

/// Convenience: all elements in enumeration order.
std::vector<WreathElement> enumerate_group(int m, int n,
                                           std::uint64_t budget = GroupEnumerator::kDefaultBudget);

}  // namespace hurwitz
