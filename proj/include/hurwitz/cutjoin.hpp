#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/cyclo.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/polyring.hpp"

namespace hurwitz {

namespace detail {

inline std::vector<std::pair<int, int>> distinct_variables(const Monomial& mono) {
  std::vector<std::pair<int, int>> out;  // (family, index)
  for (int a = 0; a < mono.colors(); ++a) {
    const auto mult = mono[static_cast<std::size_t>(a)].multiplicities();
    for (std::size_t k = 1; k < mult.size(); ++k) {
      if (mult[k] > 0) out.emplace_back(a, static_cast<int>(k));
    }
  }
  return out;
}

}  // namespace detail

/// Cut half of CJ_0 as a differential operator:
/// 1/2 sum_{a,c} sum_{i,j} (i+j) x^{(a)}_i x^{(c)}_j d/dx^{(a+c)}_{i+j}.
/// With m = 1 and one family this is the classical cut term.
template <class F>
LinearOperator<F> cj0_cut_rule(int m, Basis basis = Basis::P) {
  return LinearOperator<F>(m, basis, [m, basis](const Monomial& mono) {
    GradedPoly<F> out(m, basis);
    const GradedPoly<F> x = GradedPoly<F>::monomial(mono, F(1), basis);
    for (const auto& [delta, s] : detail::distinct_variables(mono)) {
      const GradedPoly<F> d = partial(x, delta, s);
      for (int i = 1; i < s; ++i) {
        for (int a = 0; a < m; ++a) {
          const int c = ((delta - a) % m + m) % m;
          auto term = GradedPoly<F>::variable(m, a, i, basis) * GradedPoly<F>::variable(m, c, s - i, basis) * d;
          out += term.scaled(F(ratio(s, 2)));
        }
      }
    }
    return out;
  });
}

/// Join half of CJ_0: 1/2 sum m i j x^{(a+c)}_{i+j} d^2/dx^{(a)}_i dx^{(c)}_j.
template <class F>
LinearOperator<F> cj0_join_rule(int m, Basis basis = Basis::P) {
  return LinearOperator<F>(m, basis, [m, basis](const Monomial& mono) {
    GradedPoly<F> out(m, basis);
    const GradedPoly<F> x = GradedPoly<F>::monomial(mono, F(1), basis);
    const auto vars = detail::distinct_variables(mono);
    for (const auto& [a, i] : vars) {
      const GradedPoly<F> di = partial(x, a, i);
      for (const auto& [c, j] : vars) {
        const GradedPoly<F> dij = partial(di, c, j);
        if (dij.empty()) continue;
        auto term = GradedPoly<F>::variable(m, (a + c) % m, i + j, basis) * dij;
        out += term.scaled(F(ratio(m * i * j, 2)));
      }
    }
    return out;
  });
}

/// CJ_0 as the literal differential operator (cut + join).
template <class F>
LinearOperator<F> cj0_rule(int m, Basis basis = Basis::P) {
  auto cut = cj0_cut_rule<F>(m, basis);
  auto join = cj0_join_rule<F>(m, basis);
  return LinearOperator<F>(m, basis, [basis, cut, join](const Monomial& mono) {
    GradedPoly<F> x = GradedPoly<F>::monomial(mono, F(1), basis);
    return cut.apply(x) + join.apply(x);
  });
}

/// CJ_k = sum_a sum_i i x^{(a+k)}_i d/dx^{(a)}_i, 1 <= k < m.
template <class F>
LinearOperator<F> cjk_rule(int m, int k, Basis basis = Basis::P) {
  return LinearOperator<F>(m, basis, [m, k, basis](const Monomial& mono) {
    GradedPoly<F> out(m, basis);
    const GradedPoly<F> x = GradedPoly<F>::monomial(mono, F(1), basis);
    for (const auto& [a, i] : detail::distinct_variables(mono)) {
      auto term = GradedPoly<F>::variable(m, (a + k) % m, i, basis) * partial(x, a, i);
      out += term.scaled(F(i));
    }
    return out;
  });
}

/// CJ_i for i = 0 (cut-and-join) or 1 <= i < m (color shift).
template <class F>
LinearOperator<F> cj_rule(int m, int i, Basis basis = Basis::P) {
  return i == 0 ? cj0_rule<F>(m, basis) : cjk_rule<F>(m, i, basis);
}

/// Classical cut-and-join on the single family `family` (other families are constants).
template <class F>
LinearOperator<F> classical_cj_rule(int m, int family, Basis basis) {
  return LinearOperator<F>(m, basis, [m, family, basis](const Monomial& mono) {
    GradedPoly<F> out(m, basis);
    const GradedPoly<F> x = GradedPoly<F>::monomial(mono, F(1), basis);
    std::vector<int> idx;
    for (const auto& [a, i] : detail::distinct_variables(mono)) {
      if (a == family) idx.push_back(i);
    }
    for (int s : idx) {
      const GradedPoly<F> d = partial(x, family, s);
      for (int i = 1; i < s; ++i) {
        auto term = GradedPoly<F>::variable(m, family, i, basis) * GradedPoly<F>::variable(m, family, s - i, basis) * d;
        out += term.scaled(F(ratio(s, 2)));
      }
    }
    for (int i : idx) {
      const GradedPoly<F> di = partial(x, family, i);
      for (int j : idx) {
        const GradedPoly<F> dij = partial(di, family, j);
        if (dij.empty()) continue;
        out += (GradedPoly<F>::variable(m, family, i + j, basis) * dij).scaled(F(ratio(i * j, 2)));
      }
    }
    return out;
  });
}

/// Matrices of CJ_0, ..., CJ_{m-1} on the degree-n component of the p-basis.
struct CJFamily {
  int m = 1;
  int n = 0;
  std::vector<SparseMatrix<Rational>> ops;
};

/// CJ_0 matrix assembled from the combinatorial cut/join rule on part multiplicities.
SparseMatrix<Rational> cj0_matrix(int m, int n);
/// CJ_k matrix from the color-shift rule.
SparseMatrix<Rational> cjk_matrix(int m, int n, int k);
CJFamily build_cj(int m, int n);

struct DiagramReport {
  int m = 1;
  int n = 0;
  /// Fitted scalar c_i with CJ_i = c_i T_i (nullopt when the two are not proportional).
  std::vector<std::optional<Rational>> constants;
  bool commutes = false;
};

/// Compares the CJ_i matrices with the class-algebra matrices T_i through theta.
DiagramReport verify_diagram(int m, int n);

/// Exponent sign s of the inverse change of variables
/// u^{(v)}_k = (1/m) sum_b xi^{s v b} p^{(b)}_k. The forward map is then
/// p^{(a)}_k = sum_v xi^{-s a v} u^{(v)}_k.
constexpr int kDftSign = -1;

/// Rewrites a p-basis polynomial in the u-variables.
GradedPoly<CycloNumber> p_to_u(const GradedPoly<CycloNumber>& poly, int sign = kDftSign);
/// Rewrites a u-basis polynomial in the p-variables.
GradedPoly<CycloNumber> u_to_p(const GradedPoly<CycloNumber>& poly, int sign = kDftSign);

/// Change-of-basis matrices on degree n: A sends p-coordinates to
/// u-coordinates, B sends u-coordinates to p-coordinates.
SparseMatrix<CycloNumber> p_to_u_matrix(int m, int n, int sign = kDftSign);
SparseMatrix<CycloNumber> u_to_p_matrix(int m, int n, int sign = kDftSign);

/// M expressed in u-coordinates: A M B.
SparseMatrix<CycloNumber> conjugate_to_u(const SparseMatrix<Rational>& m_p, int m, int n, int sign = kDftSign);

/// m * sum_v CJ_{u^{(v)}} on degree n of the u-basis.
SparseMatrix<CycloNumber> dft_target_cj0(int m, int n);
/// sum_v xi^{k v} E_{u^{(v)}} on degree n of the u-basis.
SparseMatrix<CycloNumber> dft_target_cjk(int m, int n, int k);

struct DftReport {
  int m = 1;
  int n = 0;
  bool round_trip = false;
  bool cj0_identity = false;
  std::vector<bool> cjk_identity;  // index k-1
  bool ok() const;
};
DftReport verify_dft(int m, int n, int sign = kDftSign);

/// Truncated generating function: slices[(n_0..n_{m-1})] is the coefficient of
/// beta_0^{n_0} ... beta_{m-1}^{n_{m-1}}, a p-polynomial of degree <= max_degree.
struct GenFunction {
  int m = 1;
  int max_degree = 0;
  std::vector<int> orders;
  std::map<Profile, GradedPoly<Rational>> slices;

  /// h = coefficient * prod n_i!, for every degree 1..max_degree and stored profile.
  HurwitzTable table() const;
};

/// exp(sum beta_i CJ_i) applied to exp(p^{(0)}_1 / m), truncated.
GenFunction evolve(int m, int max_degree, const std::vector<int>& orders);
/// The degree <= N part of exp(p^{(0)}_1 / m).
GradedPoly<Rational> initial_condition(int m, int max_degree);

/// (n_i + 1) H[o + e_i] == CJ_i H[o] for every stored pair of slices.
/// Returns the number of failing (o, i) pairs; checked counts the pairs examined.
int check_cj_equations(const GenFunction& h, int* checked = nullptr);

}  // namespace hurwitz
