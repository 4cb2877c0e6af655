#pragma once

#include <string>
#include <vector>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/cyclo.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/polyring.hpp"

namespace hurwitz {

/// Largest |lambda| accepted by schur_in_powersums.
constexpr int kSchurBudget = 10;

/// s_lambda in one family of power sums (m = 1, p-basis), by Jacobi-Trudi over
/// the complete homogeneous h_k from Newton's identity. Results are memoized.
/// Throws std::length_error beyond kSchurBudget.
const GradedPoly<Rational>& schur_in_powersums(const Partition& lambda);
/// sum_mu chi^lambda(mu) p_mu / z_mu with characters by Murnaghan-Nakayama.
GradedPoly<Rational> schur_character_sum(const Partition& lambda);
/// chi^lambda(mu) by rim-hook removal.
Integer character(const Partition& lambda, const Partition& mu);
/// s_lambda at p = (1, 0, 0, ...): the coefficient of p_1^{|lambda|}.
Rational schur_at_delta(const Partition& lambda);

/// Copies a one-family polynomial into family `family` of an m-family polynomial.
GradedPoly<CycloNumber> embed_family(const GradedPoly<Rational>& poly, int m, int family, Basis basis);

struct EigenData {
  ColoredPartition lambda;
  Rational c0;
  std::vector<CycloNumber> ck;  // ck[k-1] for k = 1..m-1
};

/// Eigenvalues of CJ_0 and CJ_k on the colored Schur function of lambda:
/// c0 = (m/2) sum_{a,i} l_{a,i}(l_{a,i} - 2i + 1), ck = sum_a xi^{k a} |l_a|.
EigenData eigen(int m, const ColoredPartition& lambda);
/// m sum_{a,i} l_{a,i}(l_{a,i} - 2i + 1): twice the true CJ_0 eigenvalue.
Rational c0_without_half(int m, const ColoredPartition& lambda);

/// prod_v s_{lambda_v}(u^{(v)}) in the u-basis.
GradedPoly<CycloNumber> colored_schur_u(int m, const ColoredPartition& lambda);
/// The same function rewritten in the p-basis.
GradedPoly<CycloNumber> colored_schur_p(int m, const ColoredPartition& lambda, int sign = kDftSign);

struct EigenReport {
  int m = 1;
  int n = 0;
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Applies CJ_0..CJ_{m-1} to every colored Schur function of degree n (in the
/// p-basis) and checks the eigen-relations exactly. With halve_c0 = false the
/// CJ_0 eigenvalue is taken without the factor 1/2.
EigenReport verify_eigenvector(int m, int n, int sign = kDftSign, bool halve_c0 = true);

/// Degree-n Cauchy identity: sum_lambda s_lambda(delta) s_lambda(u) equals
/// (p^{(0)}_1)^n / n! after rewriting in the p-basis.
bool cauchy_check(int m, int n);

/// Hurwitz numbers from the Schur expansion of the generating function, for
/// every degree 1..max_degree and every listed profile.
HurwitzTable closed_form_H(int m, int max_degree, const std::vector<Profile>& profiles);

}  // namespace hurwitz
