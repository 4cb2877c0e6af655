#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/cyclo.hpp"
#include "hurwitz/partitions.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Oracle limits.
constexpr int kClassicalMaxDegree = 6;
constexpr int kClassicalMaxTranspositions = 5;

/// (1/d!) #{(t_1..t_r) transpositions in S_d : t_1...t_r in C_lambda}, d = |lambda|.
/// With transitive, only sequences generating a transitive subgroup count.
/// Parallel over the first transposition.
Rational classical_bruteforce(const Partition& lambda, int r, bool transitive = false);
Rational classical_bruteforce_serial(const Partition& lambda, int r, bool transitive = false);

/// Classical simple Hurwitz numbers keyed by (profile, transposition count).
struct ClassicalHurwitz {
  int max_degree = 0;
  int max_r = 0;
  std::map<std::pair<Partition, int>, Rational> disconnected;
  /// From the logarithm of the disconnected generating series.
  std::map<std::pair<Partition, int>, Rational> connected;

  Rational get_connected(const Partition& mu, int r) const;
  Rational get_disconnected(const Partition& mu, int r) const;
};

/// sum_{r, mu} beta^r / r! h_r(mu) p_mu as a one-family series.
FormalSeries<Rational> classical_series(const std::map<std::pair<Partition, int>, Rational>& numbers, int max_degree,
                                        int max_r);

/// Disconnected numbers by brute force for all |mu| <= max_degree, r <= max_r;
/// connected numbers by the series logarithm.
ClassicalHurwitz classical_table(int max_degree, int max_r);

struct ConnectedReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Log-derived connected numbers against the transitive count (for |mu| <= max_degree),
/// exp of the connected series against the disconnected one, and the genus
/// constraint r = 2g - 2 + l(mu) + |mu| with g >= 0.
ConnectedReport verify_connected(const ClassicalHurwitz& table, int transitive_max_degree);

struct EulerReport {
  int m = 1;
  int max_degree = 0;
  std::vector<int> orders;  // beta_1..beta_{m-1}
  std::size_t lhs_terms = 0;
  bool match = false;
};

/// exp(sum_k beta_k CJ_k) exp(p^{(0)}_1) against prod_a exp(exp(sum_k beta_k xi^{k a}) u^{(a)}_1)
/// rewritten in p, as formal series in beta_1..beta_{m-1}.
EulerReport euler_weight_check(int m, const std::vector<int>& orders, int max_degree);

struct ReductionRow {
  int alpha = -1;  // -1 for a monomial mixing several u-families
  std::vector<int> exponent;
  ColoredPartition monomial;
  CycloNumber lhs;
  CycloNumber rhs;
  bool pass = false;
};

struct ReductionReport {
  int m = 1;
  int max_degree = 0;
  std::vector<int> orders;
  std::vector<ReductionRow> rows;
  int mixed_terms = 0;
  bool exp_consistent = false;
  bool ok() const;
};

/// log H in the rescaled variables u^{(a)}_k = m^k v^{(a)}_k against the
/// reassembly sum_a sum (m beta_0)^r / r! h°_r(mu) prod_k (|mu| xi^{k a} beta_k)^{o_k} / o_k! v^{(a)}_mu.
ReductionReport reduction_check(int m, int max_degree, const std::vector<int>& orders);

/// H itself in the rescaled u-variables (before taking the logarithm).
FormalSeries<CycloNumber> rescaled_u_series(const GenFunction& h);

}  // namespace hurwitz
