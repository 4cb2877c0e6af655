#pragma once

#include <string>
#include <vector>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/cyclo.hpp"
#include "hurwitz/series.hpp"

namespace hurwitz {

/// Series in the KP times t_1, t_2, ... (one variable family, deg t_k = k)
/// and formal beta parameters.
using TimesSeries = FormalSeries<CycloNumber>;

/// t_k as a one-family monomial.
Monomial time_monomial(const std::vector<int>& indices);

struct KPResiduals {
  /// F_22 - (F_31 - F_11^2 / 2 - F_1111 / 12), exact through weight D - 4.
  TimesSeries eq1;
  /// F_32 - (F_41 - F_11 F_21 - F_2111 / 6), exact through weight D - 5.
  TimesSeries eq2;
};

/// Residuals of the first two KP equations, each truncated to the weight up
/// to which it is determined by F (F known through weight D = F.max_degree()).
KPResiduals kp_residuals(const TimesSeries& f);

/// Restriction of H to the u-family alpha (all other u-families set to 0),
/// written in the times t_k = u^{(alpha)}_k / m^k, then its logarithm.
TimesSeries restrict_to_family(const GenFunction& h, int alpha);

struct KPReport {
  int m = 1;
  int alpha = 0;
  int weight = 0;
  std::vector<int> orders;
  bool eq1_zero = false;
  bool eq2_zero = false;
  std::size_t eq1_terms = 0;
  std::size_t eq2_terms = 0;
  bool ok() const { return eq1_zero && eq2_zero; }
};

/// Evolves H to degree `weight` with the given beta orders and checks both
/// equations in every u-family. With perturb, 1 is added to the t_2^2
/// coefficient at beta^0 before taking residuals (negative control).
std::vector<KPReport> kp_check(int m, int weight, const std::vector<int>& orders, bool perturb = false);

}  // namespace hurwitz
