#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/enumeration.hpp"

namespace hurwitz {

/// Outcome of one theorem check: how many instances were examined, how many failed.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  long checked = 0;
  long failed = 0;
  std::string detail;  // first failure, if any
  bool pass() const { return failed == 0 && checked > 0; }

  void record(bool ok, const std::string& what);
  void absorb(const CheckResult& other);
};

/// Zero profile: 1/(m^n n!) at 1^n|-|...|- and 0 elsewhere, in all three engines.
CheckResult check_initial_condition(int m, int n);
/// classdp == evolve == closed form for degrees 1..max_n and profiles of total <= max_total.
CheckResult check_triple_engine(int m, int max_n, int max_total);
/// Sequence brute force and the cover count against classdp.
CheckResult check_bruteforce(int m, int max_n, int max_total, std::uint64_t budget = kEnumerationBudget);
/// m = 1 tables against the S_n transposition oracle.
CheckResult check_classical_anchor(int max_n, int max_total);

/// The commutant of tau in S_{mn} has m^n n! elements and equals embed(G(m,1,n)).
CheckResult check_normalizer(int m, int n);
/// embed(x y) = embed(x) embed(y) for all pairs.
CheckResult check_homomorphism(int m, int n);
/// Each C_lambda is a single conjugation orbit of the stated size, and the
/// colored type agrees with the beta-cycle type read off in S_{mn}.
CheckResult check_conjugacy(int m, int n);
/// Reflection scans against the cut/join/Euler multiplicities, for every
/// element of every class (class-function property), both sides.
CheckResult check_multiplicities(int m, int n);

/// CJ_i acts as T_i through theta.
CheckResult check_diagram(int m, int n);
/// Change of variables identities and p/u round trip.
CheckResult check_operator_identities(int m, int n);
/// Colored Schur functions are eigenvectors with the stated eigenvalues.
CheckResult check_eigen(int m, int n);
/// At m = 2: CJ_1 = sum_i i p_i d/dq_i + i q_i d/dp_i with p = p^{(0)}, q = p^{(1)}.
CheckResult check_m2_cj1(int n);
CheckResult check_cauchy(int m, int n);
/// (n_i + 1) H[o + e_i] = CJ_i H[o] on the evolved generating function.
CheckResult check_cj_pde(int m, int max_degree, const std::vector<int>& orders);

/// Both KP equations in every u-family; with perturb the negative control must fail.
CheckResult check_kp(int m, int weight, const std::vector<int>& orders, bool perturb = false);
/// log H reduction, exp/log consistency of the classical tables, the Euler weight identity.
CheckResult check_elsv(int m, int max_degree, const std::vector<int>& orders);

}  // namespace hurwitz
