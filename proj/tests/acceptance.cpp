// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/verify.hpp"

using namespace hurwitz;

namespace {

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<CheckResult()> run;
};

CheckResult combine(const std::string& name, const std::vector<CheckResult>& parts) {
  CheckResult out(name);
  for (const auto& p : parts) {
    out.absorb(p);
    if (p.checked == 0) out.record(false, p.name + ": nothing checked");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "initial condition, m<=3, n<=4", 1.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 4; ++n) parts.push_back(check_initial_condition(m, n));
         return combine("initial condition", parts);
       }},
      {2, "triple-engine agreement, m<=3, n<=3, M<=3", 120.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 3; ++m) parts.push_back(check_triple_engine(m, 3, 3));
         return combine("triple engine", parts);
       }},
      {3, "classical anchor against the S_n oracle, n<=5, M<=4", 120.0,
       [] { return check_classical_anchor(5, 4); }},
      {4, "normalizer of tau (m*n<=8) and embedding homomorphism (m,n<=3)", 60.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 8; ++m)
           for (int n = 1; m * n <= 8; ++n) parts.push_back(check_normalizer(m, n));
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n) parts.push_back(check_homomorphism(m, n));
         return combine("embedding", parts);
       }},
      {5, "conjugacy classes and beta-cycle types, m,n<=3", 60.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n) parts.push_back(check_conjugacy(m, n));
         return combine("conjugacy", parts);
       }},
      {6, "cut/join/Euler multiplicities over every class element, m,n<=3", 120.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 3; ++n) parts.push_back(check_multiplicities(m, n));
         return combine("multiplicities", parts);
       }},
      {7, "operator identities after the change of variables, m<=4, n<=5", 120.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 4; ++m)
           for (int n = 1; n <= 5; ++n) parts.push_back(check_operator_identities(m, n));
         return combine("operator identities", parts);
       }},
      {8, "eigenvector theorem, |lambda|<=4, m<=3, with the m=2 CJ_1 formula", 120.0,
       [] {
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 3; ++m)
           for (int n = 1; n <= 4; ++n) parts.push_back(check_eigen(m, n));
         for (int n = 1; n <= 4; ++n) parts.push_back(check_m2_cj1(n));
         return combine("eigenvectors", parts);
       }},
      {9, "KP residuals to weight 8, beta-order 3, m<=2, plus negative control", 300.0,
       [] {
         // Weight 13 makes both residuals exact through time weight 8.
         std::vector<CheckResult> parts;
         for (int m = 1; m <= 2; ++m) {
           const std::vector<int> orders(static_cast<std::size_t>(m), 3);
           parts.push_back(check_kp(m, 13, orders));
           parts.push_back(check_kp(m, 13, orders, true));
         }
         return combine("KP", parts);
       }},
      {10, "log H reduction to classical connected numbers (m=1: N<=4, m=2: N<=3)", 300.0,
       [] { return combine("reduction", {check_elsv(1, 4, {3}), check_elsv(2, 3, {3, 3})}); }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r("criterion");
    std::string error;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.limit_seconds;
    const bool pass = error.empty() && r.pass() && in_time;
    failures += !pass;
    std::printf("%s criterion %d: %s [%ld checked, %ld failed, %.2fs / %.0fs]", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), r.checked, r.failed, secs, c.limit_seconds);
    if (!error.empty()) std::printf(" error: %s", error.c_str());
    if (!r.detail.empty()) std::printf(" first failure: %s", r.detail.c_str());
    if (!in_time) std::printf(" over time limit");
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
