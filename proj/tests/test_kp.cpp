#include <doctest.h>

#include "hurwitz/kp.hpp"

using namespace hurwitz;

namespace {

GradedPoly<CycloNumber> t(std::vector<int> idx, CycloNumber c = CycloNumber(1)) {
  GradedPoly<CycloNumber> p(1, Basis::P);
  p.add_term(time_monomial(idx), c);
  return p;
}

TimesSeries series(const GradedPoly<CycloNumber>& f, int weight) {
  TimesSeries s(1, Basis::P, {}, weight);
  s.add({}, f);
  return s;
}

}  // namespace

TEST_CASE("linear functions solve KP") {
  const auto r = kp_residuals(series(t({2}) + t({1}, CycloNumber(ratio(5, 2))), 10));
  CHECK(r.eq1.is_zero());
  CHECK(r.eq2.is_zero());
}

TEST_CASE("a quadratic term is detected") {
  const auto r = kp_residuals(series(t({2, 2}), 10));
  CHECK(!r.eq1.is_zero());
}

TEST_CASE("log of the one-family classical tau function") {
  // exp(t_1) is a tau function: F = t_1
  TimesSeries s(1, Basis::P, {}, 8);
  GradedPoly<CycloNumber> e(1, Basis::P);
  for (int k = 0; k <= 8; ++k) {
    e.add_term(time_monomial(std::vector<int>(static_cast<std::size_t>(k), 1)),
               CycloNumber(Rational(1) / Rational(factorial(k))));
  }
  s.add({}, e);
  CHECK(s.log().coeff({}) == t({1}));
}

TEST_CASE("generating function satisfies KP in each family") {
  for (int m = 1; m <= 2; ++m) {
    for (const auto& rep : kp_check(m, 11, std::vector<int>(static_cast<std::size_t>(m), 2))) {
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("perturbation is caught") {
  for (const auto& rep : kp_check(2, 11, {2, 2}, true)) CHECK(!rep.ok());
}

TEST_CASE("restriction rejects bad families") {
  const auto h = evolve(2, 2, {1, 1});
  CHECK_THROWS_AS(restrict_to_family(h, 2), std::invalid_argument);
}

TEST_CASE("at beta = 0 the restricted free energy is t_1") {
  for (int m = 1; m <= 3; ++m) {
    const auto h = evolve(m, 6, std::vector<int>(static_cast<std::size_t>(m), 0));
    for (int alpha = 0; alpha < m; ++alpha) {
      const auto f = restrict_to_family(h, alpha);
      CHECK(f.coeff(std::vector<int>(static_cast<std::size_t>(m), 0)) == t({1}));
    }
  }
}
