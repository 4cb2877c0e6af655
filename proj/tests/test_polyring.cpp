#include <doctest.h>

#include "hurwitz/polyring.hpp"
#include "hurwitz/series.hpp"
#include "support.hpp"

using namespace hurwitz;
using Poly = GradedPoly<Rational>;
using testing_support::uniform;

namespace {

Poly random_poly(int m, int max_degree) {
  Poly p(m);
  const int terms = uniform(0, 4);
  for (int t = 0; t < terms; ++t) {
    p.add_term(testing_support::random_colored(m, uniform(0, max_degree)), ratio(uniform(-6, 6), uniform(1, 3)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring axioms on random polynomials") {
  for (int trial = 0; trial < 60; ++trial) {
    const int m = uniform(1, 3);
    const Poly a = random_poly(m, 3), b = random_poly(m, 3), c = random_poly(m, 3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).empty());
  }
}

TEST_CASE("zero coefficients are dropped") {
  Poly p = Poly::variable(2, 0, 1);
  p.add_term(ColoredPartition::parse("1|-"), Rational(-1));
  CHECK(p.empty());
  CHECK(p == Poly(2));
}

TEST_CASE("derivatives follow the product rule") {
  for (int trial = 0; trial < 60; ++trial) {
    const int m = uniform(1, 3);
    const Poly a = random_poly(m, 3), b = random_poly(m, 3);
    const int family = uniform(0, m - 1), k = uniform(1, 3);
    CHECK(partial(a * b, family, k) == partial(a, family, k) * b + a * partial(b, family, k));
  }
  // d/dp_2 of p_2^3 = 3 p_2^2
  const Poly p2 = Poly::variable(1, 0, 2);
  CHECK(partial(p2 * p2 * p2, 0, 2) == (p2 * p2).scaled(Rational(3)));
}

TEST_CASE("grading and truncation") {
  const Poly p = Poly::variable(2, 0, 1) + Poly::variable(2, 1, 3) * Poly::variable(2, 0, 2);
  CHECK(p.max_degree() == 5);
  CHECK(p.homogeneous_component(1) == Poly::variable(2, 0, 1));
  CHECK(p.truncated(4) == Poly::variable(2, 0, 1));
  CHECK(p.mul_truncated(p, 5) == (p * p).truncated(5));
  CHECK(Poly::variable(1, 0, 2).to_string().find("p0_2") != std::string::npos);
}

TEST_CASE("mixing bases is rejected") {
  CHECK_THROWS(Poly::variable(2, 0, 1) + Poly::variable(2, 0, 1, Basis::U));
}

TEST_CASE("sparse matrices") {
  auto a = SparseMatrix<Rational>::identity(3);
  a.set(0, 2, Rational(5));
  const auto b = a * a;
  CHECK(b.get(0, 2) == 10);
  CHECK(commutator(a, a).is_zero_matrix());
  CHECK(SparseMatrix<Rational>::identity(4).is_diagonal());
  CHECK(!a.is_diagonal());
  a.set(0, 2, Rational(0));
  CHECK(a == SparseMatrix<Rational>::identity(3));
}

TEST_CASE("linear operators: Euler field scales by degree") {
  const auto e = euler_field<Rational>(2, Basis::P);
  for (int trial = 0; trial < 30; ++trial) {
    const Poly p = random_poly(2, 4);
    for (int d = 0; d <= 4; ++d) {
      CHECK(e.apply(p.homogeneous_component(d)) == p.homogeneous_component(d).scaled(Rational(d)));
    }
  }
}

TEST_CASE("theta is invertible on class vectors") {
  ClassVector v{2, 2, {}};
  v.coeffs[ColoredPartition::parse("1|1")] = ratio(3, 2);
  v.coeffs[ColoredPartition::parse("2|-")] = Rational(-1);
  CHECK(theta_inv(theta(v), 2) == v);
}

TEST_CASE("formal series: exp and log are inverse") {
  FormalSeries<Rational> f(1, Basis::P, {2}, 4);
  f.add({0}, Poly::variable(1, 0, 1) + Poly::variable(1, 0, 2).scaled(ratio(1, 3)));
  f.add({1}, Poly::variable(1, 0, 1) * Poly::variable(1, 0, 1));
  f.add({2}, Poly::variable(1, 0, 3));
  const auto e = f.exp();
  CHECK(e.log() == f);
  CHECK(e.coeff({0}).coeff(ColoredPartition::parse("1,1")) == ratio(1, 2));
  CHECK_THROWS_AS(f.log(), std::domain_error);
}

TEST_CASE("formal series: exp of operators matches direct expansion") {
  // exp(beta E) p_1 = e^beta p_1
  const auto e = euler_field<Rational>(1, Basis::P);
  const auto s = exp_operators_apply<Rational>({e}, Poly::variable(1, 0, 1), {4}, 3);
  for (int k = 0; k <= 4; ++k) {
    CHECK(s.coeff({k}) == Poly::variable(1, 0, 1).scaled(Rational(1) / Rational(factorial(k))));
  }
}
