#include <doctest.h>

#include "hurwitz/cyclo.hpp"
#include "support.hpp"

using namespace hurwitz;
using testing_support::uniform;

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
  CHECK(euler_phi(12) == 4);
}

TEST_CASE("roots of unity") {
  for (int m = 1; m <= 8; ++m) {
    CHECK(CycloNumber::xi_pow(m, m) == CycloNumber(m, Rational(1)));
    CHECK(CycloNumber::xi_pow(m, -1) * CycloNumber::xi_pow(m, 1) == CycloNumber(1));
    // sum of all m-th roots vanishes for m > 1
    CycloNumber s(m, Rational(0));
    for (int k = 0; k < m; ++k) s += CycloNumber::xi_pow(m, k);
    CHECK(s == CycloNumber(m == 1 ? 1 : 0));
  }
  CHECK(CycloNumber::xi_pow(4, 2) == CycloNumber(-1));
  CHECK((CycloNumber::xi_pow(3, 1) + CycloNumber::xi_pow(3, 2)).rational_value() == -1);
}

TEST_CASE("field axioms on random elements") {
  for (int trial = 0; trial < 100; ++trial) {
    const int m = uniform(2, 7);
    auto random_value = [m] {
      std::vector<Rational> poly;
      for (int k = 0; k < m; ++k) poly.push_back(ratio(uniform(-5, 5), uniform(1, 4)));
      return CycloNumber(m, poly);
    };
    const CycloNumber a = random_value(), b = random_value(), c = random_value();
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == CycloNumber(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}

TEST_CASE("conductor handling") {
  CHECK(CycloNumber(ratio(1, 2)) + CycloNumber::xi_pow(3, 1) == CycloNumber(3, {ratio(1, 2), Rational(1)}));
  CHECK_THROWS(CycloNumber::xi_pow(3, 1) + CycloNumber::xi_pow(4, 1));
  CHECK_THROWS_AS(CycloNumber(3, Rational(0)).inverse(), std::domain_error);
  CHECK_THROWS_AS(CycloNumber::xi_pow(3, 1).rational_value(), std::domain_error);
  CHECK(root_sum(4, {{0, 1}, {2, 1}}).is_zero());
}

TEST_CASE("textual form") {
  CHECK(CycloNumber(3, {Rational(0), Rational(2)}).to_string().find('x') != std::string::npos);
  CHECK(CycloNumber(5, Rational(0)).to_string() == "0");
}
