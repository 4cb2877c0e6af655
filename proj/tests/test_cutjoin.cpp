#include <doctest.h>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/verify.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("combinatorial matrices match the differential-operator rules") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const auto fam = build_cj(m, n);
      for (int i = 0; i < m; ++i) {
        CHECK(fam.ops[static_cast<std::size_t>(i)] == cj_rule<Rational>(m, i).matrix(n));
      }
    }
  }
}

TEST_CASE("operators commute") {
  const auto fam = build_cj(3, 3);
  for (const auto& a : fam.ops) {
    for (const auto& b : fam.ops) CHECK(commutator(a, b).is_zero_matrix());
  }
}

TEST_CASE("CJ_i acts as the class sums") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) CHECK(check_diagram(m, n).pass());
  }
}

TEST_CASE("change of variables") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) CHECK(check_operator_identities(m, n).pass());
  }
  // the opposite root convention breaks the Euler-field identities at m = 3
  const DftReport flipped = verify_dft(3, 2, +1);
  CHECK(flipped.round_trip);
  CHECK(!flipped.ok());
}

TEST_CASE("p/u round trip on random polynomials") {
  for (int trial = 0; trial < 20; ++trial) {
    const int m = testing_support::uniform(1, 4);
    GradedPoly<CycloNumber> p(m);
    p.add_term(testing_support::random_colored(m, testing_support::uniform(1, 3)), CycloNumber(m, ratio(3, 7)));
    CHECK(u_to_p(p_to_u(p)) == p);
  }
}

TEST_CASE("generating function slices satisfy the cut-and-join equations") {
  for (int m = 1; m <= 3; ++m) CHECK(check_cj_pde(m, 3, std::vector<int>(static_cast<std::size_t>(m), 2)).pass());
}

TEST_CASE("initial condition") {
  const auto init = initial_condition(2, 2);
  CHECK(init.coeff(ColoredPartition::parse("1|-")) == ratio(1, 2));
  CHECK(init.coeff(ColoredPartition::parse("1,1|-")) == ratio(1, 8));
  const auto h = evolve(2, 2, {0, 0});
  CHECK(h.slices.at(Profile({0, 0})) == init);
}

TEST_CASE("evolve reproduces class DP values") {
  const auto t = evolve(2, 3, {2, 2}).table();
  for (const auto& [key, value] : t.entries()) {
    CHECK(hurwitz_classdp(2, key.second.total(), key.first, key.second) == value);
  }
}
