#include <doctest.h>

#include "hurwitz/elsv.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("classical oracle examples") {
  CHECK(classical_bruteforce(Partition({1, 1, 1}), 0) == ratio(1, 6));
  CHECK(classical_bruteforce(Partition({2}), 1) == ratio(1, 2));
  // 3-cycles from two transpositions: 6 ordered pairs / 3!
  CHECK(classical_bruteforce(Partition({3}), 2) == 1);
  CHECK(classical_bruteforce(Partition({2, 1}), 2) == 0);
  CHECK_THROWS_AS(classical_bruteforce(Partition({7}), 1), std::length_error);
  CHECK_THROWS_AS(classical_bruteforce(Partition({2}), 6), std::length_error);
}

TEST_CASE("serial and parallel oracles agree") {
  for (int trial = 0; trial < 10; ++trial) {
    const auto mu = testing_support::random_partition(testing_support::uniform(1, 5));
    const int r = testing_support::uniform(0, 3);
    CHECK(classical_bruteforce(mu, r) == classical_bruteforce_serial(mu, r));
    CHECK(classical_bruteforce(mu, r, true) == classical_bruteforce_serial(mu, r, true));
  }
}

TEST_CASE("parity: nonzero only when r = |mu| + l(mu) mod 2") {
  for (int d = 1; d <= 4; ++d) {
    for (const auto& mu : gen_partitions(d)) {
      for (int r = 0; r <= 4; ++r) {
        if ((r + d + mu.length()) % 2) CHECK(is_zero(classical_bruteforce(mu, r)));
      }
    }
  }
}

TEST_CASE("connected numbers: log versus transitive count") {
  const auto table = classical_table(4, 4);
  const auto rep = verify_connected(table, 4);
  CHECK(rep.ok());
  // genus 0, degree 2, fully ramified: h°_{1}((2)) = 1/2; disconnected 1^2 at r = 2 is not connected
  CHECK(table.get_connected(Partition({2}), 1) == ratio(1, 2));
  CHECK(table.get_connected(Partition({1, 1}), 2) == ratio(1, 2));
  CHECK(table.get_connected(Partition({1, 1}), 0) == 0);
}

TEST_CASE("Euler weight identity") {
  CHECK(euler_weight_check(1, {}, 4).match);
  CHECK(euler_weight_check(2, {2}, 4).match);
  CHECK(euler_weight_check(3, {1, 1}, 3).match);
}

TEST_CASE("log H reduces to classical numbers per family") {
  const auto r1 = reduction_check(1, 4, {3});
  CHECK(r1.ok());
  const auto r2 = reduction_check(2, 3, {3, 2});
  CHECK(r2.ok());
  CHECK(r2.mixed_terms == 0);
  CHECK(!r2.rows.empty());
  const auto r3 = reduction_check(3, 2, {2, 1, 1});
  CHECK(r3.ok());
}
