#include <doctest.h>

#include "hurwitz/enumeration.hpp"
#include "hurwitz/verify.hpp"
#include "support.hpp"

using namespace hurwitz;
using testing_support::uniform;

TEST_CASE("profiles") {
  CHECK(Profile::parse("2,0,1").word() == std::vector<int>{0, 0, 2});
  CHECK(Profile({2, 3}).factorial_product() == 12);
  CHECK(profiles_up_to({1, 2}).size() == 6);
  CHECK(profiles_with_total_at_most(2, 2).size() == 6);
  CHECK_THROWS(Profile::parse("1,x"));
}

TEST_CASE("zero profile gives 1/(m^n n!) at the identity class") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const Rational id = hurwitz_classdp(m, n, Profile::zero(m), ColoredPartition::identity_type(m, n));
      CHECK(id == Rational(1) / Rational(ipow(Integer(m), n) * factorial(n)));
    }
  }
}

TEST_CASE("classical values at m = 1") {
  // one transposition in S_2: 1/2; two transpositions giving a 3-cycle in S_3: 6/6 = 1
  CHECK(hurwitz_classdp(1, 2, Profile({1}), ColoredPartition::parse("2")) == ratio(1, 2));
  CHECK(hurwitz_classdp(1, 3, Profile({2}), ColoredPartition::parse("3")) == 1);
}

TEST_CASE("brute force, cover count and class DP agree") {
  CHECK(check_bruteforce(2, 2, 2).pass());
  CHECK(check_bruteforce(3, 2, 1).pass());
}

TEST_CASE("serial and parallel kernels agree") {
  for (int trial = 0; trial < 6; ++trial) {
    const int m = uniform(1, 3), n = uniform(1, 3);
    const auto lambda = testing_support::random_colored(m, n);
    std::vector<int> word;
    for (int k = uniform(0, 2); k > 0; --k) word.push_back(uniform(0, m - 1));
    CHECK(hurwitz_bruteforce_word(m, n, word, lambda) == hurwitz_bruteforce_word_serial(m, n, word, lambda));
    const Profile p = profiles_with_total_at_most(m, 2)[static_cast<std::size_t>(uniform(0, m))];
    CHECK(count_covers(m, n, p, lambda) == count_covers_serial(m, n, p, lambda));
    const int cls = uniform(0, m - 1);
    CHECK(t_matrix(m, n, cls) == t_matrix_serial(m, n, cls));
  }
}

TEST_CASE("all interleavings equal multinomial times the fixed word") {
  const Profile p({1, 1});
  for (const auto& lambda : gen_colored_partitions(2, 2)) {
    CHECK(hurwitz_all_interleavings(2, 2, p, lambda) == 2 * hurwitz_bruteforce(2, 2, p, lambda));
  }
}

TEST_CASE("budget is enforced") {
  CHECK_THROWS_AS(hurwitz_bruteforce(3, 4, Profile({4, 0, 0}), ColoredPartition::identity_type(3, 4), 1000),
                  std::length_error);
}

TEST_CASE("multiplicities match the cut/join/Euler formulas") {
  CHECK(check_multiplicities(2, 3).pass());
  CHECK(check_multiplicities(3, 2).pass());
}

TEST_CASE("table diffs") {
  HurwitzTable a(2, Engine::Enumeration), b(2, Engine::Schur);
  const Profile p({1, 0});
  const auto x = ColoredPartition::parse("2|-");
  a.set(p, x, ratio(1, 4));
  b.set(p, x, ratio(1, 4));
  CHECK(diff_tables(a, b).empty());
  b.set(p, ColoredPartition::parse("1|1"), 0);
  CHECK(diff_tables(a, b).size() == 1);
  CHECK(parse_engine(engine_name(Engine::BruteForce)) == Engine::BruteForce);
  CHECK_THROWS_AS(parse_engine("abacus"), std::invalid_argument);
}

TEST_CASE("the count does not depend on the order of the word") {
  for (int trial = 0; trial < 8; ++trial) {
    const int m = uniform(2, 3), n = uniform(1, 3);
    std::vector<int> word;
    for (int k = uniform(2, 3); k > 0; --k) word.push_back(uniform(0, m - 1));
    std::vector<int> shuffled = word;
    std::shuffle(shuffled.begin(), shuffled.end(), testing_support::rng());
    const auto lambda = testing_support::random_colored(m, n);
    CHECK(hurwitz_bruteforce_word(m, n, word, lambda) == hurwitz_bruteforce_word(m, n, shuffled, lambda));
  }
}
