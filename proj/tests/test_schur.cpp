#include <doctest.h>

#include "hurwitz/schur.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

TEST_CASE("Jacobi-Trudi agrees with Murnaghan-Nakayama") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& lambda : gen_partitions(n)) CHECK(schur_in_powersums(lambda) == schur_character_sum(lambda));
  }
}

TEST_CASE("characters") {
  CHECK(character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
  CHECK(character(Partition({2, 1}), Partition({3})) == -1);
  CHECK(character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
  // s_lambda(delta) = dim / n!
  CHECK(schur_at_delta(Partition({2, 1})) == ratio(1, 3));
  CHECK(schur_at_delta(Partition({3, 2})) == ratio(5, 120));
}

TEST_CASE("budget") { CHECK_THROWS_AS(schur_in_powersums(Partition({11})), std::length_error); }

TEST_CASE("eigenvalues") {
  // single part of color 0, size 2: c0 = (m/2) * 2 * (2 - 2 + 1) = m
  for (int m = 1; m <= 3; ++m) {
    std::vector<Partition> comps(static_cast<std::size_t>(m));
    comps[0] = Partition({2});
    CHECK(eigen(m, ColoredPartition(comps)).c0 == m);
  }
  const auto e = eigen(2, ColoredPartition::parse("1|2"));
  REQUIRE(e.ck.size() == 1);
  CHECK(e.ck[0] == CycloNumber(-1));
}

TEST_CASE("c_k and c_{m-k} are complex conjugates") {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& lambda : gen_colored_partitions(m, 3)) {
      const auto e = eigen(m, lambda);
      for (int k = 1; k < m; ++k) {
        CHECK(e.ck[static_cast<std::size_t>(k - 1)].conj() == e.ck[static_cast<std::size_t>(m - k - 1)]);
      }
    }
  }
}

TEST_CASE("colored Schur functions are eigenvectors") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) CHECK(check_eigen(m, n).pass());
  }
  CHECK(check_m2_cj1(3).pass());
}

TEST_CASE("dropping the factor 1/2 in c0 breaks the relation") {
  CHECK(!verify_eigenvector(2, 2, kDftSign, false).ok());
}

TEST_CASE("Cauchy identity") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) CHECK(cauchy_check(m, n));
  }
}

TEST_CASE("closed form agrees with the other engines") {
  CHECK(check_triple_engine(2, 3, 2).pass());
  CHECK(check_triple_engine(3, 2, 2).pass());
}
