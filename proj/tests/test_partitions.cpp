#include <doctest.h>

#include <set>

#include "hurwitz/partitions.hpp"
#include "support.hpp"

using namespace hurwitz;

TEST_CASE("partition counts follow p(n)") {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) CHECK(gen_partitions(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("canonical order is reverse lexicographic") {
  const auto p4 = gen_partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == Partition({4}));
  CHECK(p4[1] == Partition({3, 1}));
  CHECK(p4.back() == Partition({1, 1, 1, 1}));
  for (std::size_t i = 1; i < p4.size(); ++i) CHECK(p4[i - 1] < p4[i]);
}

TEST_CASE("partition validation and parsing") {
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK(Partition::from_unsorted({1, 3, 2}) == Partition({3, 2, 1}));
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("-").empty());
  CHECK(Partition({2, 2, 1}).multiplicity(2) == 2);
  CHECK(Partition({2, 2, 1}).size() == 5);
}

TEST_CASE("colored partitions: textual form round trip") {
  const auto lambda = ColoredPartition::parse("2,1|-|1");
  CHECK(lambda.colors() == 3);
  CHECK(lambda.total() == 4);
  CHECK(lambda.length() == 3);
  CHECK(lambda.to_string() == "2,1|-|1");
  CHECK(ColoredPartition::identity_type(2, 3).to_string() == "1,1,1|-");
  for (int trial = 0; trial < 50; ++trial) {
    const int m = testing_support::uniform(1, 4);
    const auto x = testing_support::random_colored(m, testing_support::uniform(0, 5));
    CHECK(ColoredPartition::parse(x.to_string()) == x);
  }
}

TEST_CASE("colored partition counts") {
  // m = 2: 1, 2, 5, 10, 20; m = 3: 1, 3, 9, 22.
  const std::size_t two[] = {1, 2, 5, 10, 20};
  const std::size_t three[] = {1, 3, 9, 22};
  for (int n = 0; n <= 4; ++n) CHECK(gen_colored_partitions(2, n).size() == two[n]);
  for (int n = 0; n <= 3; ++n) CHECK(gen_colored_partitions(3, n).size() == three[n]);
  const auto all = gen_colored_partitions(3, 3);
  CHECK(std::set<ColoredPartition>(all.begin(), all.end()).size() == all.size());
}

TEST_CASE("basis indexing is a bijection") {
  const ColoredBasis b(2, 4);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(b.index_of(b.at_index(i)) == i);
  CHECK_THROWS(b.index_of(ColoredPartition::parse("1|1")));
}

TEST_CASE("merge is the multiset union") {
  const auto a = ColoredPartition::parse("2|1");
  const auto b = ColoredPartition::parse("2,1|-");
  CHECK(merge(a, b) == ColoredPartition::parse("2,2,1|1"));
  CHECK(merge(a, ColoredPartition::empty(2)) == a);
}
