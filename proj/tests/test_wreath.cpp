#include <doctest.h>

#include "hurwitz/verify.hpp"
#include "hurwitz/wreath.hpp"
#include "support.hpp"

using namespace hurwitz;
using testing_support::random_element;
using testing_support::uniform;

TEST_CASE("product convention on a worked example") {
  // [(12);(1,0)] * [(12);(0,0)] = [id;(0,1)]
  const auto x = WreathElement::from_cycles(2, 2, {{1, 2}}, {1, 0});
  const auto y = WreathElement::from_cycles(2, 2, {{1, 2}}, {0, 0});
  CHECK(x * y == WreathElement(2, {0, 1}, {0, 1}));
}

TEST_CASE("group axioms on random elements") {
  for (int trial = 0; trial < 200; ++trial) {
    const int m = uniform(1, 4), n = uniform(1, 5);
    const auto a = random_element(m, n), b = random_element(m, n), c = random_element(m, n);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * a.inverse()).is_identity());
    CHECK((a.inverse() * a).is_identity());
    CHECK(a * WreathElement::identity(m, n) == a);
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(WreathElement(2, {0, 0}, {0, 0}), std::invalid_argument);
  CHECK(WreathElement(3, {0}, {4}).colors()[0] == 1);
  CHECK_THROWS_AS(WreathElement(2, {0}, {0}) * WreathElement(3, {0}, {0}), std::invalid_argument);
}

TEST_CASE("tau and the embedding") {
  CHECK(tau(2, 2).to_string() == "(1 3)(2 4)");
  CHECK(tau(1, 3).to_string() == "()");
  for (int trial = 0; trial < 100; ++trial) {
    const int m = uniform(1, 4), n = uniform(1, 4);
    const auto a = random_element(m, n), b = random_element(m, n);
    CHECK(embed(a * b) == embed(a) * embed(b));
    CHECK(embed(a).commutes_with(tau(m, n)));
    CHECK(unembed(m, n, embed(a)) == a);
    CHECK(beta_type(m, n, embed(a)) == colored_type(a));
  }
  CHECK_THROWS_AS(unembed(2, 2, BigPermutation({1, 0, 2, 3})), std::invalid_argument);
}

TEST_CASE("colored type is a class function") {
  for (int trial = 0; trial < 200; ++trial) {
    const int m = uniform(1, 4), n = uniform(1, 5);
    const auto x = random_element(m, n), g = random_element(m, n);
    CHECK(colored_type(g * x * g.inverse()) == colored_type(x));
  }
}

TEST_CASE("reflections") {
  const int m = 3, n = 3;
  const auto all = all_reflections(m, n);
  CHECK(all.size() == static_cast<std::size_t>(m * n * (n - 1) / 2 + n * (m - 1)));
  CHECK(reflections_in_class(m, n, 0).size() == 9);
  CHECK(reflections_in_class(m, n, 2).size() == 3);
  for (const auto& r : all) {
    const auto type = colored_type(r.element);
    if (r.class_index() == 0) {
      CHECK(type == ColoredPartition::parse("2,1|-|-"));
      CHECK((r.element * r.element).is_identity());
    } else {
      CHECK(type[static_cast<std::size_t>(r.class_index())] == Partition({1}));
    }
  }
}

TEST_CASE("class sizes sum to the group order") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 4; ++n) {
      Integer total = 0;
      for (const auto& lambda : gen_colored_partitions(m, n)) {
        total += class_size(m, lambda);
        CHECK(colored_type(class_representative(m, lambda)) == lambda);
      }
      CHECK(total == ipow(Integer(m), n) * factorial(n));
    }
  }
  // (2,2): 5 classes, sizes sum to 8; (3,1): three classes of size 1.
  CHECK(gen_colored_partitions(2, 2).size() == 5);
  for (const auto& lambda : gen_colored_partitions(3, 1)) CHECK(class_size(3, lambda) == 1);
}

TEST_CASE("enumerator ranks are a bijection") {
  const GroupEnumerator g(2, 3);
  CHECK(g.size() == 48);
  for (std::uint64_t i = 0; i < g.size(); ++i) CHECK(g.index_of(g.at(i)) == i);
  CHECK_THROWS_AS(GroupEnumerator(3, 12, 1000), std::length_error);
}

TEST_CASE("exhaustive structure checks on small groups") {
  CHECK(check_normalizer(2, 3).pass());
  CHECK(check_homomorphism(2, 3).pass());
  CHECK(check_conjugacy(3, 2).pass());
}
