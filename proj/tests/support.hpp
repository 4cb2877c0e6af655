#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/wreath.hpp"

namespace testing_support {

// Fixed seeds keep failures reproducible.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline hurwitz::WreathElement random_element(int m, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng());
  for (auto& c : colors) c = uniform(0, m - 1);
  return hurwitz::WreathElement(m, perm, colors);
}

inline hurwitz::Partition random_partition(int n) {
  const auto all = hurwitz::gen_partitions(n);
  return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
}

inline hurwitz::ColoredPartition random_colored(int m, int n) {
  const auto all = hurwitz::gen_colored_partitions(m, n);
  return all[static_cast<std::size_t>(uniform(0, static_cast<int>(all.size()) - 1))];
}

}  // namespace testing_support
