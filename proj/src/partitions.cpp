#include "hurwitz/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> c(static_cast<std::size_t>(size_) + 1, 0);
  for (int p : parts_) ++c[static_cast<std::size_t>(p)];
  return c;
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
  // Reverse lexicographic: the lexicographically larger part list comes first.
  if (std::lexicographical_compare(other.parts_.begin(), other.parts_.end(), parts_.begin(),
                                   parts_.end())) {
    return std::strong_ordering::less;
  }
  if (parts_ == other.parts_) return std::strong_ordering::equal;
  return std::strong_ordering::greater;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw std::invalid_argument("malformed partition: " + std::string(text));
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

ColoredPartition::ColoredPartition(std::vector<Partition> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw std::invalid_argument("colored partition needs m >= 1 colors");
  for (const auto& c : components_) total_ += c.size();
}

ColoredPartition ColoredPartition::empty(int m) {
  return ColoredPartition(std::vector<Partition>(static_cast<std::size_t>(m)));
}

ColoredPartition ColoredPartition::identity_type(int m, int n) {
  std::vector<Partition> comps(static_cast<std::size_t>(m));
  comps[0] = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
  return ColoredPartition(std::move(comps));
}

int ColoredPartition::length() const {
  int out = 0;
  for (const auto& c : components_) out += c.length();
  return out;
}

std::strong_ordering ColoredPartition::operator<=>(const ColoredPartition& other) const {
  return std::lexicographical_compare_three_way(components_.begin(), components_.end(),
                                                other.components_.begin(),
                                                other.components_.end());
}

std::string ColoredPartition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += '|';
    out += components_[i].to_string();
  }
  return out;
}

ColoredPartition ColoredPartition::parse(std::string_view text) {
  std::vector<Partition> comps;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = text.find('|', pos);
    if (bar == std::string_view::npos) {
      comps.push_back(Partition::parse(text.substr(pos)));
      break;
    }
    comps.push_back(Partition::parse(text.substr(pos, bar - pos)));
    pos = bar + 1;
  }
  return ColoredPartition(std::move(comps));
}

ColoredPartition merge(const ColoredPartition& a, const ColoredPartition& b) {
  if (a.colors() != b.colors()) throw std::invalid_argument("merging colored partitions of different m");
  std::vector<Partition> comps;
  comps.reserve(static_cast<std::size_t>(a.colors()));
  for (int c = 0; c < a.colors(); ++c) comps.push_back(merge(a[c], b[c]));
  return ColoredPartition(std::move(comps));
}

namespace {

void gen_partitions_rec(int remaining, int max_part, std::vector<int>& current,
                        std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    gen_partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> gen_partitions(int n) {
  if (n < 0) throw std::invalid_argument("gen_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> current;
  gen_partitions_rec(n, n, current, out);
  return out;
}

std::vector<ColoredPartition> gen_colored_partitions(int m, int n) {
  if (m < 1) throw std::invalid_argument("gen_colored_partitions: m must be positive");
  if (n < 0) throw std::invalid_argument("gen_colored_partitions: n must be nonnegative");
  std::vector<std::vector<Partition>> by_size(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) by_size[static_cast<std::size_t>(k)] = gen_partitions(k);

  std::vector<ColoredPartition> out;
  std::vector<Partition> current;
  std::function<void(int, int)> rec = [&](int color, int remaining) {
    if (color == m - 1) {
      for (const auto& p : by_size[static_cast<std::size_t>(remaining)]) {
        current.push_back(p);
        out.emplace_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      for (const auto& p : by_size[static_cast<std::size_t>(k)]) {
        current.push_back(p);
        rec(color + 1, remaining - k);
        current.pop_back();
      }
    }
  };
  rec(0, n);
  std::sort(out.begin(), out.end());
  return out;
}

int part_multiplicity(const Partition& p, int i) {
  if (i < 1) throw std::invalid_argument("part_multiplicity: i must be positive");
  return p.multiplicity(i);
}

ColoredBasis::ColoredBasis(int m, int n) : m_(m), n_(n), elements_(gen_colored_partitions(m, n)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
}

std::size_t ColoredBasis::index_of(const ColoredPartition& lambda) const {
  auto it = index_.find(lambda);
  if (it == index_.end()) {
    throw std::out_of_range("colored partition " + lambda.to_string() + " not in basis");
  }
  return it->second;
}

}  // namespace hurwitz
