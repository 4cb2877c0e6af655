#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// An integer partition stored as a weakly decreasing list of positive parts.
///
/// Ordering: partitions compare reverse-lexicographically on their part lists,
/// so (4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1), and across sizes (1) < ().
/// This is the canonical basis order used by every operator matrix.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  /// Sorts the parts first; still rejects non-positive parts.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  /// Number of parts equal to i (the exponent c_i in 1^{c_1} 2^{c_2} ...).
  int multiplicity(int i) const;
  /// Multiplicity vector indexed 0..size(); entry 0 is always 0.
  std::vector<int> multiplicities() const;

  bool operator==(const Partition& other) const { return parts_ == other.parts_; }
  std::strong_ordering operator<=>(const Partition& other) const;

  /// "3,1,1" or "-" for the empty partition.
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Union of the parts of two partitions (multiset sum).
Partition merge(const Partition& a, const Partition& b);

/// An m-colored partition lambda_0 | ... | lambda_{m-1}.
class ColoredPartition {
 public:
  ColoredPartition() = default;
  explicit ColoredPartition(std::vector<Partition> components);
  /// The empty colored partition with m components.
  static ColoredPartition empty(int m);
  /// 1^n | - | ... | -, the type of the identity of G(m,1,n).
  static ColoredPartition identity_type(int m, int n);

  int colors() const { return static_cast<int>(components_.size()); }
  int total() const { return total_; }
  const Partition& operator[](std::size_t color) const { return components_[color]; }
  const std::vector<Partition>& components() const { return components_; }
  /// Total number of parts across all colors.
  int length() const;

  bool operator==(const ColoredPartition& other) const { return components_ == other.components_; }
  std::strong_ordering operator<=>(const ColoredPartition& other) const;

  /// "2,1|-|1"
  std::string to_string() const;
  /// Parses the textual form; the number of '|'-separated fields fixes m.
  static ColoredPartition parse(std::string_view text);

 private:
  std::vector<Partition> components_;
  int total_ = 0;
};

/// Componentwise multiset union (product of monomials p_a * p_b).
ColoredPartition merge(const ColoredPartition& a, const ColoredPartition& b);

/// All partitions of n in canonical order.
std::vector<Partition> gen_partitions(int n);

/// All m-colored partitions of total n in canonical order.
std::vector<ColoredPartition> gen_colored_partitions(int m, int n);

int part_multiplicity(const Partition& p, int i);

/// Indexed basis of the degree-n component: colored partitions of n with
/// index_of / at_index mutually inverse.
class ColoredBasis {
 public:
  ColoredBasis(int m, int n);

  int colors() const { return m_; }
  int degree() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const ColoredPartition& at_index(std::size_t i) const { return elements_.at(i); }
  /// Throws std::out_of_range for colored partitions outside the basis.
  std::size_t index_of(const ColoredPartition& lambda) const;
  bool contains(const ColoredPartition& lambda) const { return index_.count(lambda) != 0; }
  const std::vector<ColoredPartition>& elements() const { return elements_; }

 private:
  int m_;
  int n_;
  std::vector<ColoredPartition> elements_;
  std::map<ColoredPartition, std::size_t> index_;
};

}  // namespace hurwitz
