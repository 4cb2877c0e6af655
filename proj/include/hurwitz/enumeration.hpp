#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/partitions.hpp"
#include "hurwitz/polyring.hpp"
#include "hurwitz/rational.hpp"
#include "hurwitz/wreath.hpp"

namespace hurwitz {

/// Numbers (n_0, ..., n_{m-1}) of reflections drawn from each reflection class.
struct Profile {
  std::vector<int> counts;

  Profile() = default;
  explicit Profile(std::vector<int> c);
  static Profile zero(int m) { return Profile(std::vector<int>(static_cast<std::size_t>(m), 0)); }

  int colors() const { return static_cast<int>(counts.size()); }
  int total() const;
  int operator[](std::size_t i) const { return counts[i]; }
  /// Class indices in canonical word order: n_0 zeros, then n_1 ones, ...
  std::vector<int> word() const;
  /// prod_i n_i!
  Integer factorial_product() const;

  auto operator<=>(const Profile&) const = default;
  bool operator==(const Profile&) const = default;

  /// "2,0,1"
  std::string to_string() const;
  static Profile parse(const std::string& text);
};

/// All profiles with 0 <= n_i <= orders[i], lexicographic.
std::vector<Profile> profiles_up_to(const std::vector<int>& orders);
/// All profiles of m classes with total count at most max_total.
std::vector<Profile> profiles_with_total_at_most(int m, int max_total);

/// Enumeration is the class-coordinate DP; BruteForce scans reflection sequences.
enum class Engine { Enumeration, CutJoin, Schur, BruteForce };
std::string engine_name(Engine e);
/// Throws std::invalid_argument for unknown names.
Engine parse_engine(const std::string& name);

/// Hurwitz numbers keyed by (profile, colored partition), tagged with the
/// engine that produced them. Stored zeros are meaningful (computed values).
class HurwitzTable {
 public:
  using Key = std::pair<Profile, ColoredPartition>;

  HurwitzTable(int m, Engine engine) : m_(m), engine_(engine) {}

  int colors() const { return m_; }
  Engine engine() const { return engine_; }
  const std::map<Key, Rational>& entries() const { return entries_; }
  void set(const Profile& p, const ColoredPartition& lambda, const Rational& value);
  bool contains(const Profile& p, const ColoredPartition& lambda) const;
  /// Throws std::out_of_range if the entry was never computed.
  const Rational& at(const Profile& p, const ColoredPartition& lambda) const;
  std::size_t size() const { return entries_.size(); }

 private:
  int m_;
  Engine engine_;
  std::map<Key, Rational> entries_;
};

struct TableDiff {
  HurwitzTable::Key key;
  bool in_a = false;
  bool in_b = false;
  Rational a;
  Rational b;
};

/// Entries present in exactly one table or differing in value.
std::vector<TableDiff> diff_tables(const HurwitzTable& a, const HurwitzTable& b);

/// Budget for element-level scans, in elementary steps.
constexpr std::uint64_t kEnumerationBudget = 100'000'000;

/// Product of the sizes of the prescribed classes over the word: the number of
/// reflection sequences a brute-force scan visits.
std::uint64_t sequence_count(int m, int n, const std::vector<int>& word);

/// Brute force over reflection sequences in the fixed class order given by
/// word; returns #{sequences with product in C_lambda} / (m^n n!).
/// Throws std::length_error if |G| * sequence_count exceeds the budget.
Rational hurwitz_bruteforce_word(int m, int n, const std::vector<int>& word, const ColoredPartition& lambda,
                                 std::uint64_t budget = kEnumerationBudget);
/// Same scan, single-threaded. Reference for the OpenMP version.
Rational hurwitz_bruteforce_word_serial(int m, int n, const std::vector<int>& word, const ColoredPartition& lambda,
                                        std::uint64_t budget = kEnumerationBudget);
/// hurwitz_bruteforce_word in the canonical word order of the profile.
Rational hurwitz_bruteforce(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                            std::uint64_t budget = kEnumerationBudget);
/// hurwitz_bruteforce for every colored partition of n and every profile.
HurwitzTable hurwitz_table_bruteforce(int m, int n, const std::vector<Profile>& profiles,
                                      std::uint64_t budget = kEnumerationBudget);
/// Counts sequences with n_i factors from class i in every interleaving of the
/// classes (multinomial(M; n_0..n_{m-1}) times the fixed-order count), / (m^n n!).
Rational hurwitz_all_interleavings(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                                   std::uint64_t budget = kEnumerationBudget);

enum class Side { Right, Left };

/// #{rho in reflection class i : sigma*rho in C_mu} (Side::Right) or rho*sigma (Side::Left).
int multiplicity(const WreathElement& sigma, const ColoredPartition& mu, int class_index, Side side = Side::Right);
/// multiplicity evaluated at the class representative of lambda.
int multiplicity(int m, const ColoredPartition& lambda, const ColoredPartition& mu, int class_index,
                 Side side = Side::Right);
/// Closed-form cut / join / Euler multiplicity from the part multiplicities.
Integer predicted_multiplicity(int m, const ColoredPartition& lambda, const ColoredPartition& mu, int class_index);

/// Matrix of multiplication by the class sum T_i in the normalized class-sum
/// basis of degree n: entry (mu, lambda) = <lambda|mu>_i.
SparseMatrix<Rational> t_matrix(int m, int n, int class_index);
SparseMatrix<Rational> t_matrix_serial(int m, int n, int class_index);

/// Class-coordinate dynamic programming: applies T_i n_i times to e.
Rational hurwitz_classdp(int m, int n, const Profile& profile, const ColoredPartition& lambda);
/// All colored partitions of n for every profile bounded by orders.
HurwitzTable hurwitz_table_classdp(int m, int n, const std::vector<Profile>& profiles);

/// Monodromy-tuple count: (1/|G|) #{(s_1..s_M, s_inf) : s_i in the prescribed
/// classes, s_1...s_M s_inf = 1, s_inf^{-1} in C_lambda}. Element-level DP.
Rational count_covers(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                      std::uint64_t budget = kEnumerationBudget);
Rational count_covers_serial(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                             std::uint64_t budget = kEnumerationBudget);

}  // namespace hurwitz
