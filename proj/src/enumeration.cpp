#include "hurwitz/enumeration.hpp"

#include <omp.h>

#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitz {

Profile::Profile(std::vector<int> c) : counts(std::move(c)) {
  if (counts.empty()) throw std::invalid_argument("profile needs at least one class");
  for (int x : counts) {
    if (x < 0) throw std::invalid_argument("profile counts must be nonnegative");
  }
}

int Profile::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

std::vector<int> Profile::word() const {
  std::vector<int> w;
  for (std::size_t i = 0; i < counts.size(); ++i) w.insert(w.end(), static_cast<std::size_t>(counts[i]), static_cast<int>(i));
  return w;
}

Integer Profile::factorial_product() const {
  Integer out = 1;
  for (int x : counts) out *= factorial(x);
  return out;
}

std::string Profile::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

Profile Profile::parse(const std::string& text) {
  std::vector<int> c;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed profile: " + text);
    }
    if (used != field.size()) throw std::invalid_argument("malformed profile: " + text);
    c.push_back(v);
  }
  return Profile(std::move(c));
}

std::vector<Profile> profiles_up_to(const std::vector<int>& orders) {
  std::vector<Profile> out;
  std::vector<int> cur(orders.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < orders[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (cur.empty()) return out;
  }
}

std::vector<Profile> profiles_with_total_at_most(int m, int max_total) {
  std::vector<Profile> out;
  for (auto& p : profiles_up_to(std::vector<int>(static_cast<std::size_t>(m), max_total))) {
    if (p.total() <= max_total) out.push_back(std::move(p));
  }
  return out;
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::Enumeration:
      return "enumeration";
    case Engine::CutJoin:
      return "cutjoin";
    case Engine::Schur:
      return "schur";
    case Engine::BruteForce:
      return "bruteforce";
  }
  return "?";
}

Engine parse_engine(const std::string& name) {
  if (name == "enumeration") return Engine::Enumeration;
  if (name == "cutjoin") return Engine::CutJoin;
  if (name == "schur") return Engine::Schur;
  if (name == "bruteforce") return Engine::BruteForce;
  throw std::invalid_argument("unknown engine: " + name);
}

void HurwitzTable::set(const Profile& p, const ColoredPartition& lambda, const Rational& value) {
  if (p.colors() != m_ || lambda.colors() != m_) throw std::invalid_argument("table entry has wrong m");
  entries_[{p, lambda}] = value;
}

bool HurwitzTable::contains(const Profile& p, const ColoredPartition& lambda) const {
  return entries_.count({p, lambda}) != 0;
}

const Rational& HurwitzTable::at(const Profile& p, const ColoredPartition& lambda) const {
  auto it = entries_.find({p, lambda});
  if (it == entries_.end()) {
    throw std::out_of_range("no entry for profile " + p.to_string() + ", class " + lambda.to_string());
  }
  return it->second;
}

std::vector<TableDiff> diff_tables(const HurwitzTable& a, const HurwitzTable& b) {
  std::vector<TableDiff> out;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() || (ia != a.entries().end() && ia->first < ib->first)) {
      out.push_back({ia->first, true, false, ia->second, 0});
      ++ia;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      out.push_back({ib->first, false, true, 0, ib->second});
      ++ib;
    } else {
      if (ia->second != ib->second) out.push_back({ia->first, true, true, ia->second, ib->second});
      ++ia;
      ++ib;
    }
  }
  return out;
}

namespace {

std::uint64_t group_order(int m, int n) {
  std::uint64_t g = 1;
  for (int i = 1; i <= n; ++i) g *= static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(i);
  return g;
}

void check_budget(std::uint64_t a, std::uint64_t b, std::uint64_t budget) {
  if (b != 0 && a > budget / b) throw std::length_error("enumeration budget exceeded");
}

std::vector<std::vector<WreathElement>> class_elements(int m, int n) {
  std::vector<std::vector<WreathElement>> out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    for (const auto& r : reflections_in_class(m, n, i)) out[static_cast<std::size_t>(i)].push_back(r.element);
  }
  return out;
}

void validate(int m, int n, const ColoredPartition& lambda) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
  if (lambda.colors() != m || lambda.total() != n) throw std::invalid_argument("colored partition does not match (m, n)");
}

void validate_word(int m, const std::vector<int>& word) {
  for (int c : word) {
    if (c < 0 || c >= m) throw std::invalid_argument("class index out of range");
  }
}

std::uint64_t dfs_count(const WreathElement& prefix, std::size_t pos, const std::vector<int>& word,
                        const std::vector<std::vector<WreathElement>>& classes, const ColoredPartition& lambda) {
  if (pos == word.size()) return colored_type(prefix) == lambda ? 1 : 0;
  std::uint64_t total = 0;
  for (const auto& r : classes[static_cast<std::size_t>(word[pos])]) {
    total += dfs_count(prefix * r, pos + 1, word, classes, lambda);
  }
  return total;
}

Rational normalize(std::uint64_t count, int m, int n) {
  return ratio(Integer(static_cast<unsigned long>(count)), ipow(Integer(m), n) * factorial(n));
}

}  // namespace

std::uint64_t sequence_count(int m, int n, const std::vector<int>& word) {
  std::uint64_t total = 1;
  for (int c : word) {
    const std::uint64_t size = c == 0 ? static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2
                                      : static_cast<std::uint64_t>(n);
    check_budget(total, size == 0 ? 1 : size, kEnumerationBudget * 1000);
    total *= size;
  }
  return total;
}

Rational hurwitz_bruteforce_word_serial(int m, int n, const std::vector<int>& word, const ColoredPartition& lambda,
                                        std::uint64_t budget) {
  validate(m, n, lambda);
  validate_word(m, word);
  check_budget(group_order(m, n), sequence_count(m, n, word), budget);
  const auto classes = class_elements(m, n);
  return normalize(dfs_count(WreathElement::identity(m, n), 0, word, classes, lambda), m, n);
}

Rational hurwitz_bruteforce_word(int m, int n, const std::vector<int>& word, const ColoredPartition& lambda,
                                 std::uint64_t budget) {
  validate(m, n, lambda);
  validate_word(m, word);
  check_budget(group_order(m, n), sequence_count(m, n, word), budget);
  if (word.empty()) return normalize(lambda == ColoredPartition::identity_type(m, n) ? 1 : 0, m, n);
  const auto classes = class_elements(m, n);
  const auto& first = classes[static_cast<std::size_t>(word[0])];
  const auto count = static_cast<std::int64_t>(first.size());
  std::uint64_t total = 0;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (std::int64_t i = 0; i < count; ++i) {
    total += dfs_count(first[static_cast<std::size_t>(i)], 1, word, classes, lambda);
  }
  return normalize(total, m, n);
}

Rational hurwitz_bruteforce(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                            std::uint64_t budget) {
  if (profile.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
  return hurwitz_bruteforce_word(m, n, profile.word(), lambda, budget);
}

HurwitzTable hurwitz_table_bruteforce(int m, int n, const std::vector<Profile>& profiles, std::uint64_t budget) {
  HurwitzTable table(m, Engine::BruteForce);
  for (const auto& p : profiles) {
    for (const auto& lambda : gen_colored_partitions(m, n)) table.set(p, lambda, hurwitz_bruteforce(m, n, p, lambda, budget));
  }
  return table;
}

Rational hurwitz_all_interleavings(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                                   std::uint64_t budget) {
  validate(m, n, lambda);
  if (profile.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
  const auto classes = class_elements(m, n);
  std::uint64_t all_refl = 0;
  for (const auto& c : classes) all_refl += c.size();
  std::uint64_t steps = group_order(m, n);
  for (int k = 0; k < profile.total(); ++k) {
    check_budget(steps, all_refl, budget);
    steps *= all_refl;
  }
  std::vector<int> remaining = profile.counts;
  std::uint64_t total = 0;
  std::function<void(const WreathElement&, int)> rec = [&](const WreathElement& prefix, int left) {
    if (left == 0) {
      if (colored_type(prefix) == lambda) ++total;
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (remaining[static_cast<std::size_t>(c)] == 0) continue;
      --remaining[static_cast<std::size_t>(c)];
      for (const auto& r : classes[static_cast<std::size_t>(c)]) rec(prefix * r, left - 1);
      ++remaining[static_cast<std::size_t>(c)];
    }
  };
  rec(WreathElement::identity(m, n), profile.total());
  return normalize(total, m, n);
}

int multiplicity(const WreathElement& sigma, const ColoredPartition& mu, int class_index, Side side) {
  int count = 0;
  for (const auto& r : reflections_in_class(sigma.m(), sigma.n(), class_index)) {
    const WreathElement prod = side == Side::Right ? sigma * r.element : r.element * sigma;
    if (colored_type(prod) == mu) ++count;
  }
  return count;
}

int multiplicity(int m, const ColoredPartition& lambda, const ColoredPartition& mu, int class_index, Side side) {
  return multiplicity(class_representative(m, lambda), mu, class_index, side);
}

namespace {

using PartCounts = std::map<std::pair<int, int>, int>;  // (size, color) -> count

PartCounts part_counts(const ColoredPartition& lambda) {
  PartCounts out;
  for (int a = 0; a < lambda.colors(); ++a) {
    for (int s : lambda[static_cast<std::size_t>(a)].parts()) ++out[{s, a}];
  }
  return out;
}

// Parts of a not in b, with multiplicity, as a flat list.
std::vector<std::pair<int, int>> difference(const PartCounts& a, const PartCounts& b) {
  std::vector<std::pair<int, int>> out;
  for (const auto& [part, c] : a) {
    auto it = b.find(part);
    const int extra = c - (it == b.end() ? 0 : it->second);
    for (int k = 0; k < extra; ++k) out.push_back(part);
  }
  return out;
}

}  // namespace

Integer predicted_multiplicity(int m, const ColoredPartition& lambda, const ColoredPartition& mu, int class_index) {
  if (lambda.colors() != m || mu.colors() != m || lambda.total() != mu.total()) {
    throw std::invalid_argument("predicted_multiplicity: mismatched colored partitions");
  }
  const PartCounts cl = part_counts(lambda);
  const PartCounts cm = part_counts(mu);
  const auto removed = difference(cl, cm);
  const auto added = difference(cm, cl);
  auto mod = [m](int x) { return ((x % m) + m) % m; };

  if (class_index == 0) {
    if (removed.size() == 1 && added.size() == 2) {
      const auto [s, delta] = removed[0];
      const auto [a, alpha] = added[0];
      const auto [b, gamma] = added[1];
      if (a + b != s || mod(alpha + gamma) != delta) return 0;
      const int c = cl.at(removed[0]);
      if (added[0] == added[1]) return Integer(s / 2 * c);
      return Integer(s * c);
    }
    if (removed.size() == 2 && added.size() == 1) {
      const auto [a, alpha] = removed[0];
      const auto [b, gamma] = removed[1];
      const auto [s, delta] = added[0];
      if (a + b != s || mod(alpha + gamma) != delta) return 0;
      const Integer ca = cl.at(removed[0]);
      if (removed[0] == removed[1]) return Integer(m) * a * a * ca * (ca - 1) / 2;
      return Integer(m) * a * b * ca * cl.at(removed[1]);
    }
    return 0;
  }
  if (removed.size() == 1 && added.size() == 1) {
    const auto [s, alpha] = removed[0];
    const auto [t, beta] = added[0];
    if (s != t || mod(alpha + class_index) != beta) return 0;
    return Integer(s * cl.at(removed[0]));
  }
  return 0;
}

namespace {

SparseMatrix<Rational>::Column t_column(int m, const ColoredBasis& basis, std::size_t j,
                                        const std::vector<WreathElement>& refl) {
  const WreathElement sigma = class_representative(m, basis.at_index(j));
  std::map<std::size_t, int> counts;
  for (const auto& r : refl) ++counts[basis.index_of(colored_type(sigma * r))];
  SparseMatrix<Rational>::Column col;
  for (const auto& [i, c] : counts) col.emplace(i, Rational(c));
  return col;
}

std::vector<WreathElement> class_refl(int m, int n, int class_index) {
  if (class_index < 0 || class_index >= m) throw std::invalid_argument("class index out of range");
  std::vector<WreathElement> out;
  for (const auto& r : reflections_in_class(m, n, class_index)) out.push_back(r.element);
  return out;
}

}  // namespace

SparseMatrix<Rational> t_matrix_serial(int m, int n, int class_index) {
  const ColoredBasis basis(m, n);
  const auto refl = class_refl(m, n, class_index);
  SparseMatrix<Rational> out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) out.set_column(j, t_column(m, basis, j, refl));
  return out;
}

SparseMatrix<Rational> t_matrix(int m, int n, int class_index) {
  const ColoredBasis basis(m, n);
  const auto refl = class_refl(m, n, class_index);
  SparseMatrix<Rational> out(basis.size(), basis.size());
  const auto dim = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t j = 0; j < dim; ++j) {
    auto col = t_column(m, basis, static_cast<std::size_t>(j), refl);
    out.set_column(static_cast<std::size_t>(j), std::move(col));
  }
  return out;
}

namespace {

struct ClassDP {
  int m;
  int n;
  ColoredBasis basis;
  std::vector<SparseMatrix<Rational>> t;
  std::map<Profile, std::vector<Rational>> memo;

  ClassDP(int m_, int n_) : m(m_), n(n_), basis(m_, n_) {
    for (int i = 0; i < m; ++i) t.push_back(t_matrix(m, n, i));
  }

  const std::vector<Rational>& vec(const Profile& p) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    std::vector<Rational> v;
    std::size_t i = 0;
    while (i < p.counts.size() && p.counts[i] == 0) ++i;
    if (i == p.counts.size()) {
      v.assign(basis.size(), Rational(0));
      v[basis.index_of(ColoredPartition::identity_type(m, n))] = 1;
    } else {
      Profile prev = p;
      --prev.counts[i];
      v = t[i].apply(vec(prev));
    }
    return memo.emplace(p, std::move(v)).first->second;
  }

  Rational value(const Profile& p, const ColoredPartition& lambda) {
    return vec(p)[basis.index_of(lambda)] / Rational(ipow(Integer(m), n) * factorial(n));
  }
};

}  // namespace

Rational hurwitz_classdp(int m, int n, const Profile& profile, const ColoredPartition& lambda) {
  validate(m, n, lambda);
  if (profile.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
  ClassDP dp(m, n);
  return dp.value(profile, lambda);
}

HurwitzTable hurwitz_table_classdp(int m, int n, const std::vector<Profile>& profiles) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m >= 1 and n >= 1");
  ClassDP dp(m, n);
  HurwitzTable table(m, Engine::Enumeration);
  for (const auto& p : profiles) {
    if (p.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
    for (const auto& lambda : dp.basis.elements()) table.set(p, lambda, dp.value(p, lambda));
  }
  return table;
}

namespace {

struct CoverDP {
  GroupEnumerator group;
  // pull[c][y] lists indices y * rho^{-1} for rho in class c.
  std::vector<std::vector<std::uint32_t>> pull_flat;
  std::vector<std::size_t> class_sizes;

  CoverDP(int m, int n, const Profile& profile, std::uint64_t budget) : group(m, n, budget) {
    const std::uint64_t g = group.size();
    std::uint64_t refl_total = 0;
    for (int c = 0; c < m; ++c) {
      if (profile.counts[static_cast<std::size_t>(c)] > 0) {
        refl_total += static_cast<std::uint64_t>(reflections_in_class(m, n, c).size()) *
                      static_cast<std::uint64_t>(profile.counts[static_cast<std::size_t>(c)]);
      }
    }
    check_budget(g, std::max<std::uint64_t>(refl_total, 1), budget);
    pull_flat.resize(static_cast<std::size_t>(m));
    class_sizes.resize(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
      if (profile.counts[static_cast<std::size_t>(c)] == 0) continue;
      std::vector<WreathElement> inv;
      for (const auto& r : reflections_in_class(m, n, c)) inv.push_back(r.element.inverse());
      class_sizes[static_cast<std::size_t>(c)] = inv.size();
      auto& table = pull_flat[static_cast<std::size_t>(c)];
      table.resize(g * inv.size());
      for (std::uint64_t y = 0; y < g; ++y) {
        const WreathElement ey = group.at(y);
        for (std::size_t k = 0; k < inv.size(); ++k) {
          table[y * inv.size() + k] = static_cast<std::uint32_t>(group.index_of(ey * inv[k]));
        }
      }
    }
  }

  std::vector<std::uint64_t> step(const std::vector<std::uint64_t>& f, int c, bool parallel) const {
    const auto& table = pull_flat[static_cast<std::size_t>(c)];
    const std::size_t k = class_sizes[static_cast<std::size_t>(c)];
    std::vector<std::uint64_t> out(f.size(), 0);
    const auto g = static_cast<std::int64_t>(f.size());
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t y = 0; y < g; ++y) {
      std::uint64_t s = 0;
      const std::size_t base = static_cast<std::size_t>(y) * k;
      for (std::size_t r = 0; r < k; ++r) s += f[table[base + r]];
      out[static_cast<std::size_t>(y)] = s;
    }
    return out;
  }
};

Rational count_covers_impl(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                           std::uint64_t budget, bool parallel) {
  validate(m, n, lambda);
  if (profile.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
  CoverDP dp(m, n, profile, budget);
  std::vector<std::uint64_t> f(dp.group.size(), 0);
  f[dp.group.index_of(WreathElement::identity(m, n))] = 1;
  for (int c : profile.word()) f = dp.step(f, c, parallel);
  // Each product x fixes s_inf = x^{-1}; the tuple counts iff s_inf^{-1} = x lies in C_lambda.
  std::uint64_t total = 0;
  for (std::uint64_t x = 0; x < dp.group.size(); ++x) {
    if (f[x] == 0) continue;
    const WreathElement s_inf = dp.group.at(x).inverse();
    if (colored_type(s_inf.inverse()) == lambda) total += f[x];
  }
  return ratio(Integer(static_cast<unsigned long>(total)), Integer(static_cast<unsigned long>(dp.group.size())));
}

}  // namespace

Rational count_covers(int m, int n, const Profile& profile, const ColoredPartition& lambda, std::uint64_t budget) {
  return count_covers_impl(m, n, profile, lambda, budget, true);
}

Rational count_covers_serial(int m, int n, const Profile& profile, const ColoredPartition& lambda,
                             std::uint64_t budget) {
  return count_covers_impl(m, n, profile, lambda, budget, false);
}

}  // namespace hurwitz
