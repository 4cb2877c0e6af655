#include "hurwitz/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

void check_bijection(const std::vector<int>& images) {
  std::vector<char> seen(images.size(), 0);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images do not form a bijection");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

std::vector<std::vector<int>> cycles_of(const std::vector<int>& images) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(images.size(), 0);
  for (std::size_t start = 0; start < images.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(start);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = 1;
      cycle.push_back(x);
      x = images[static_cast<std::size_t>(x)];
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string cycles_to_string(const std::vector<std::vector<int>>& cycles) {
  std::string out;
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

WreathElement::WreathElement(int m, std::vector<int> perm, std::vector<int> colors)
    : m_(m), perm_(std::move(perm)), colors_(std::move(colors)) {
  if (m_ < 1) throw std::invalid_argument("wreath element needs m >= 1");
  if (colors_.size() != perm_.size()) throw std::invalid_argument("colors must have length n");
  check_bijection(perm_);
  for (int& c : colors_) c = mod(c, m_);
}

WreathElement WreathElement::identity(int m, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  return WreathElement(m, std::move(perm), std::vector<int>(static_cast<std::size_t>(n), 0));
}

WreathElement WreathElement::from_cycles(int m, int n, const std::vector<std::vector<int>>& cycles,
                                         std::vector<int> colors) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int from = c[i] - 1;
      int to = c[(i + 1) % c.size()] - 1;
      if (from < 0 || from >= n || to < 0 || to >= n) throw std::invalid_argument("cycle point out of range");
      perm[static_cast<std::size_t>(from)] = to;
    }
  }
  return WreathElement(m, std::move(perm), std::move(colors));
}

WreathElement WreathElement::operator*(const WreathElement& other) const {
  if (m_ != other.m_ || perm_.size() != other.perm_.size()) {
    throw std::invalid_argument("wreath product of elements from different groups");
  }
  const std::size_t n = perm_.size();
  std::vector<int> perm(n), colors(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto vk = static_cast<std::size_t>(other.perm_[k]);
    perm[k] = perm_[vk];
    colors[k] = colors_[vk] + other.colors_[k];
  }
  return WreathElement(m_, std::move(perm), std::move(colors));
}

WreathElement WreathElement::inverse() const {
  const std::size_t n = perm_.size();
  std::vector<int> inv(n), colors(n);
  for (std::size_t k = 0; k < n; ++k) inv[static_cast<std::size_t>(perm_[k])] = static_cast<int>(k);
  for (std::size_t k = 0; k < n; ++k) colors[k] = -colors_[static_cast<std::size_t>(inv[k])];
  return WreathElement(m_, std::move(inv), std::move(colors));
}

bool WreathElement::is_identity() const {
  for (std::size_t k = 0; k < perm_.size(); ++k) {
    if (perm_[k] != static_cast<int>(k) || colors_[k] != 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> WreathElement::cycles() const { return cycles_of(perm_); }

std::string WreathElement::to_string() const {
  std::string out = "[" + cycles_to_string(cycles()) + ";";
  for (std::size_t k = 0; k < colors_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(colors_[k]);
  }
  return out + "]";
}

BigPermutation::BigPermutation(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_);
}

BigPermutation BigPermutation::identity(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 0);
  return BigPermutation(std::move(images));
}

BigPermutation BigPermutation::operator*(const BigPermutation& other) const {
  if (images_.size() != other.images_.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[x] = images_[static_cast<std::size_t>(other.images_[x])];
  return BigPermutation(std::move(out));
}

BigPermutation BigPermutation::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t x = 0; x < out.size(); ++x) out[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
  return BigPermutation(std::move(out));
}

bool BigPermutation::commutes_with(const BigPermutation& other) const {
  if (images_.size() != other.images_.size()) return false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[static_cast<std::size_t>(other.images_[x])] != other.images_[static_cast<std::size_t>(images_[x])]) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> BigPermutation::cycles() const { return cycles_of(images_); }

std::string BigPermutation::to_string() const { return cycles_to_string(cycles()); }

BigPermutation tau(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("tau needs m, n >= 1");
  std::vector<int> images(static_cast<std::size_t>(m * n));
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j + n * k)] = j + n * ((k + 1) % m);
  }
  return BigPermutation(std::move(images));
}

BigPermutation embed(const WreathElement& x) {
  const int m = x.m(), n = x.n();
  std::vector<int> images(static_cast<std::size_t>(m * n));
  for (int k = 0; k < m; ++k) {
    for (int j = 0; j < n; ++j) {
      const auto js = static_cast<std::size_t>(j);
      images[static_cast<std::size_t>(j + n * k)] = x.perm()[js] + n * ((k + x.colors()[js]) % m);
    }
  }
  return BigPermutation(std::move(images));
}

WreathElement unembed(int m, int n, const BigPermutation& p) {
  if (p.size() != m * n || !p.commutes_with(tau(m, n))) {
    throw std::invalid_argument("permutation does not commute with tau");
  }
  std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    perm[static_cast<std::size_t>(j)] = p(j) % n;
    colors[static_cast<std::size_t>(j)] = p(j) / n;
  }
  return WreathElement(m, std::move(perm), std::move(colors));
}

ColoredPartition colored_type(const WreathElement& x) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(x.m()));
  for (const auto& cycle : x.cycles()) {
    int product = 0;
    for (int point : cycle) product += x.colors()[static_cast<std::size_t>(point)];
    parts[static_cast<std::size_t>(product % x.m())].push_back(static_cast<int>(cycle.size()));
  }
  std::vector<Partition> comps;
  comps.reserve(parts.size());
  for (auto& p : parts) comps.push_back(Partition::from_unsorted(std::move(p)));
  return ColoredPartition(std::move(comps));
}

ColoredPartition beta_type(int m, int n, const BigPermutation& p) {
  const BigPermutation t = tau(m, n);
  if (p.size() != m * n || !p.commutes_with(t)) {
    throw std::invalid_argument("beta_type: permutation does not commute with tau");
  }
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(m));
  std::vector<char> done(static_cast<std::size_t>(m * n), 0);
  for (int x = 0; x < m * n; ++x) {
    if (done[static_cast<std::size_t>(x)]) continue;
    // Walk until the orbit re-enters the tau-orbit of x; then p^k(x) = tau^alpha(x).
    int y = x, k = 0;
    do {
      y = p(y);
      ++k;
    } while (y % n != x % n);
    const int alpha = mod(y / n - x / n, m);
    // The family is the union of the tau-translates of the cycle through x.
    int marked = 0;
    for (int s = 0, start = x; s < m; ++s, start = t(start)) {
      int z = start;
      while (!done[static_cast<std::size_t>(z)]) {
        done[static_cast<std::size_t>(z)] = 1;
        ++marked;
        z = p(z);
      }
    }
    if (marked != m * k) throw std::logic_error("beta_type: inconsistent beta family size");
    parts[static_cast<std::size_t>(alpha)].push_back(k);
  }
  std::vector<Partition> comps;
  for (auto& part : parts) comps.push_back(Partition::from_unsorted(std::move(part)));
  return ColoredPartition(std::move(comps));
}

std::string Reflection::label() const {
  if (kind == Kind::R) {
    return "r(" + std::to_string(i) + "," + std::to_string(j) + ")^" + std::to_string(power);
  }
  return "l(" + std::to_string(i) + ")^" + std::to_string(power);
}

Reflection reflection_r(int m, int n, int i, int j, int alpha) {
  if (!(1 <= i && i < j && j <= n)) throw std::invalid_argument("reflection_r needs 1 <= i < j <= n");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[static_cast<std::size_t>(i - 1)], perm[static_cast<std::size_t>(j - 1)]);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  colors[static_cast<std::size_t>(i - 1)] = alpha;
  colors[static_cast<std::size_t>(j - 1)] = -alpha;
  return Reflection{Reflection::Kind::R, i, j, mod(alpha, m), WreathElement(m, std::move(perm), std::move(colors))};
}

Reflection reflection_l(int m, int n, int i, int k) {
  if (!(1 <= i && i <= n) || !(1 <= k && k < m)) throw std::invalid_argument("reflection_l needs 1 <= i <= n, 1 <= k < m");
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  colors[static_cast<std::size_t>(i - 1)] = k;
  WreathElement e = WreathElement::identity(m, n);
  return Reflection{Reflection::Kind::L, i, 0, k, WreathElement(m, e.perm(), std::move(colors))};
}

std::vector<Reflection> all_reflections(int m, int n) {
  std::vector<Reflection> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int alpha = 0; alpha < m; ++alpha) out.push_back(reflection_r(m, n, i, j, alpha));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k < m; ++k) out.push_back(reflection_l(m, n, i, k));
  }
  return out;
}

std::vector<Reflection> reflections_in_class(int m, int n, int class_index) {
  if (class_index < 0 || class_index >= m) throw std::invalid_argument("reflection class index out of range");
  std::vector<Reflection> out;
  if (class_index == 0) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int alpha = 0; alpha < m; ++alpha) out.push_back(reflection_r(m, n, i, j, alpha));
      }
    }
  } else {
    for (int i = 1; i <= n; ++i) out.push_back(reflection_l(m, n, i, class_index));
  }
  return out;
}

Integer z_constant(const Partition& lambda) {
  Integer z = 1;
  auto c = lambda.multiplicities();
  for (std::size_t i = 1; i < c.size(); ++i) {
    z *= ipow(Integer(static_cast<long>(i)), c[i]) * factorial(c[i]);
  }
  return z;
}

Integer centralizer_order(int m, const ColoredPartition& lambda) {
  Integer out = 1;
  for (const auto& comp : lambda.components()) out *= z_constant(comp) * ipow(Integer(m), comp.length());
  return out;
}

Integer class_size(int m, const ColoredPartition& lambda) {
  if (lambda.colors() != m) throw std::invalid_argument("class_size: colored partition has wrong m");
  const int n = lambda.total();
  return ipow(Integer(m), n) * factorial(n) / centralizer_order(m, lambda);
}

WreathElement class_representative(int m, const ColoredPartition& lambda) {
  const int n = lambda.total();
  std::vector<int> perm(static_cast<std::size_t>(n)), colors(static_cast<std::size_t>(n), 0);
  int cur = 0;
  for (int alpha = 0; alpha < lambda.colors(); ++alpha) {
    for (int len : lambda[static_cast<std::size_t>(alpha)].parts()) {
      for (int t = 0; t < len; ++t) perm[static_cast<std::size_t>(cur + t)] = cur + (t + 1) % len;
      colors[static_cast<std::size_t>(cur)] = alpha;
      cur += len;
    }
  }
  return WreathElement(m, std::move(perm), std::move(colors));
}

GroupEnumerator::GroupEnumerator(int m, int n, std::uint64_t budget) : m_(m), n_(n) {
  if (m < 1 || n < 0) throw std::invalid_argument("GroupEnumerator needs m >= 1, n >= 0");
  colorings_ = 1;
  size_ = 1;
  for (int i = 0; i < n; ++i) {
    colorings_ *= static_cast<std::uint64_t>(m);
    size_ *= static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(i + 1);
    if (size_ > budget) throw std::length_error("group enumeration exceeds budget");
  }
}

WreathElement GroupEnumerator::at(std::uint64_t index) const {
  std::uint64_t perm_rank = index / colorings_;
  std::uint64_t color_code = index % colorings_;
  // Lehmer code, most significant digit first.
  std::vector<int> pool(static_cast<std::size_t>(n_));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<std::uint64_t> fact(static_cast<std::size_t>(n_) + 1, 1);
  for (int i = 1; i <= n_; ++i) fact[static_cast<std::size_t>(i)] = fact[static_cast<std::size_t>(i - 1)] * static_cast<std::uint64_t>(i);
  std::vector<int> perm;
  perm.reserve(static_cast<std::size_t>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    std::uint64_t f = fact[static_cast<std::size_t>(i)];
    auto digit = static_cast<std::size_t>(perm_rank / f);
    perm_rank %= f;
    perm.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  std::vector<int> colors(static_cast<std::size_t>(n_));
  for (int k = 0; k < n_; ++k) {
    colors[static_cast<std::size_t>(k)] = static_cast<int>(color_code % static_cast<std::uint64_t>(m_));
    color_code /= static_cast<std::uint64_t>(m_);
  }
  return WreathElement(m_, std::move(perm), std::move(colors));
}

std::uint64_t GroupEnumerator::index_of(const WreathElement& x) const {
  std::uint64_t rank = 0;
  const auto& perm = x.perm();
  for (int i = 0; i < n_; ++i) {
    std::uint64_t smaller = 0;
    for (int j = i + 1; j < n_; ++j) smaller += perm[static_cast<std::size_t>(j)] < perm[static_cast<std::size_t>(i)];
    rank = rank * static_cast<std::uint64_t>(n_ - i) + smaller;
  }
  std::uint64_t code = 0;
  for (int k = n_ - 1; k >= 0; --k) code = code * static_cast<std::uint64_t>(m_) + static_cast<std::uint64_t>(x.colors()[static_cast<std::size_t>(k)]);
  return rank * colorings_ + code;
}

void GroupEnumerator::for_each(const std::function<void(const WreathElement&)>& fn) const {
  for (std::uint64_t i = 0; i < size_; ++i) fn(at(i));
}

std::vector<WreathElement> enumerate_group(int m, int n, std::uint64_t budget) {
  GroupEnumerator e(m, n, budget);
  std::vector<WreathElement> out;
  out.reserve(e.size());
  e.for_each([&](const WreathElement& x) { out.push_back(x); });
  return out;
}

}  // namespace hurwitz
