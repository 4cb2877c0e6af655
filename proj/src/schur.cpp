#include "hurwitz/schur.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hurwitz {

namespace {

using Poly1 = GradedPoly<Rational>;

Poly1 p_var(int k) { return Poly1::variable(1, 0, k); }

// Complete homogeneous h_0..h_n from k h_k = sum_{r=1}^k p_r h_{k-r}.
std::vector<Poly1> complete_homogeneous(int n) {
  std::vector<Poly1> h;
  h.push_back(Poly1::constant(1, Rational(1)));
  for (int k = 1; k <= n; ++k) {
    Poly1 acc(1);
    for (int r = 1; r <= k; ++r) acc += p_var(r) * h[static_cast<std::size_t>(k - r)];
    h.push_back(acc.scaled(ratio(1, k)));
  }
  return h;
}

// det(h_{lambda_i - i + j}) by dynamic programming over sets of used columns.
Poly1 jacobi_trudi(const Partition& lambda) {
  const int l = lambda.length();
  if (l == 0) return Poly1::constant(1, Rational(1));
  const auto h = complete_homogeneous(lambda.size());
  auto entry = [&](int i, int j) -> const Poly1* {
    const int k = lambda[static_cast<std::size_t>(i)] - i + j;
    if (k < 0 || k > lambda.size()) return nullptr;
    return &h[static_cast<std::size_t>(k)];
  };
  std::map<unsigned, Poly1> layer;
  layer.emplace(0u, Poly1::constant(1, Rational(1)));
  for (int row = 0; row < l; ++row) {
    std::map<unsigned, Poly1> next;
    for (const auto& [mask, val] : layer) {
      for (int col = 0; col < l; ++col) {
        if (mask & (1u << col)) continue;
        const Poly1* e = entry(row, col);
        if (!e) continue;
        // Sign of the permutation grows with each used column to the right of col.
        int inversions = 0;
        for (int c = col + 1; c < l; ++c) inversions += (mask >> c) & 1u;
        Poly1 term = val * *e;
        if (inversions % 2) term = -term;
        auto [it, inserted] = next.try_emplace(mask | (1u << col), term);
        if (!inserted) it->second += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((1u << l) - 1u);
  return it == layer.end() ? Poly1(1) : it->second;
}

Integer mn_character(std::set<int> beads, const std::vector<int>& mu, std::size_t idx) {
  if (idx == mu.size()) return 1;
  const int k = mu[idx];
  Integer total = 0;
  for (int b : beads) {
    const int target = b - k;
    if (target < 0 || beads.count(target)) continue;
    int between = 0;
    for (int c : beads) between += (c > target && c < b);
    std::set<int> next = beads;
    next.erase(b);
    next.insert(target);
    const Integer sub = mn_character(std::move(next), mu, idx + 1);
    total += between % 2 ? Integer(-sub) : sub;
  }
  return total;
}

std::mutex& schur_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

const GradedPoly<Rational>& schur_in_powersums(const Partition& lambda) {
  if (lambda.size() > kSchurBudget) throw std::length_error("Schur expansion beyond budget");
  static std::map<Partition, std::unique_ptr<Poly1>> memo;
  {
    std::lock_guard<std::mutex> lock(schur_mutex());
    auto it = memo.find(lambda);
    if (it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<Poly1>(jacobi_trudi(lambda));
  std::lock_guard<std::mutex> lock(schur_mutex());
  return *memo.emplace(lambda, std::move(value)).first->second;
}

Integer character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character needs |lambda| = |mu|");
  std::set<int> beads;
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) beads.insert(lambda[static_cast<std::size_t>(i)] + l - 1 - i);
  return mn_character(std::move(beads), mu.parts(), 0);
}

GradedPoly<Rational> schur_character_sum(const Partition& lambda) {
  Poly1 out(1);
  for (const auto& mu : gen_partitions(lambda.size())) {
    const Integer chi = character(lambda, mu);
    if (chi == 0) continue;
    out.add_term(ColoredPartition({mu}), Rational(chi) / Rational(z_constant(mu)));
  }
  return out;
}

Rational schur_at_delta(const Partition& lambda) {
  return schur_in_powersums(lambda).coeff(ColoredPartition({Partition(std::vector<int>(static_cast<std::size_t>(lambda.size()), 1))}));
}

GradedPoly<CycloNumber> embed_family(const GradedPoly<Rational>& poly, int m, int family, Basis basis) {
  if (poly.colors() != 1) throw std::invalid_argument("embed_family expects a one-family polynomial");
  GradedPoly<CycloNumber> out(m, basis);
  for (const auto& [mono, c] : poly.terms()) {
    std::vector<Partition> comps(static_cast<std::size_t>(m));
    comps.at(static_cast<std::size_t>(family)) = mono[0];
    out.add_term(ColoredPartition(std::move(comps)), CycloNumber(m, c));
  }
  return out;
}

Rational c0_without_half(int m, const ColoredPartition& lambda) {
  Integer s = 0;
  for (const auto& comp : lambda.components()) {
    for (int i = 0; i < comp.length(); ++i) {
      const int part = comp[static_cast<std::size_t>(i)];
      s += part * (part - 2 * (i + 1) + 1);
    }
  }
  return Rational(Integer(m) * s);
}

EigenData eigen(int m, const ColoredPartition& lambda) {
  if (lambda.colors() != m) throw std::invalid_argument("eigen: colored partition has wrong m");
  EigenData d{lambda, c0_without_half(m, lambda) / 2, {}};
  for (int k = 1; k < m; ++k) {
    CycloNumber ck(m, Rational(0));
    for (int a = 0; a < m; ++a) {
      ck += CycloNumber::xi_pow(m, static_cast<long>(k) * a) * CycloNumber(m, Rational(lambda[static_cast<std::size_t>(a)].size()));
    }
    d.ck.push_back(ck);
  }
  return d;
}

GradedPoly<CycloNumber> colored_schur_u(int m, const ColoredPartition& lambda) {
  GradedPoly<CycloNumber> out = GradedPoly<CycloNumber>::constant(m, CycloNumber(m, 1), Basis::U);
  for (int a = 0; a < m; ++a) {
    out = out * embed_family(schur_in_powersums(lambda[static_cast<std::size_t>(a)]), m, a, Basis::U);
  }
  return out;
}

GradedPoly<CycloNumber> colored_schur_p(int m, const ColoredPartition& lambda, int sign) {
  return u_to_p(colored_schur_u(m, lambda), sign);
}

EigenReport verify_eigenvector(int m, int n, int sign, bool halve_c0) {
  EigenReport report{m, n, 0, {}};
  std::vector<LinearOperator<CycloNumber>> ops;
  for (int i = 0; i < m; ++i) ops.push_back(cj_rule<CycloNumber>(m, i));
  for (const auto& lambda : gen_colored_partitions(m, n)) {
    const auto s = colored_schur_p(m, lambda, sign);
    const EigenData e = eigen(m, lambda);
    for (int i = 0; i < m; ++i) {
      const CycloNumber value = i == 0 ? CycloNumber(m, halve_c0 ? e.c0 : c0_without_half(m, lambda))
                                       : e.ck[static_cast<std::size_t>(i - 1)];
      ++report.checked;
      if (!(ops[static_cast<std::size_t>(i)].apply(s) == s.scaled(value))) {
        report.failures.push_back("CJ_" + std::to_string(i) + " on " + lambda.to_string());
      }
    }
  }
  return report;
}

bool cauchy_check(int m, int n) {
  GradedPoly<CycloNumber> lhs(m, Basis::U);
  for (const auto& lambda : gen_colored_partitions(m, n)) {
    Rational w = 1;
    for (const auto& comp : lambda.components()) w *= schur_at_delta(comp);
    lhs += colored_schur_u(m, lambda).scaled(CycloNumber(m, w));
  }
  GradedPoly<CycloNumber> rhs(m, Basis::P);
  rhs.add_term(ColoredPartition::identity_type(m, n), CycloNumber(m, Rational(1) / Rational(factorial(n))));
  return u_to_p(lhs) == rhs;
}

HurwitzTable closed_form_H(int m, int max_degree, const std::vector<Profile>& profiles) {
  HurwitzTable table(m, Engine::Schur);
  for (int n = 1; n <= max_degree; ++n) {
    std::vector<GradedPoly<CycloNumber>> acc(profiles.size(), GradedPoly<CycloNumber>(m, Basis::P));
    for (const auto& lambda : gen_colored_partitions(m, n)) {
      const auto s = colored_schur_p(m, lambda);
      const EigenData e = eigen(m, lambda);
      Rational w = Rational(1) / Rational(ipow(Integer(m), n));
      for (const auto& comp : lambda.components()) w *= schur_at_delta(comp);
      if (is_zero(w)) continue;
      for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
        const Profile& p = profiles[pi];
        if (p.colors() != m) throw std::invalid_argument("profile has wrong number of classes");
        CycloNumber f(m, w / Rational(p.factorial_product()));
        for (int r = 0; r < p[0]; ++r) f *= CycloNumber(m, e.c0);
        for (int k = 1; k < m; ++k) {
          for (int r = 0; r < p[static_cast<std::size_t>(k)]; ++r) f *= e.ck[static_cast<std::size_t>(k - 1)];
        }
        if (!f.is_zero()) acc[pi] += s.scaled(f);
      }
    }
    for (std::size_t pi = 0; pi < profiles.size(); ++pi) {
      const Rational scale(profiles[pi].factorial_product());
      for (const auto& mu : gen_colored_partitions(m, n)) {
        table.set(profiles[pi], mu, acc[pi].coeff(mu).rational_value() * scale);
      }
    }
  }
  return table;
}

}  // namespace hurwitz
