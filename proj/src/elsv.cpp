#include "hurwitz/elsv.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace hurwitz {

namespace {

using Perm = std::array<int, kClassicalMaxDegree>;
using Pair = std::pair<int, int>;

struct Scan {
  int d;
  int r;
  bool transitive;
  std::vector<int> target;
  std::vector<Pair> transpositions;

  bool matches(const Perm& p, const Perm& comp) const {
    std::vector<int> cycles;
    std::array<bool, kClassicalMaxDegree> seen{};
    for (int i = 0; i < d; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      cycles.push_back(len);
    }
    std::sort(cycles.rbegin(), cycles.rend());
    if (cycles != target) return false;
    if (!transitive) return true;
    for (int i = 0; i < d; ++i) {
      if (comp[i] != comp[0]) return false;
    }
    return true;
  }

  // comp holds a component label per point; merging relabels one side.
  static void join(Perm& comp, int d, int a, int b) {
    const int from = comp[b], to = comp[a];
    if (from == to) return;
    for (int i = 0; i < d; ++i) {
      if (comp[i] == from) comp[i] = to;
    }
  }

  std::uint64_t count(Perm p, Perm comp, int depth) const {
    if (depth == r) return matches(p, comp) ? 1 : 0;
    std::uint64_t total = 0;
    for (const auto& [a, b] : transpositions) {
      Perm q = p;
      std::swap(q[a], q[b]);
      Perm c = comp;
      if (transitive) join(c, d, a, b);
      total += count(q, c, depth + 1);
    }
    return total;
  }

  std::uint64_t count_first(std::size_t first) const {
    Perm p{}, comp{};
    for (int i = 0; i < d; ++i) p[i] = comp[i] = i;
    const auto [a, b] = transpositions[first];
    std::swap(p[a], p[b]);
    if (transitive) join(comp, d, a, b);
    return count(p, comp, 1);
  }
};

Scan make_scan(const Partition& lambda, int r, bool transitive) {
  const int d = lambda.size();
  if (d < 1 || d > kClassicalMaxDegree || r < 0 || r > kClassicalMaxTranspositions) {
    throw std::length_error("classical oracle beyond budget (d <= 6, r <= 5)");
  }
  Scan s{d, r, transitive, lambda.parts(), {}};
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) s.transpositions.emplace_back(a, b);
  }
  return s;
}

Rational finish(const Scan& s, std::uint64_t count) {
  return ratio(Integer(static_cast<unsigned long>(count)), factorial(s.d));
}

// All exponent vectors bounded by orders, including the empty one.
std::vector<std::vector<int>> exponents_up_to(const std::vector<int>& orders) {
  std::vector<std::vector<int>> out{{}};
  for (int bound : orders) {
    std::vector<std::vector<int>> next;
    for (const auto& e : out) {
      for (int j = 0; j <= bound; ++j) {
        next.push_back(e);
        next.back().push_back(j);
      }
    }
    out = std::move(next);
  }
  return out;
}

Rational factorial_product(const std::vector<int>& e) {
  Rational out = 1;
  for (int x : e) out *= Rational(factorial(x));
  return out;
}

Rational zero_r(const Scan& s) {
  Perm p{}, comp{};
  for (int i = 0; i < s.d; ++i) p[i] = comp[i] = i;
  return finish(s, s.matches(p, comp) ? 1 : 0);
}

}  // namespace

Rational classical_bruteforce_serial(const Partition& lambda, int r, bool transitive) {
  const Scan s = make_scan(lambda, r, transitive);
  if (r == 0) return zero_r(s);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < s.transpositions.size(); ++i) total += s.count_first(i);
  return finish(s, total);
}

Rational classical_bruteforce(const Partition& lambda, int r, bool transitive) {
  const Scan s = make_scan(lambda, r, transitive);
  if (r == 0) return zero_r(s);
  std::uint64_t total = 0;
  const long n = static_cast<long>(s.transpositions.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (long i = 0; i < n; ++i) total += s.count_first(static_cast<std::size_t>(i));
  return finish(s, total);
}

Rational ClassicalHurwitz::get_connected(const Partition& mu, int r) const {
  auto it = connected.find({mu, r});
  return it == connected.end() ? Rational(0) : it->second;
}

Rational ClassicalHurwitz::get_disconnected(const Partition& mu, int r) const {
  auto it = disconnected.find({mu, r});
  return it == disconnected.end() ? Rational(0) : it->second;
}

FormalSeries<Rational> classical_series(const std::map<std::pair<Partition, int>, Rational>& numbers, int max_degree,
                                        int max_r) {
  FormalSeries<Rational> z(1, Basis::P, {max_r}, max_degree);
  for (const auto& [key, value] : numbers) {
    const auto& [mu, r] = key;
    z.add({r}, GradedPoly<Rational>::monomial(ColoredPartition({mu}), value / Rational(factorial(r))));
  }
  return z;
}

ClassicalHurwitz classical_table(int max_degree, int max_r) {
  ClassicalHurwitz t{max_degree, max_r, {}, {}};
  t.disconnected[{Partition(), 0}] = 1;
  for (int d = 1; d <= max_degree; ++d) {
    for (const auto& mu : gen_partitions(d)) {
      for (int r = 0; r <= max_r; ++r) {
        const Rational v = classical_bruteforce(mu, r);
        if (!is_zero(v)) t.disconnected[{mu, r}] = v;
      }
    }
  }
  const auto f = classical_series(t.disconnected, max_degree, max_r).log();
  for (const auto& [e, poly] : f.coeffs()) {
    for (const auto& [mono, c] : poly.terms()) t.connected[{mono[0], e[0]}] = c * Rational(factorial(e[0]));
  }
  return t;
}

ConnectedReport verify_connected(const ClassicalHurwitz& table, int transitive_max_degree) {
  ConnectedReport rep;
  const int dmax = std::min(table.max_degree, transitive_max_degree);
  for (int d = 1; d <= dmax; ++d) {
    for (const auto& mu : gen_partitions(d)) {
      for (int r = 0; r <= table.max_r; ++r) {
        ++rep.checked;
        const Rational direct = classical_bruteforce(mu, r, true);
        if (direct != table.get_connected(mu, r)) {
          rep.failures.push_back("transitive count differs at " + mu.to_string() + ", r=" + std::to_string(r));
        }
      }
    }
  }
  ++rep.checked;
  const auto z = classical_series(table.disconnected, table.max_degree, table.max_r);
  if (!(classical_series(table.connected, table.max_degree, table.max_r).exp() == z)) {
    rep.failures.push_back("exp of the connected series is not the disconnected series");
  }
  for (const auto& [key, value] : table.connected) {
    const auto& [mu, r] = key;
    ++rep.checked;
    const int twice_g = r + 2 - mu.length() - mu.size();
    if (twice_g < 0 || twice_g % 2) {
      rep.failures.push_back("connected number outside Riemann-Hurwitz range at " + mu.to_string() +
                             ", r=" + std::to_string(r));
    }
  }
  return rep;
}

EulerReport euler_weight_check(int m, const std::vector<int>& orders, int max_degree) {
  if (static_cast<int>(orders.size()) != m - 1) throw std::invalid_argument("need one order per beta_1..beta_{m-1}");
  std::vector<LinearOperator<CycloNumber>> ops;
  for (int k = 1; k < m; ++k) ops.push_back(cj_rule<CycloNumber>(m, k));
  // exp(p^{(0)}_1) through max_degree.
  GradedPoly<CycloNumber> init(m, Basis::P);
  for (int n = 0; n <= max_degree; ++n) {
    init.add_term(ColoredPartition::identity_type(m, n), CycloNumber(m, Rational(1) / Rational(factorial(n))));
  }
  const auto lhs = exp_operators_apply(ops, init, orders, max_degree);

  // sum_a sum_o prod_k (xi^{k a})^{o_k} / o_k! beta^o u^{(a)}_1, exponentiated.
  FormalSeries<CycloNumber> x(m, Basis::U, orders, max_degree);
  for (const auto& e : exponents_up_to(orders)) {
    for (int a = 0; a < m; ++a) {
      CycloNumber w(m, Rational(1) / factorial_product(e));
      for (int k = 1; k < m; ++k) {
        for (int j = 0; j < e[static_cast<std::size_t>(k - 1)]; ++j) w *= CycloNumber::xi_pow(m, static_cast<long>(k) * a);
      }
      x.add(e, GradedPoly<CycloNumber>::variable(m, a, 1, Basis::U).scaled(w));
    }
  }
  const auto rhs_u = x.exp();
  FormalSeries<CycloNumber> rhs(m, Basis::P, orders, max_degree);
  for (const auto& [e, poly] : rhs_u.coeffs()) rhs.add(e, u_to_p(poly));

  EulerReport rep{m, max_degree, orders, 0, lhs == rhs};
  for (const auto& [e, poly] : lhs.coeffs()) rep.lhs_terms += poly.size();
  return rep;
}

FormalSeries<CycloNumber> rescaled_u_series(const GenFunction& h) {
  const int m = h.m;
  FormalSeries<CycloNumber> out(m, Basis::U, h.orders, h.max_degree);
  for (const auto& [profile, poly] : h.slices) {
    GradedPoly<CycloNumber> u = p_to_u(to_cyclo(poly, m));
    GradedPoly<CycloNumber> v(m, Basis::U);
    for (const auto& [mono, c] : u.terms()) {
      v.add_term(mono, c * CycloNumber(m, Rational(ipow(Integer(m), mono.total()))));
    }
    out.add(profile.counts, v);
  }
  return out;
}

bool ReductionReport::ok() const {
  if (mixed_terms != 0 || !exp_consistent) return false;
  return std::all_of(rows.begin(), rows.end(), [](const ReductionRow& r) { return r.pass; });
}

ReductionReport reduction_check(int m, int max_degree, const std::vector<int>& orders) {
  if (static_cast<int>(orders.size()) != m) throw std::invalid_argument("need one beta order per class");
  const GenFunction h = evolve(m, max_degree, orders);
  const auto hv = rescaled_u_series(h);
  const auto lhs = hv.log();

  const ClassicalHurwitz classical = classical_table(max_degree, orders[0]);
  FormalSeries<CycloNumber> rhs(m, Basis::U, orders, max_degree);
  for (const auto& [key, value] : classical.connected) {
    const auto& [mu, r] = key;
    if (mu.size() == 0) continue;
    for (const auto& profile : profiles_up_to(orders)) {
      if (profile[0] != r) continue;
      for (int a = 0; a < m; ++a) {
        CycloNumber w(m, value * Rational(ipow(Integer(m), r)) / Rational(profile.factorial_product()));
        for (int k = 1; k < m; ++k) {
          const CycloNumber step = CycloNumber::xi_pow(m, static_cast<long>(k) * a) * CycloNumber(m, Rational(mu.size()));
          for (int j = 0; j < profile[static_cast<std::size_t>(k)]; ++j) w *= step;
        }
        std::vector<Partition> comps(static_cast<std::size_t>(m));
        comps[static_cast<std::size_t>(a)] = mu;
        GradedPoly<CycloNumber> term(m, Basis::U);
        term.add_term(ColoredPartition(std::move(comps)), w);
        rhs.add(profile.counts, term);
      }
    }
  }

  ReductionReport rep{m, max_degree, orders, {}, 0, false};
  std::map<std::pair<std::vector<int>, ColoredPartition>, ReductionRow> rows;
  auto family_of = [m](const ColoredPartition& mono) {
    int fam = -1;
    for (int a = 0; a < m; ++a) {
      if (mono[static_cast<std::size_t>(a)].empty()) continue;
      if (fam >= 0) return -1;
      fam = a;
    }
    return fam;
  };
  for (const auto& [e, poly] : lhs.coeffs()) {
    for (const auto& [mono, c] : poly.terms()) {
      auto& row = rows[{e, mono}];
      row.alpha = family_of(mono);
      row.exponent = e;
      row.monomial = mono;
      row.lhs = c;
      if (row.alpha < 0) ++rep.mixed_terms;
    }
  }
  for (const auto& [e, poly] : rhs.coeffs()) {
    for (const auto& [mono, c] : poly.terms()) {
      auto& row = rows[{e, mono}];
      row.alpha = family_of(mono);
      row.exponent = e;
      row.monomial = mono;
      row.rhs = c;
    }
  }
  for (auto& [key, row] : rows) {
    row.pass = row.lhs == row.rhs;
    rep.rows.push_back(std::move(row));
  }
  rep.exp_consistent = rhs.exp() == hv;
  return rep;
}

}  // namespace hurwitz
