#include "hurwitz/cutjoin.hpp"

#include <stdexcept>

namespace hurwitz {

namespace {

using PartCounts = std::map<std::pair<int, int>, int>;  // (size, color) -> count

PartCounts part_counts(const ColoredPartition& lambda) {
  PartCounts out;
  for (int a = 0; a < lambda.colors(); ++a) {
    for (int s : lambda[static_cast<std::size_t>(a)].parts()) ++out[{s, a}];
  }
  return out;
}

ColoredPartition from_counts(int m, const PartCounts& counts) {
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(m));
  for (const auto& [part, c] : counts) {
    for (int k = 0; k < c; ++k) parts[static_cast<std::size_t>(part.second)].push_back(part.first);
  }
  std::vector<Partition> comps;
  for (auto& p : parts) comps.push_back(Partition::from_unsorted(std::move(p)));
  return ColoredPartition(std::move(comps));
}

void bump(PartCounts& counts, std::pair<int, int> part, int delta) {
  int& c = counts[part];
  c += delta;
  if (c == 0) counts.erase(part);
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

SparseMatrix<Rational> cj0_matrix(int m, int n) {
  const ColoredBasis basis(m, n);
  SparseMatrix<Rational> out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const PartCounts counts = part_counts(basis.at_index(col));
    // Cut: a part (s, d) of multiplicity c splits into an ordered pair (i, a), (s - i, d - a).
    for (const auto& [part, c] : counts) {
      const auto [s, d] = part;
      for (int i = 1; i < s; ++i) {
        for (int a = 0; a < m; ++a) {
          PartCounts next = counts;
          bump(next, part, -1);
          bump(next, {i, a}, 1);
          bump(next, {s - i, mod(d - a, m)}, 1);
          out.add_to(basis.index_of(from_counts(m, next)), col, ratio(s * c, 2));
        }
      }
    }
    // Join: an ordered pair of parts merges; the second factor loses one copy if both coincide.
    for (const auto& [p1, c1] : counts) {
      for (const auto& [p2, c2raw] : counts) {
        const int c2 = c2raw - (p1 == p2 ? 1 : 0);
        if (c2 == 0) continue;
        PartCounts next = counts;
        bump(next, p1, -1);
        bump(next, p2, -1);
        bump(next, {p1.first + p2.first, mod(p1.second + p2.second, m)}, 1);
        out.add_to(basis.index_of(from_counts(m, next)), col,
                   ratio(m * p1.first * p2.first * c1 * c2, 2));
      }
    }
  }
  return out;
}

SparseMatrix<Rational> cjk_matrix(int m, int n, int k) {
  if (k < 1 || k >= m) throw std::invalid_argument("cjk_matrix needs 1 <= k < m");
  const ColoredBasis basis(m, n);
  SparseMatrix<Rational> out(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const PartCounts counts = part_counts(basis.at_index(col));
    for (const auto& [part, c] : counts) {
      PartCounts next = counts;
      bump(next, part, -1);
      bump(next, {part.first, mod(part.second + k, m)}, 1);
      out.add_to(basis.index_of(from_counts(m, next)), col, Rational(part.first * c));
    }
  }
  return out;
}

CJFamily build_cj(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("build_cj needs m >= 1 and n >= 1");
  CJFamily fam{m, n, {}};
  fam.ops.push_back(cj0_matrix(m, n));
  for (int k = 1; k < m; ++k) fam.ops.push_back(cjk_matrix(m, n, k));
  return fam;
}

DiagramReport verify_diagram(int m, int n) {
  DiagramReport report{m, n, {}, true};
  const CJFamily fam = build_cj(m, n);
  for (int i = 0; i < m; ++i) {
    const SparseMatrix<Rational> t = t_matrix(m, n, i);
    const SparseMatrix<Rational>& cj = fam.ops[static_cast<std::size_t>(i)];
    std::optional<Rational> c;
    if (t.is_zero_matrix()) {
      if (cj.is_zero_matrix()) c = Rational(1);
    } else {
      // First nonzero entry of T fixes the candidate scalar.
      for (std::size_t col = 0; col < t.cols() && !c; ++col) {
        if (!t.column(col).empty()) {
          const auto& [row, x] = *t.column(col).begin();
          c = cj.get(row, col) / x;
        }
      }
      if (c && !(cj == t.scaled(*c))) c.reset();
    }
    if (!c) report.commutes = false;
    report.constants.push_back(c);
  }
  return report;
}

namespace {

// The linear form expressing one variable of the source basis in the target basis.
GradedPoly<CycloNumber> linear_form(int m, int family, int k, bool to_u, int sign) {
  GradedPoly<CycloNumber> out(m, to_u ? Basis::U : Basis::P);
  for (int v = 0; v < m; ++v) {
    const Monomial var = GradedPoly<CycloNumber>::single_part(m, v, k);
    if (to_u) {
      out.add_term(var, CycloNumber::xi_pow(m, -static_cast<long>(sign) * family * v));
    } else {
      out.add_term(var, CycloNumber::xi_pow(m, static_cast<long>(sign) * family * v) * CycloNumber(m, ratio(1, m)));
    }
  }
  return out;
}

GradedPoly<CycloNumber> substitute(const GradedPoly<CycloNumber>& poly, bool to_u, int sign) {
  const int m = poly.colors();
  const Basis target = to_u ? Basis::U : Basis::P;
  GradedPoly<CycloNumber> out(m, target);
  std::map<std::pair<int, int>, GradedPoly<CycloNumber>> forms;
  for (const auto& [mono, c] : poly.terms()) {
    GradedPoly<CycloNumber> term = GradedPoly<CycloNumber>::constant(m, c, target);
    for (int a = 0; a < m; ++a) {
      for (int k : mono[static_cast<std::size_t>(a)].parts()) {
        auto it = forms.find({a, k});
        if (it == forms.end()) it = forms.emplace(std::make_pair(a, k), linear_form(m, a, k, to_u, sign)).first;
        term = term * it->second;
      }
    }
    out += term;
  }
  return out;
}

SparseMatrix<CycloNumber> substitution_matrix(int m, int n, bool to_u, int sign) {
  const ColoredBasis basis(m, n);
  SparseMatrix<CycloNumber> out(basis.size(), basis.size());
  const Basis source = to_u ? Basis::P : Basis::U;
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto img = substitute(GradedPoly<CycloNumber>::monomial(basis.at_index(col), CycloNumber(m, 1), source), to_u, sign);
    for (const auto& [mono, c] : img.terms()) out.add_to(basis.index_of(mono), col, c);
  }
  return out;
}

}  // namespace

GradedPoly<CycloNumber> p_to_u(const GradedPoly<CycloNumber>& poly, int sign) {
  if (poly.basis() != Basis::P) throw std::invalid_argument("p_to_u expects a p-basis polynomial");
  return substitute(poly, true, sign);
}

GradedPoly<CycloNumber> u_to_p(const GradedPoly<CycloNumber>& poly, int sign) {
  if (poly.basis() != Basis::U) throw std::invalid_argument("u_to_p expects a u-basis polynomial");
  return substitute(poly, false, sign);
}

SparseMatrix<CycloNumber> p_to_u_matrix(int m, int n, int sign) { return substitution_matrix(m, n, true, sign); }

SparseMatrix<CycloNumber> u_to_p_matrix(int m, int n, int sign) { return substitution_matrix(m, n, false, sign); }

SparseMatrix<CycloNumber> conjugate_to_u(const SparseMatrix<Rational>& m_p, int m, int n, int sign) {
  const auto lifted = m_p.transform<CycloNumber>([m](const Rational& r) { return CycloNumber(m, r); });
  return p_to_u_matrix(m, n, sign) * lifted * u_to_p_matrix(m, n, sign);
}

SparseMatrix<CycloNumber> dft_target_cj0(int m, int n) {
  const ColoredBasis basis(m, n);
  SparseMatrix<CycloNumber> out(basis.size(), basis.size());
  for (int v = 0; v < m; ++v) out = out + classical_cj_rule<CycloNumber>(m, v, Basis::U).matrix(n);
  return out.scaled(CycloNumber(m, Rational(m)));
}

SparseMatrix<CycloNumber> dft_target_cjk(int m, int n, int k) {
  const ColoredBasis basis(m, n);
  SparseMatrix<CycloNumber> out(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    CycloNumber d(m, Rational(0));
    for (int v = 0; v < m; ++v) {
      d += CycloNumber::xi_pow(m, static_cast<long>(k) * v) * CycloNumber(m, Rational(basis.at_index(j)[static_cast<std::size_t>(v)].size()));
    }
    out.add_to(j, j, d);
  }
  return out;
}

bool DftReport::ok() const {
  if (!round_trip || !cj0_identity) return false;
  for (bool b : cjk_identity) {
    if (!b) return false;
  }
  return true;
}

DftReport verify_dft(int m, int n, int sign) {
  DftReport r{m, n, false, false, {}};
  const auto a = p_to_u_matrix(m, n, sign);
  const auto b = u_to_p_matrix(m, n, sign);
  const auto id = SparseMatrix<CycloNumber>::identity(a.rows());
  r.round_trip = (a * b == id) && (b * a == id);
  r.cj0_identity = conjugate_to_u(cj0_matrix(m, n), m, n, sign) == dft_target_cj0(m, n);
  for (int k = 1; k < m; ++k) {
    r.cjk_identity.push_back(conjugate_to_u(cjk_matrix(m, n, k), m, n, sign) == dft_target_cjk(m, n, k));
  }
  return r;
}

GradedPoly<Rational> initial_condition(int m, int max_degree) {
  GradedPoly<Rational> out(m, Basis::P);
  for (int n = 0; n <= max_degree; ++n) {
    out.add_term(ColoredPartition::identity_type(m, n), Rational(1) / Rational(ipow(Integer(m), n) * factorial(n)));
  }
  return out;
}

GenFunction evolve(int m, int max_degree, const std::vector<int>& orders) {
  if (m < 1 || max_degree < 0) throw std::invalid_argument("evolve needs m >= 1 and max_degree >= 0");
  if (static_cast<int>(orders.size()) != m) throw std::invalid_argument("evolve needs one order per class");
  GenFunction h{m, max_degree, orders, {}};
  std::vector<LinearOperator<Rational>> ops;
  for (int i = 0; i < m; ++i) ops.push_back(cj_rule<Rational>(m, i));
  // Lexicographic order guarantees o - e_i (i the first nonzero slot) is already present.
  for (const Profile& o : profiles_up_to(orders)) {
    std::size_t i = 0;
    while (i < o.counts.size() && o.counts[i] == 0) ++i;
    if (i == o.counts.size()) {
      h.slices.emplace(o, initial_condition(m, max_degree));
      continue;
    }
    Profile prev = o;
    --prev.counts[i];
    h.slices.emplace(o, ops[i].apply(h.slices.at(prev)).scaled(ratio(1, o.counts[i])));
  }
  return h;
}

HurwitzTable GenFunction::table() const {
  HurwitzTable t(m, Engine::CutJoin);
  for (const auto& [profile, poly] : slices) {
    const Rational scale(profile.factorial_product());
    for (int n = 1; n <= max_degree; ++n) {
      for (const auto& lambda : gen_colored_partitions(m, n)) t.set(profile, lambda, poly.coeff(lambda) * scale);
    }
  }
  return t;
}

int check_cj_equations(const GenFunction& h, int* checked) {
  std::vector<LinearOperator<Rational>> ops;
  for (int i = 0; i < h.m; ++i) ops.push_back(cj_rule<Rational>(h.m, i));
  int failures = 0;
  int count = 0;
  for (const auto& [o, slice] : h.slices) {
    for (int i = 0; i < h.m; ++i) {
      Profile next = o;
      ++next.counts[static_cast<std::size_t>(i)];
      auto it = h.slices.find(next);
      if (it == h.slices.end()) continue;
      ++count;
      const auto lhs = it->second.scaled(Rational(next.counts[static_cast<std::size_t>(i)]));
      if (!(lhs == ops[static_cast<std::size_t>(i)].apply(slice).truncated(h.max_degree))) ++failures;
    }
  }
  if (checked) *checked = count;
  return failures;
}

}  // namespace hurwitz
