#include "hurwitz/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/elsv.hpp"
#include "hurwitz/kp.hpp"
#include "hurwitz/schur.hpp"
#include "hurwitz/wreath.hpp"

namespace hurwitz {

void CheckResult::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  if (failed == 0) detail = what;
  ++failed;
}

void CheckResult::absorb(const CheckResult& other) {
  checked += other.checked;
  if (failed == 0 && other.failed != 0) detail = other.name + ": " + other.detail;
  failed += other.failed;
}

namespace {

std::string at(int m, int n) { return " (m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")"; }

std::string entry(const Profile& p, const ColoredPartition& lambda) {
  return "profile " + p.to_string() + ", " + lambda.to_string();
}

Integer group_order(int m, int n) { return ipow(Integer(m), n) * factorial(n); }

}  // namespace

CheckResult check_initial_condition(int m, int n) {
  CheckResult r{"initial condition" + at(m, n)};
  const Profile zero = Profile::zero(m);
  const HurwitzTable cj = evolve(m, n, std::vector<int>(static_cast<std::size_t>(m), 0)).table();
  const HurwitzTable sc = closed_form_H(m, n, {zero});
  const Rational expected_id = Rational(1) / Rational(group_order(m, n));
  for (const auto& lambda : gen_colored_partitions(m, n)) {
    const Rational expected = lambda == ColoredPartition::identity_type(m, n) ? expected_id : Rational(0);
    r.record(hurwitz_classdp(m, n, zero, lambda) == expected, "classdp at " + lambda.to_string());
    r.record(cj.at(zero, lambda) == expected, "evolve at " + lambda.to_string());
    r.record(sc.at(zero, lambda) == expected, "closed form at " + lambda.to_string());
  }
  return r;
}

CheckResult check_triple_engine(int m, int max_n, int max_total) {
  CheckResult r{"triple engine (m=" + std::to_string(m) + ", n<=" + std::to_string(max_n) +
                ", M<=" + std::to_string(max_total) + ")"};
  const auto profiles = profiles_with_total_at_most(m, max_total);
  const HurwitzTable cj = evolve(m, max_n, std::vector<int>(static_cast<std::size_t>(m), max_total)).table();
  const HurwitzTable sc = closed_form_H(m, max_n, profiles);
  for (int n = 1; n <= max_n; ++n) {
    const HurwitzTable dp = hurwitz_table_classdp(m, n, profiles);
    for (const auto& [key, value] : dp.entries()) {
      const auto& [p, lambda] = key;
      r.record(cj.contains(p, lambda) && cj.at(p, lambda) == value, "evolve differs at " + entry(p, lambda));
      r.record(sc.contains(p, lambda) && sc.at(p, lambda) == value, "closed form differs at " + entry(p, lambda));
    }
  }
  return r;
}

CheckResult check_bruteforce(int m, int max_n, int max_total, std::uint64_t budget) {
  CheckResult r{"brute force (m=" + std::to_string(m) + ", n<=" + std::to_string(max_n) + ")"};
  const auto profiles = profiles_with_total_at_most(m, max_total);
  for (int n = 1; n <= max_n; ++n) {
    const HurwitzTable dp = hurwitz_table_classdp(m, n, profiles);
    const HurwitzTable bf = hurwitz_table_bruteforce(m, n, profiles, budget);
    for (const auto& [key, value] : dp.entries()) {
      const auto& [p, lambda] = key;
      r.record(bf.at(p, lambda) == value, "sequence scan differs at " + entry(p, lambda));
      r.record(count_covers(m, n, p, lambda, budget) == value, "cover count differs at " + entry(p, lambda));
    }
  }
  return r;
}

CheckResult check_classical_anchor(int max_n, int max_total) {
  CheckResult r{"classical anchor (n<=" + std::to_string(max_n) + ", M<=" + std::to_string(max_total) + ")"};
  const HurwitzTable cj = evolve(1, max_n, {max_total}).table();
  for (int n = 1; n <= max_n; ++n) {
    for (int total = 0; total <= max_total; ++total) {
      const Profile p({total});
      for (const auto& mu : gen_partitions(n)) {
        const ColoredPartition lambda({mu});
        const Rational oracle = classical_bruteforce(mu, total);
        r.record(hurwitz_classdp(1, n, p, lambda) == oracle, "classdp differs at " + entry(p, lambda));
        r.record(cj.at(p, lambda) == oracle, "evolve differs at " + entry(p, lambda));
      }
    }
  }
  return r;
}

CheckResult check_normalizer(int m, int n) {
  CheckResult r{"normalizer of tau" + at(m, n)};
  const BigPermutation t = tau(m, n);
  std::vector<int> images(static_cast<std::size_t>(m * n));
  std::iota(images.begin(), images.end(), 0);
  Integer commuting = 0;
  do {
    const BigPermutation p(images);
    if (!p.commutes_with(t)) continue;
    ++commuting;
    r.record(embed(unembed(m, n, p)) == p, "commuting permutation outside the image: " + p.to_string());
  } while (std::next_permutation(images.begin(), images.end()));
  r.record(commuting == group_order(m, n), "commutant order " + commuting.get_str());
  GroupEnumerator(m, n).for_each(
      [&](const WreathElement& x) { r.record(embed(x).commutes_with(t), "embedded element fails to commute"); });
  return r;
}

CheckResult check_homomorphism(int m, int n) {
  CheckResult r{"embedding homomorphism" + at(m, n)};
  const auto elements = enumerate_group(m, n);
  std::vector<BigPermutation> images;
  for (const auto& x : elements) images.push_back(embed(x));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      r.record(embed(elements[i] * elements[j]) == images[i] * images[j],
               "embed(xy) != embed(x)embed(y) at " + elements[i].to_string() + ", " + elements[j].to_string());
    }
  }
  return r;
}

CheckResult check_conjugacy(int m, int n) {
  CheckResult r{"conjugacy classes" + at(m, n)};
  const GroupEnumerator group(m, n);
  const auto elements = enumerate_group(m, n);
  std::map<ColoredPartition, Integer> counts;
  for (const auto& x : elements) {
    const ColoredPartition type = colored_type(x);
    ++counts[type];
    r.record(beta_type(m, n, embed(x)) == type, "beta type differs for " + x.to_string());
  }
  for (const auto& lambda : gen_colored_partitions(m, n)) {
    const WreathElement rep = class_representative(m, lambda);
    r.record(colored_type(rep) == lambda, "representative has wrong type: " + lambda.to_string());
    std::set<std::uint64_t> orbit;
    for (const auto& g : elements) {
      const WreathElement y = g * rep * g.inverse();
      if (orbit.insert(group.index_of(y)).second) {
        r.record(colored_type(y) == lambda, "conjugate changes type: " + lambda.to_string());
      }
    }
    r.record(Integer(static_cast<unsigned long>(orbit.size())) == class_size(m, lambda),
             "orbit size differs from class size at " + lambda.to_string());
    r.record(counts[lambda] == class_size(m, lambda), "type count differs from class size at " + lambda.to_string());
  }
  return r;
}

CheckResult check_multiplicities(int m, int n) {
  CheckResult r{"multiplicities" + at(m, n)};
  std::map<ColoredPartition, std::vector<WreathElement>> by_type;
  for (const auto& x : enumerate_group(m, n)) by_type[colored_type(x)].push_back(x);
  const auto classes = gen_colored_partitions(m, n);
  for (const auto& lambda : classes) {
    for (const auto& mu : classes) {
      for (int i = 0; i < m; ++i) {
        const Integer predicted = predicted_multiplicity(m, lambda, mu, i);
        const std::string where = lambda.to_string() + " -> " + mu.to_string() + ", class " + std::to_string(i);
        for (const auto& sigma : by_type[lambda]) {
          r.record(multiplicity(sigma, mu, i, Side::Right) == predicted, "right multiplicity at " + where);
          r.record(multiplicity(sigma, mu, i, Side::Left) == predicted, "left multiplicity at " + where);
        }
      }
    }
  }
  return r;
}

CheckResult check_diagram(int m, int n) {
  CheckResult r{"cut-and-join diagram" + at(m, n)};
  const DiagramReport d = verify_diagram(m, n);
  r.record(d.commutes, "CJ_i and T_i disagree");
  for (std::size_t i = 0; i < d.constants.size(); ++i) {
    r.record(d.constants[i].has_value() && *d.constants[i] == 1, "constant for class " + std::to_string(i));
  }
  return r;
}

CheckResult check_operator_identities(int m, int n) {
  CheckResult r{"operator identities" + at(m, n)};
  const DftReport d = verify_dft(m, n);
  r.record(d.round_trip, "p/u round trip");
  r.record(d.cj0_identity, "CJ_0 = m sum of classical operators");
  for (std::size_t k = 0; k < d.cjk_identity.size(); ++k) {
    r.record(d.cjk_identity[k], "CJ_" + std::to_string(k + 1) + " = sum of Euler fields");
  }
  return r;
}

CheckResult check_eigen(int m, int n) {
  CheckResult r{"eigenvectors" + at(m, n)};
  const EigenReport e = verify_eigenvector(m, n);
  r.checked = e.checked;
  r.failed = static_cast<long>(e.failures.size());
  if (!e.failures.empty()) r.detail = e.failures.front();
  return r;
}

CheckResult check_m2_cj1(int n) {
  CheckResult r{"m=2 CJ_1 formula (n=" + std::to_string(n) + ")"};
  // i p_i d/dq_i + i q_i d/dp_i: each part i moves to the other family with weight i times its multiplicity.
  const LinearOperator<Rational> swap_op(2, Basis::P, [](const Monomial& mono) {
    GradedPoly<Rational> out(2, Basis::P);
    for (const auto& [family, part] : detail::distinct_variables(mono)) {
      Monomial rest;
      int mult = 0;
      if (!remove_part(mono, family, part, rest, mult)) continue;
      std::vector<Partition> comps = rest.components();
      auto& other = comps[static_cast<std::size_t>(1 - family)];
      std::vector<int> parts = other.parts();
      parts.push_back(part);
      other = Partition::from_unsorted(parts);
      out.add_term(ColoredPartition(comps), Rational(part * mult));
    }
    return out;
  });
  const auto cj1 = cj_rule<Rational>(2, 1);
  for (const auto& mono : gen_colored_partitions(2, n)) {
    const auto x = GradedPoly<Rational>::monomial(mono);
    r.record(cj1.apply(x) == swap_op.apply(x), "CJ_1 differs on " + mono.to_string());
  }
  return r;
}

CheckResult check_cauchy(int m, int n) {
  CheckResult r{"Cauchy identity" + at(m, n)};
  r.record(cauchy_check(m, n), "sum of s(delta) s(u) differs from (p0_1)^n / n!");
  return r;
}

CheckResult check_cj_pde(int m, int max_degree, const std::vector<int>& orders) {
  CheckResult r{"cut-and-join equations (m=" + std::to_string(m) + ", N=" + std::to_string(max_degree) + ")"};
  int checked = 0;
  const int failed = check_cj_equations(evolve(m, max_degree, orders), &checked);
  r.checked = checked;
  r.failed = failed;
  if (failed) r.detail = std::to_string(failed) + " slice pairs violate the equation";
  return r;
}

CheckResult check_kp(int m, int weight, const std::vector<int>& orders, bool perturb) {
  CheckResult r{std::string(perturb ? "KP negative control" : "KP equations") + " (m=" + std::to_string(m) +
                ", weight " + std::to_string(weight) + ")"};
  for (const auto& rep : kp_check(m, weight, orders, perturb)) {
    const std::string fam = "family " + std::to_string(rep.alpha);
    if (perturb) {
      r.record(!rep.eq1_zero, "perturbed first equation still vanishes in " + fam);
    } else {
      r.record(rep.eq1_zero, "first equation residual in " + fam);
      r.record(rep.eq2_zero, "second equation residual in " + fam);
    }
  }
  return r;
}

CheckResult check_elsv(int m, int max_degree, const std::vector<int>& orders) {
  CheckResult r{"log H reduction (m=" + std::to_string(m) + ", N=" + std::to_string(max_degree) + ")"};
  const ReductionReport red = reduction_check(m, max_degree, orders);
  for (const auto& row : red.rows) {
    r.record(row.pass, "coefficient of " + row.monomial.to_string() + " differs");
  }
  r.record(red.mixed_terms == 0, "log H mixes u-families");
  r.record(red.exp_consistent, "exp of the reassembly differs from H");
  const ConnectedReport conn = verify_connected(classical_table(max_degree, orders.at(0)), 4);
  r.checked += conn.checked;
  r.failed += static_cast<long>(conn.failures.size());
  if (!conn.failures.empty() && r.detail.empty()) r.detail = conn.failures.front();
  const EulerReport eul = euler_weight_check(m, std::vector<int>(orders.begin() + 1, orders.end()), max_degree);
  r.record(eul.match, "Euler weight identity");
  return r;
}

}  // namespace hurwitz
