#include "hurwitz/kp.hpp"

#include <stdexcept>

namespace hurwitz {

Monomial time_monomial(const std::vector<int>& indices) {
  return ColoredPartition({Partition::from_unsorted(indices)});
}

namespace {

TimesSeries d(const TimesSeries& f, int k) {
  return f.map([k](const GradedPoly<CycloNumber>& p) { return partial(p, 0, k); });
}

TimesSeries d(const TimesSeries& f, std::initializer_list<int> ks) {
  TimesSeries out = f;
  for (int k : ks) out = d(out, k);
  return out;
}

}  // namespace

KPResiduals kp_residuals(const TimesSeries& f) {
  if (f.colors() != 1) throw std::invalid_argument("kp_residuals expects a single family of times");
  const int w = f.max_degree();
  const TimesSeries f11 = d(f, {1, 1});
  TimesSeries eq1 = d(f, {2, 2}) - d(f, {3, 1}) + (f11 * f11).scaled(CycloNumber(ratio(1, 2))) +
                    d(f, {1, 1, 1, 1}).scaled(CycloNumber(ratio(1, 12)));
  TimesSeries eq2 = d(f, {3, 2}) - d(f, {4, 1}) + f11 * d(f, {2, 1}) +
                    d(f, {2, 1, 1, 1}).scaled(CycloNumber(ratio(1, 6)));
  return {eq1.truncated(w - 4), eq2.truncated(w - 5)};
}

TimesSeries restrict_to_family(const GenFunction& h, int alpha) {
  const int m = h.m;
  if (alpha < 0 || alpha >= m) throw std::invalid_argument("family index out of range");
  TimesSeries restricted(1, Basis::P, h.orders, h.max_degree);
  for (const auto& [profile, poly] : h.slices) {
    GradedPoly<CycloNumber> image(1, Basis::P);
    for (const auto& [mono, c] : poly.terms()) {
      // p^{(b)}_k -> xi^{alpha b} u^{(alpha)}_k = xi^{alpha b} m^k t_k.
      long phase = 0;
      std::vector<int> parts;
      for (int b = 0; b < m; ++b) {
        const Partition& comp = mono[static_cast<std::size_t>(b)];
        phase += static_cast<long>(alpha) * b * comp.length();
        parts.insert(parts.end(), comp.parts().begin(), comp.parts().end());
      }
      const CycloNumber coeff = CycloNumber::xi_pow(m, phase) * CycloNumber(m, c * Rational(ipow(Integer(m), mono.total())));
      image.add_term(time_monomial(parts), coeff);
    }
    restricted.add(profile.counts, image);
  }
  return restricted.log();
}

std::vector<KPReport> kp_check(int m, int weight, const std::vector<int>& orders, bool perturb) {
  const GenFunction h = evolve(m, weight, orders);
  std::vector<KPReport> out;
  for (int alpha = 0; alpha < m; ++alpha) {
    TimesSeries f = restrict_to_family(h, alpha);
    if (perturb) {
      GradedPoly<CycloNumber> bump(1, Basis::P);
      bump.add_term(time_monomial({2, 2}), CycloNumber(1));
      f.add(std::vector<int>(orders.size(), 0), bump);
    }
    const KPResiduals r = kp_residuals(f);
    KPReport rep{m, alpha, weight, orders, r.eq1.is_zero(), r.eq2.is_zero(), 0, 0};
    for (const auto& [e, p] : r.eq1.coeffs()) rep.eq1_terms += p.size();
    for (const auto& [e, p] : r.eq2.coeffs()) rep.eq2_terms += p.size();
    out.push_back(rep);
  }
  return out;
}

}  // namespace hurwitz
