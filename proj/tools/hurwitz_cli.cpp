#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/elsv.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/kp.hpp"
#include "hurwitz/schur.hpp"
#include "hurwitz/verify.hpp"
#include "hurwitz/wreath.hpp"

using namespace hurwitz;
using io::Json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int m = 2;
  std::optional<int> n;
  std::optional<int> max_degree;
  std::string orders;
  std::string engines = "enumeration,cutjoin,schur";
  std::string format = "json";
  std::uint64_t budget = kEnumerationBudget;
  std::string out;
  bool perturb = false;

  void validate() const {
    if (m < 1) throw UsageError("--m must be at least 1");
    if (n && *n < 1) throw UsageError("--n must be at least 1");
    if (max_degree && *max_degree < 0) throw UsageError("--max-degree must be non-negative");
  }

  // One bound per class; a single value is broadcast.
  std::vector<int> order_bounds(int count, int fallback) const {
    std::vector<int> v = io::parse_int_list(orders);
    if (v.empty()) v.assign(static_cast<std::size_t>(count), fallback);
    if (v.size() == 1 && count > 1) v.assign(static_cast<std::size_t>(count), v[0]);
    if (static_cast<int>(v.size()) != count) {
      throw UsageError("--orders needs " + std::to_string(count) + " comma-separated values");
    }
    for (int x : v) {
      if (x < 0) throw UsageError("--orders values must be non-negative");
    }
    return v;
  }

  std::vector<Engine> engine_list() const {
    std::vector<Engine> out_list;
    std::stringstream ss(engines);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      try {
        out_list.push_back(parse_engine(name));
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }
    if (out_list.empty()) throw UsageError("select at least one engine");
    return out_list;
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string check_lines(const std::vector<CheckResult>& checks, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    bool all = true;
    for (const auto& c : checks) {
      all = all && c.pass();
      arr.push_back(Json{{"name", c.name}, {"pass", c.pass()}, {"checked", c.checked}, {"failed", c.failed},
                         {"detail", c.detail}});
    }
    return dump(Json{{"checks", arr}, {"pass", all}});
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "check,pass,checked,failed\n";
    for (const auto& c : checks) {
      os << '"' << c.name << "\"," << (c.pass() ? "true" : "false") << ',' << c.checked << ',' << c.failed << '\n';
    }
    return os.str();
  }
  for (const auto& c : checks) {
    os << (c.pass() ? "PASS " : "FAIL ") << c.name << " [" << c.checked << " checked, " << c.failed << " failed]";
    if (!c.detail.empty()) os << " first failure: " << c.detail;
    os << '\n';
  }
  return os.str();
}

int cmd_classes(const RunConfig& cfg) {
  const int n = cfg.n.value_or(3);
  const Integer order = ipow(Integer(cfg.m), n) * factorial(n);
  Json rows = Json::array();
  std::ostringstream text;
  Integer total = 0;
  if (cfg.format == "csv") text << "colored_partition,class_size,centralizer_order,representative\n";
  for (const auto& lambda : gen_colored_partitions(cfg.m, n)) {
    const Integer size = class_size(cfg.m, lambda);
    const Integer cent = centralizer_order(cfg.m, lambda);
    const WreathElement rep = class_representative(cfg.m, lambda);
    total += size;
    rows.push_back(Json{{"colored_partition", lambda.to_string()},
                        {"class_size", size.get_str()},
                        {"centralizer_order", cent.get_str()},
                        {"representative", io::to_json(rep)}});
    if (cfg.format == "csv") {
      text << lambda.to_string() << ',' << size.get_str() << ',' << cent.get_str() << ",\"" << rep.to_string() << "\"\n";
    } else if (cfg.format == "pretty") {
      text << lambda.to_string() << "  size " << size.get_str() << "  centralizer " << cent.get_str() << "  e.g. "
           << rep.to_string() << '\n';
    }
  }
  if (cfg.format == "json") {
    text << dump(Json{{"m", cfg.m}, {"n", n}, {"group_order", order.get_str()}, {"classes", rows}});
  } else if (cfg.format == "pretty") {
    text << rows.size() << " classes, sizes sum to " << total.get_str() << " = |G(" << cfg.m << ",1," << n << ")|\n";
  }
  io::write_output(text.str(), cfg.out);
  return total == order ? kExitPass : kExitDisagree;
}

// Keeps only the requested degrees and profiles.
HurwitzTable filtered(const HurwitzTable& t, const std::vector<int>& degrees, const std::vector<Profile>& profiles) {
  HurwitzTable out(t.colors(), t.engine());
  for (const auto& [key, value] : t.entries()) {
    const auto& [p, lambda] = key;
    if (std::find(degrees.begin(), degrees.end(), lambda.total()) == degrees.end()) continue;
    if (std::find(profiles.begin(), profiles.end(), p) == profiles.end()) continue;
    out.set(p, lambda, value);
  }
  return out;
}

HurwitzTable run_engine(Engine e, int m, const std::vector<int>& degrees, const std::vector<Profile>& profiles,
                        std::uint64_t budget) {
  const int nmax = *std::max_element(degrees.begin(), degrees.end());
  switch (e) {
    case Engine::Enumeration:
    case Engine::BruteForce: {
      HurwitzTable out(m, e);
      for (int n : degrees) {
        const HurwitzTable t =
            e == Engine::Enumeration ? hurwitz_table_classdp(m, n, profiles) : hurwitz_table_bruteforce(m, n, profiles, budget);
        for (const auto& [key, value] : t.entries()) out.set(key.first, key.second, value);
      }
      return out;
    }
    case Engine::CutJoin: {
      std::vector<int> bounds(static_cast<std::size_t>(m), 0);
      for (const auto& p : profiles) {
        for (int i = 0; i < m; ++i) bounds[static_cast<std::size_t>(i)] = std::max(bounds[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i)]);
      }
      return filtered(evolve(m, nmax, bounds).table(), degrees, profiles);
    }
    case Engine::Schur:
      return filtered(closed_form_H(m, nmax, profiles), degrees, profiles);
  }
  throw std::logic_error("unhandled engine");
}

int cmd_hurwitz(const RunConfig& cfg) {
  std::vector<int> degrees;
  if (cfg.n) {
    degrees.push_back(*cfg.n);
  } else {
    for (int d = 1; d <= cfg.max_degree.value_or(3); ++d) degrees.push_back(d);
  }
  if (degrees.empty()) throw UsageError("no degrees selected");
  const auto profiles =
      cfg.orders.empty() ? profiles_with_total_at_most(cfg.m, 3) : profiles_up_to(cfg.order_bounds(cfg.m, 0));
  const auto engines = cfg.engine_list();

  std::vector<HurwitzTable> tables;
  for (Engine e : engines) tables.push_back(run_engine(e, cfg.m, degrees, profiles, cfg.budget));

  Json diffs = Json::array();
  for (std::size_t i = 1; i < tables.size(); ++i) {
    for (const auto& d : diff_tables(tables[0], tables[i])) {
      diffs.push_back(Json{{"profile", d.key.first.to_string()},
                           {"colored_partition", d.key.second.to_string()},
                           {"engine_a", engine_name(tables[0].engine())},
                           {"engine_b", engine_name(tables[i].engine())},
                           {"a", d.in_a ? io::to_json(d.a) : Json()},
                           {"b", d.in_b ? io::to_json(d.b) : Json()}});
    }
  }
  const bool agree = diffs.empty();

  std::string text;
  if (cfg.format == "json") {
    Json tj = Json::object();
    for (const auto& t : tables) tj[engine_name(t.engine())] = io::to_json(t);
    text = dump(Json{{"m", cfg.m}, {"tables", tj}, {"diff", diffs}, {"agree", agree}});
  } else if (cfg.format == "csv") {
    for (std::size_t i = 0; i < tables.size(); ++i) {
      std::string csv = io::to_csv(tables[i]);
      if (i > 0) csv = csv.substr(csv.find('\n') + 1);
      text += csv;
    }
    if (!agree) std::cerr << diffs.size() << " disagreeing entries\n";
  } else {
    for (const auto& t : tables) text += io::to_pretty(t) + "\n";
    text += std::string("engines agree: ") + (agree ? "yes" : "no") + "\n";
  }
  io::write_output(text, cfg.out);
  return agree ? kExitPass : kExitDisagree;
}

int cmd_cj_matrix(const RunConfig& cfg) {
  const int n = cfg.n.value_or(2);
  const CJFamily fam = build_cj(cfg.m, n);
  const ColoredBasis basis(cfg.m, n);
  std::string text;
  if (cfg.format == "json") {
    Json ops = Json::array();
    for (std::size_t i = 0; i < fam.ops.size(); ++i) {
      ops.push_back(Json{{"operator", "CJ_" + std::to_string(i)}, {"entries", io::matrix_to_json(fam.ops[i], cfg.m, n)}});
    }
    Json names = Json::array();
    for (const auto& b : basis.elements()) names.push_back(b.to_string());
    text = dump(Json{{"m", cfg.m}, {"n", n}, {"basis", names}, {"operators", ops}});
  } else if (cfg.format == "csv") {
    text = "operator,row,col,numerator,denominator\n";
    for (std::size_t i = 0; i < fam.ops.size(); ++i) {
      std::string csv = io::matrix_to_csv(fam.ops[i], cfg.m, n);
      std::istringstream lines(csv.substr(csv.find('\n') + 1));
      std::string line;
      while (std::getline(lines, line)) text += "CJ_" + std::to_string(i) + "," + line + "\n";
    }
  } else {
    for (std::size_t i = 0; i < fam.ops.size(); ++i) {
      text += "CJ_" + std::to_string(i) + ":\n";
      const auto op = LinearOperator<Rational>::from_matrix(cfg.m, n, Basis::P, fam.ops[i]);
      for (const auto& mono : basis.elements()) {
        text += "  " + GradedPoly<Rational>::monomial(mono).to_string() + " -> " + op.image(mono).to_string() + "\n";
      }
    }
  }
  io::write_output(text, cfg.out);
  return kExitPass;
}

int cmd_genfun(const RunConfig& cfg) {
  const int nmax = cfg.max_degree.value_or(3);
  const GenFunction h = evolve(cfg.m, nmax, cfg.order_bounds(cfg.m, 2));
  std::ostringstream text;
  if (cfg.format == "json") {
    Json slices = Json::array();
    for (const auto& [p, poly] : h.slices) slices.push_back(Json{{"profile", p.to_string()}, {"poly", io::to_json(poly)}});
    text << dump(Json{{"m", h.m}, {"max_degree", h.max_degree}, {"orders", h.orders}, {"slices", slices}});
  } else if (cfg.format == "csv") {
    text << "profile,monomial,numerator,denominator\n";
    for (const auto& [p, poly] : h.slices) {
      for (const auto& [mono, c] : poly.terms()) {
        text << '"' << p.to_string() << "\",\"" << mono.to_string() << "\"," << c.get_num().get_str() << ','
             << c.get_den().get_str() << '\n';
      }
    }
  } else {
    for (const auto& [p, poly] : h.slices) text << "beta^(" << p.to_string() << "): " << poly.to_string() << '\n';
  }
  io::write_output(text.str(), cfg.out);
  return kExitPass;
}

// KP check on the perturbed series reported as an ordinary pass/fail line.
CheckResult kp_line(int m, int weight, const std::vector<int>& orders, bool perturb) {
  CheckResult r("KP equations (m=" + std::to_string(m) + ", weight " + std::to_string(weight) +
                (perturb ? ", perturbed" : "") + ")");
  for (const auto& rep : kp_check(m, weight, orders, perturb)) {
    r.record(rep.ok(), "residual in family " + std::to_string(rep.alpha));
  }
  return r;
}

int cmd_verify(const RunConfig& cfg) {
  const int m = cfg.m;
  const int n = cfg.n.value_or(3);
  std::vector<CheckResult> checks;
  checks.push_back(check_initial_condition(m, n));
  checks.push_back(check_triple_engine(m, n, 3));
  checks.push_back(check_bruteforce(m, std::min(n, 2), 2, cfg.budget));
  if (m == 1) checks.push_back(check_classical_anchor(std::min(n, 5), 4));
  if (m * n <= 8) checks.push_back(check_normalizer(m, n));
  const Integer order = ipow(Integer(m), n) * factorial(n);
  if (order * order <= Integer(static_cast<unsigned long>(cfg.budget))) {
    checks.push_back(check_homomorphism(m, n));
    checks.push_back(check_conjugacy(m, n));
    checks.push_back(check_multiplicities(m, n));
  }
  checks.push_back(check_diagram(m, n));
  checks.push_back(check_operator_identities(m, n));
  checks.push_back(check_eigen(m, n));
  if (m == 2) checks.push_back(check_m2_cj1(n));
  checks.push_back(check_cauchy(m, n));
  checks.push_back(check_cj_pde(m, n, std::vector<int>(static_cast<std::size_t>(m), 2)));
  const int weight = cfg.max_degree.value_or(m <= 2 ? 13 : 9);
  checks.push_back(kp_line(m, weight, cfg.order_bounds(m, m <= 2 ? 3 : 1), cfg.perturb));
  std::vector<int> elsv_orders(static_cast<std::size_t>(m), 2);
  elsv_orders[0] = 3;
  checks.push_back(check_elsv(m, m == 1 ? 4 : 3, elsv_orders));

  io::write_output(check_lines(checks, cfg.format), cfg.out);
  const bool all = std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
  return all ? kExitPass : kExitDisagree;
}

int cmd_kp(const RunConfig& cfg) {
  const int weight = cfg.max_degree.value_or(13);
  const auto reports = kp_check(cfg.m, weight, cfg.order_bounds(cfg.m, 3), cfg.perturb);
  bool all = true;
  std::ostringstream text;
  Json arr = Json::array();
  if (cfg.format == "csv") text << "m,family,weight,eq1_zero,eq2_zero,eq1_terms,eq2_terms\n";
  for (const auto& r : reports) {
    all = all && r.ok();
    arr.push_back(io::to_json(r));
    if (cfg.format == "csv") {
      text << r.m << ',' << r.alpha << ',' << r.weight << ',' << r.eq1_zero << ',' << r.eq2_zero << ',' << r.eq1_terms
           << ',' << r.eq2_terms << '\n';
    } else if (cfg.format == "pretty") {
      text << (r.ok() ? "PASS" : "FAIL") << " family " << r.alpha << ": first equation "
           << (r.eq1_zero ? "vanishes" : std::to_string(r.eq1_terms) + " residual terms") << ", second equation "
           << (r.eq2_zero ? "vanishes" : std::to_string(r.eq2_terms) + " residual terms") << " (exact through weight "
           << r.weight - 4 << " / " << r.weight - 5 << ")\n";
    }
  }
  if (cfg.format == "json") text << dump(Json{{"reports", arr}, {"pass", all}});
  io::write_output(text.str(), cfg.out);
  return all ? kExitPass : kExitDisagree;
}

int cmd_elsv(const RunConfig& cfg) {
  const int m = cfg.m;
  const int nmax = cfg.max_degree.value_or(m == 1 ? 4 : 3);
  std::vector<int> orders = cfg.order_bounds(m, 2);
  if (cfg.orders.empty()) orders[0] = 3;
  const ReductionReport red = reduction_check(m, nmax, orders);
  const EulerReport eul = euler_weight_check(m, std::vector<int>(orders.begin() + 1, orders.end()), nmax);
  const ConnectedReport conn = verify_connected(classical_table(nmax, orders[0]), 4);
  const bool all = red.ok() && eul.match && conn.ok();
  std::ostringstream text;
  if (cfg.format == "json") {
    text << dump(Json{{"reduction", io::to_json(red)},
                      {"euler_weight", io::to_json(eul)},
                      {"connected", Json{{"checked", conn.checked}, {"failures", conn.failures}, {"pass", conn.ok()}}},
                      {"pass", all}});
  } else if (cfg.format == "csv") {
    text << "family,beta_exponent,monomial,log_H,classical,pass\n";
    for (const auto& row : red.rows) {
      std::string e;
      for (std::size_t i = 0; i < row.exponent.size(); ++i) e += (i ? " " : "") + std::to_string(row.exponent[i]);
      text << row.alpha << ',' << e << ",\"" << row.monomial.to_string() << "\",\"" << row.lhs.to_string() << "\",\""
           << row.rhs.to_string() << "\"," << (row.pass ? "true" : "false") << '\n';
    }
  } else {
    int bad = 0;
    for (const auto& row : red.rows) bad += !row.pass;
    text << (red.ok() ? "PASS" : "FAIL") << " log H reduction: " << red.rows.size() << " coefficients, " << bad
         << " mismatched, " << red.mixed_terms << " mixed-family terms, exp consistent: "
         << (red.exp_consistent ? "yes" : "no") << '\n';
    text << (eul.match ? "PASS" : "FAIL") << " Euler weight identity (" << eul.lhs_terms << " terms)\n";
    text << (conn.ok() ? "PASS" : "FAIL") << " connected numbers (" << conn.checked << " checks)\n";
  }
  io::write_output(text.str(), cfg.out);
  return all ? kExitPass : kExitDisagree;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--m", cfg.m, "Order of the cyclic color group");
  sub->add_option("--n", cfg.n, "Degree");
  sub->add_option("--max-degree", cfg.max_degree, "Degree (or KP time weight) bound");
  sub->add_option("--orders", cfg.orders, "Per-class bounds on reflection counts / beta orders, e.g. 3,2");
  sub->add_option("--engines", cfg.engines, "Comma list of enumeration, cutjoin, schur, bruteforce");
  sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  sub->add_option("--budget", cfg.budget, "Step budget for brute-force scans");
  sub->add_option("--out", cfg.out, "Output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz numbers for the complex reflection groups G(m,1,n)"};
  app.require_subcommand(1);
  RunConfig cfg;
  struct Sub {
    const char* name;
    const char* help;
    int (*run)(const RunConfig&);
  };
  const Sub subs[] = {
      {"classes", "List conjugacy classes with sizes", cmd_classes},
      {"hurwitz", "Hurwitz number tables from the selected engines, with a diff", cmd_hurwitz},
      {"cj-matrix", "Cut-and-join operator matrices on one degree", cmd_cj_matrix},
      {"genfun", "Truncated generating function", cmd_genfun},
      {"verify", "Run the theorem checks for one m", cmd_verify},
      {"kp-check", "KP residuals per u-family", cmd_kp},
      {"elsv-check", "Reduction of log H to classical Hurwitz numbers", cmd_elsv},
  };
  std::vector<std::pair<CLI::App*, int (*)(const RunConfig&)>> handlers;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub, cfg);
    if (std::string(s.name) == "verify" || std::string(s.name) == "kp-check") {
      sub->add_flag("--perturb", cfg.perturb, "Add 1 to the t_2^2 coefficient (negative control)");
    }
    handlers.emplace_back(sub, s.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    cfg.validate();
    for (const auto& [sub, run] : handlers) {
      if (sub->parsed()) return run(cfg);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
