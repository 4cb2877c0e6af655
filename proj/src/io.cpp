#include "hurwitz/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace hurwitz::io {

Json to_json(const Rational& x) {
  return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  return ratio(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
}

Json to_json(const CycloNumber& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"m", x.m()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const Json& j) {
  std::vector<Rational> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
  return CycloNumber(j.at("m").get<int>(), coeffs);
}

Json to_json(const WreathElement& x) {
  std::vector<int> perm = x.perm();
  for (int& v : perm) ++v;
  return Json{{"perm", perm}, {"colors", x.colors()}};
}

namespace {

const char* basis_name(Basis b) { return b == Basis::P ? "p" : "u"; }

template <class F>
Json poly_json(const GradedPoly<F>& p) {
  Json terms = Json::array();
  for (const auto& [mono, c] : p.terms()) terms.push_back(Json{{"monomial", mono.to_string()}, {"coeff", to_json(c)}});
  return Json{{"m", p.colors()}, {"basis", basis_name(p.basis())}, {"terms", terms}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const GradedPoly<Rational>& p) { return poly_json(p); }
Json to_json(const GradedPoly<CycloNumber>& p) { return poly_json(p); }

Json to_json(const HurwitzTable& t) {
  Json rows = Json::array();
  for (const auto& [key, value] : t.entries()) {
    rows.push_back(Json{{"profile", key.first.to_string()},
                        {"colored_partition", key.second.to_string()},
                        {"numerator", value.get_num().get_str()},
                        {"denominator", value.get_den().get_str()},
                        {"engine", engine_name(t.engine())}});
  }
  return rows;
}

std::string to_csv(const HurwitzTable& t) {
  std::ostringstream os;
  os << "profile,colored_partition,numerator,denominator,engine\n";
  for (const auto& [key, value] : t.entries()) {
    os << csv_escape(key.first.to_string()) << ',' << csv_escape(key.second.to_string()) << ','
       << value.get_num().get_str() << ',' << value.get_den().get_str() << ',' << engine_name(t.engine()) << '\n';
  }
  return os.str();
}

std::string to_pretty(const HurwitzTable& t) {
  std::size_t w0 = 7, w1 = 9;
  for (const auto& [key, value] : t.entries()) {
    w0 = std::max(w0, key.first.to_string().size());
    w1 = std::max(w1, key.second.to_string().size());
  }
  std::ostringstream os;
  os << "engine: " << engine_name(t.engine()) << '\n';
  auto pad = [](std::string s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  os << pad("profile", w0) << pad("partition", w1) << "value\n";
  for (const auto& [key, value] : t.entries()) {
    os << pad(key.first.to_string(), w0) << pad(key.second.to_string(), w1) << value.get_str() << '\n';
  }
  return os.str();
}

Json matrix_to_json(const SparseMatrix<Rational>& mat, int m, int n) {
  const ColoredBasis basis(m, n);
  Json entries = Json::array();
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    for (const auto& [r, v] : mat.column(c)) {
      entries.push_back(Json{{"row", basis.at_index(r).to_string()},
                             {"col", basis.at_index(c).to_string()},
                             {"value", to_json(v)}});
    }
  }
  return entries;
}

std::string matrix_to_csv(const SparseMatrix<Rational>& mat, int m, int n) {
  const ColoredBasis basis(m, n);
  std::ostringstream os;
  os << "row,col,numerator,denominator\n";
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    for (const auto& [r, v] : mat.column(c)) {
      os << csv_escape(basis.at_index(r).to_string()) << ',' << csv_escape(basis.at_index(c).to_string()) << ','
         << v.get_num().get_str() << ',' << v.get_den().get_str() << '\n';
    }
  }
  return os.str();
}

Json to_json(const EigenData& e) {
  Json ck = Json::array();
  for (const auto& c : e.ck) ck.push_back(to_json(c));
  return Json{{"colored_partition", e.lambda.to_string()}, {"c0", to_json(e.c0)}, {"ck", ck}};
}

Json to_json(const KPReport& r) {
  return Json{{"m", r.m},
              {"family", r.alpha},
              {"weight", r.weight},
              {"orders", r.orders},
              {"eq1_zero", r.eq1_zero},
              {"eq2_zero", r.eq2_zero},
              {"eq1_residual_terms", r.eq1_terms},
              {"eq2_residual_terms", r.eq2_terms},
              {"pass", r.ok()}};
}

Json to_json(const ReductionReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back(Json{{"family", row.alpha},
                        {"beta_exponent", row.exponent},
                        {"monomial", row.monomial.to_string()},
                        {"log_H", to_json(row.lhs)},
                        {"classical", to_json(row.rhs)},
                        {"pass", row.pass}});
  }
  return Json{{"m", r.m},
              {"max_degree", r.max_degree},
              {"orders", r.orders},
              {"mixed_terms", r.mixed_terms},
              {"exp_consistent", r.exp_consistent},
              {"rows", rows},
              {"pass", r.ok()}};
}

Json to_json(const EulerReport& r) {
  return Json{{"m", r.m}, {"max_degree", r.max_degree}, {"orders", r.orders}, {"terms", r.lhs_terms}, {"pass", r.match}};
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(v);
  }
  return out;
}

}  // namespace hurwitz::io
