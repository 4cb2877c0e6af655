#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/cutjoin.hpp"
#include "hurwitz/cyclo.hpp"
#include "hurwitz/elsv.hpp"
#include "hurwitz/enumeration.hpp"
#include "hurwitz/kp.hpp"
#include "hurwitz/polyring.hpp"
#include "hurwitz/schur.hpp"
#include "hurwitz/wreath.hpp"

namespace hurwitz::io {

using Json = nlohmann::json;

/// {"num": "...", "den": "..."}
Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
/// {"m": m, "coeffs": [rational...]} in the power basis xi^0..xi^{phi(m)-1}.
Json to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const Json& j);
/// {"perm": [...], "colors": [...]}, perm 1-based.
Json to_json(const WreathElement& x);

/// Term list [{"monomial": "...", "coeff": ...}] plus basis and m.
Json to_json(const GradedPoly<Rational>& p);
Json to_json(const GradedPoly<CycloNumber>& p);

/// Rows {profile, colored_partition, numerator, denominator, engine}.
Json to_json(const HurwitzTable& t);
std::string to_csv(const HurwitzTable& t);
/// Aligned plain-text table.
std::string to_pretty(const HurwitzTable& t);

/// Nonzero entries [{"row": "...", "col": "...", "value": ...}] over the degree-n basis.
Json matrix_to_json(const SparseMatrix<Rational>& mat, int m, int n);
std::string matrix_to_csv(const SparseMatrix<Rational>& mat, int m, int n);

Json to_json(const EigenData& e);
Json to_json(const KPReport& r);
Json to_json(const ReductionReport& r);
Json to_json(const EulerReport& r);

/// Writes text to path, or to stdout when path is empty. Throws on I/O failure.
void write_output(const std::string& text, const std::string& path);

/// Comma-separated integers ("3,2"); empty string gives an empty list.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace hurwitz::io
