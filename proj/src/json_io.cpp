#include "appell/json_io.hpp"

#include "appell/errors.hpp"

namespace appell {

namespace {

Json rational_list(std::span<const Rational> v) {
  Json arr = Json::array();
  for (const auto& r : v) arr.push_back(r.str());
  return arr;
}

std::vector<Rational> parse_rational_list(const Json& j) {
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(e.get<Rational>());
  return out;
}

}  // namespace

std::string family_name(Family f) { return f == Family::Bernoulli ? "bernoulli" : "euler"; }

Family parse_family(std::string_view name) {
  if (name == "bernoulli") return Family::Bernoulli;
  if (name == "euler") return Family::Euler;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

void to_json(Json& j, const Rational& r) { j = r.str(); }
void from_json(const Json& j, Rational& r) { r = Rational::parse(j.get<std::string>()); }

void to_json(Json& j, const Polynomial& p) { j = Json{{"coeffs", rational_list(p.coefficients())}}; }
void from_json(const Json& j, Polynomial& p) { p = Polynomial(parse_rational_list(j.at("coeffs"))); }

void to_json(Json& j, const TruncatedSeries& s) {
  j = Json{{"order", s.order()}, {"coeffs", rational_list(s.coefficients())}};
}
void from_json(const Json& j, TruncatedSeries& s) {
  s = TruncatedSeries(parse_rational_list(j.at("coeffs")));
  if (s.order() != j.at("order").get<std::size_t>())
    throw DomainError("series order does not match its coefficient count");
}

void to_json(Json& j, const AppellExpansion& e) {
  Json polys = Json::array();
  for (const auto& p : e.polynomials) polys.push_back(rational_list(p.coefficients()));
  j = Json{{"order", e.order}, {"f_coeffs", rational_list(e.f.coefficients())}, {"polynomials", polys}};
}
void from_json(const Json& j, AppellExpansion& e) {
  e.order = j.at("order").get<std::size_t>();
  e.f = TruncatedSeries(parse_rational_list(j.at("f_coeffs")));
  e.polynomials.clear();
  for (const auto& p : j.at("polynomials")) e.polynomials.emplace_back(parse_rational_list(p));
}

void to_json(Json& j, const CoefficientMismatch& m) {
  j = Json{{"n", m.n}, {"power", m.power}, {"lhs", m.lhs}, {"rhs", m.rhs}};
}
void from_json(const Json& j, CoefficientMismatch& m) {
  m.n = j.at("n").get<std::size_t>();
  m.power = j.value("power", std::size_t{0});
  m.lhs = j.at("lhs").get<Rational>();
  m.rhs = j.at("rhs").get<Rational>();
}

void to_json(Json& j, const SymmetryReport& r) {
  j = Json{{"a", r.parameter_a},        {"order", r.order_checked}, {"symmetric", r.symmetric},
           {"g_odd", r.g_odd},          {"h_even", r.h_even},       {"psi_odd", r.psi_odd},
           {"equ1_holds", r.equ1_holds}};
  j["first_failure"] = r.first_failure ? Json(*r.first_failure) : Json(nullptr);
}
void from_json(const Json& j, SymmetryReport& r) {
  r.parameter_a = j.at("a").get<Rational>();
  r.order_checked = j.at("order").get<std::size_t>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.g_odd = j.at("g_odd").get<bool>();
  r.h_even = j.at("h_even").get<bool>();
  r.psi_odd = j.at("psi_odd").get<bool>();
  r.equ1_holds = j.at("equ1_holds").get<bool>();
  const auto& ff = j.at("first_failure");
  if (ff.is_null()) r.first_failure.reset();
  else r.first_failure = ff.get<CoefficientMismatch>();
}

void to_json(Json& j, const SymmetryDecomposition& d) {
  j = Json{{"a", d.parameter_a},
           {"parity", d.parity == Parity::Odd ? "odd" : "even"},
           {"a_coeffs", rational_list(d.a_coeffs)},
           {"remainder_F", rational_list(d.remainder_F.coefficients())},
           {"finite_support", d.finite_support}};
}
void from_json(const Json& j, SymmetryDecomposition& d) {
  d.parameter_a = j.at("a").get<Rational>();
  const auto parity = j.at("parity").get<std::string>();
  if (parity != "odd" && parity != "even") throw DomainError("parity must be odd or even");
  d.parity = parity == "odd" ? Parity::Odd : Parity::Even;
  d.a_coeffs = parse_rational_list(j.at("a_coeffs"));
  d.remainder_F = TruncatedSeries(parse_rational_list(j.at("remainder_F")));
  d.finite_support = j.at("finite_support").get<bool>();
}

void to_json(Json& j, const FormulaMismatch& m) {
  j = Json{{"n", m.n},
           {"formula_coeffs", rational_list(m.formula_coeffs)},
           {"oracle_coeffs", rational_list(m.oracle_coeffs)}};
}
void from_json(const Json& j, FormulaMismatch& m) {
  m.n = j.at("n").get<std::size_t>();
  m.formula_coeffs = parse_rational_list(j.at("formula_coeffs"));
  m.oracle_coeffs = parse_rational_list(j.at("oracle_coeffs"));
}

void to_json(Json& j, const ValidationReport& r) {
  j = Json{{"kind", family_name(r.kind)}, {"r", r.r},           {"formula", r.formula_id},
           {"max_n", r.max_n},            {"checked", r.checked_n}, {"matches", r.matches},
           {"mismatches", r.mismatches},  {"note", r.note}};
}
void from_json(const Json& j, ValidationReport& r) {
  r.kind = parse_family(j.at("kind").get<std::string>());
  r.r = j.at("r").get<unsigned>();
  r.formula_id = j.at("formula").get<std::string>();
  r.max_n = j.at("max_n").get<std::size_t>();
  r.checked_n = j.at("checked").get<std::vector<std::size_t>>();
  r.matches = j.at("matches").get<std::vector<bool>>();
  r.mismatches = j.at("mismatches").get<std::vector<FormulaMismatch>>();
  r.note = j.value("note", std::string{});
}

void to_json(Json& j, const FourierEvaluation& e) {
  j = Json{{"n", e.n},
           {"x", e.x},
           {"terms_M", e.terms_M},
           {"partial_sum", e.partial_sum},
           {"imag_residue", e.imag_residue},
           {"exact_value", e.exact_value},
           {"abs_error", e.abs_error}};
}
void from_json(const Json& j, FourierEvaluation& e) {
  e.n = j.at("n").get<std::size_t>();
  e.x = j.at("x").get<Rational>();
  e.terms_M = j.at("terms_M").get<std::size_t>();
  e.partial_sum = j.at("partial_sum").get<double>();
  e.imag_residue = j.at("imag_residue").get<double>();
  e.exact_value = j.at("exact_value").get<Rational>();
  e.abs_error = j.at("abs_error").get<double>();
}

}  // namespace appell
