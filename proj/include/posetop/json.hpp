#pragma once

#include <string>

#include <json.hpp>

#include "posetop/discrepancy.hpp"
#include "posetop/order_enum.hpp"
#include "posetop/polynomial.hpp"
#include "posetop/poset.hpp"
#include "posetop/series.hpp"
#include "posetop/zeta.hpp"

namespace posetop {

using Json = nlohmann::ordered_json;

inline constexpr const char* report_schema_version = "v1";

/// {"elements": [...], "covers": [[a, b], ...]}; only cover pairs are written.
inline Json to_json(const Poset& p) {
  Json covers = Json::array();
  for (const auto& [a, b] : p.cover_relations()) covers.push_back({p.label(a), p.label(b)});
  return {{"elements", p.labels()}, {"covers", covers}};
}

inline Poset poset_from_json(const Json& j) {
  std::vector<LabelPair> covers;
  for (const auto& c : j.at("covers")) covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
  return Poset::from_covers(j.at("elements").get<std::vector<std::string>>(), covers);
}

inline Json to_json(const BinomialPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [i, a] : p.coeffs()) coeffs[std::to_string(i)] = to_fraction_string(a);
  return {{"basis", "binomial"}, {"coeffs", coeffs}};
}

inline Json to_json(const MonomialPoly& p) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    if (p.coeffs()[i] != 0) coeffs[std::to_string(i)] = to_fraction_string(p.coeffs()[i]);
  return {{"basis", "monomial"}, {"coeffs", coeffs}};
}

inline Json to_json(const SeriesVec& s) {
  Json coeffs = Json::object();
  for (const auto& [i, c] : s.coeffs) coeffs[std::to_string(i)] = to_fraction_string(c);
  return {{"mode", to_string(s.mode)},
          {"coeffs", coeffs},
          {"provenance", s.provenance ? to_json(*s.provenance) : Json(nullptr)}};
}

inline Json to_json(const ClosedForm& f) {
  Json numerator = Json::array();
  for (const auto& c : f.numerator.coeffs()) numerator.push_back(to_fraction_string(c));
  return {{"numerator", numerator}, {"den_power", f.den_power}};
}

inline Json to_json(const ZetaExpr& z) {
  Json coeffs = Json::object();
  for (const auto& [k, c] : z.coeffs) coeffs[std::to_string(k)] = to_fraction_string(c);
  return {{"constant", to_fraction_string(z.constant)}, {"zeta_coeffs", coeffs}};
}

inline Json to_json(const Discrepancy& d) {
  return {{"id", d.id},           {"statement", d.statement}, {"published", d.published},
          {"derived", d.derived}, {"flagged", d.flagged},     {"notes", d.notes}};
}

inline std::string numeric_string(const Real& x, int digits = 30) { return x.str(digits); }

inline Json to_json(const IdentityRecord& r) {
  Json numeric = nullptr;
  if (r.verified) {
    numeric = {{"lhs", numeric_string(*r.lhs_numeric)},
               {"rhs", numeric_string(*r.rhs_numeric)},
               {"bound", r.error_bound->str(3)},
               {"terms", r.terms_used}};
  }
  return {{"schema", report_schema_version},
          {"id", r.id},
          {"poset", r.poset ? to_json(*r.poset) : Json(nullptr)},
          {"lhs", r.lhs_text},
          {"rhs", to_json(r.rhs)},
          {"rhs_text", r.rhs.to_string()},
          {"rhs_shifted", r.rhs.to_shifted_string()},
          {"numeric", numeric},
          {"pass", r.pass},
          {"notes", r.notes}};
}

/// d-vector and both order polynomials of a poset.
inline Json poly_report(const Poset& p, const EnumerationLimits& limits = {}) {
  const DVector dv = d_vector(p, limits);
  Json d = Json::array();
  for (const auto& v : dv.d) d.push_back(v.get_str());
  const BinomialPoly strict = order_polynomial(dv, MapMode::strict);
  const BinomialPoly weak = order_polynomial(dv, MapMode::weak);
  const ReciprocityReport rec = reciprocity_check(p, limits);
  return {{"schema", report_schema_version},
          {"poset", to_json(p)},
          {"d", d},
          {"strict_poly", to_json(strict)},
          {"weak_poly", to_json(weak)},
          {"strict_monomial", to_json(to_monomial(strict))},
          {"weak_monomial", to_json(to_monomial(weak))},
          {"reciprocity", rec.pass},
          {"discrepancies", Json::array()}};
}

}  // namespace posetop
