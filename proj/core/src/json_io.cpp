/*
 * Copyright 2026 The gkring Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "gk/json_io.hpp"

#include <limits>
#include <string>

#include "gk/arith.hpp"
#include "gk/builtins.hpp"
#include "gk/errors.hpp"

namespace gk::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::uint64_t as_u64(const json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v >= 0) return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    const Integer v = parse_integer(j.get<std::string>());
    if (v >= 0 && v <= Integer(std::numeric_limits<std::uint64_t>::max())) {
      return static_cast<std::uint64_t>(v);
    }
  }
  throw ParseError(std::string("expected a non-negative integer for ") + what);
}

Rational as_rational(const json& j, const char* what) {
  if (j.is_number_unsigned()) return Rational(Integer(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Rational(Integer(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError(std::string("expected an exact integer or \"num/den\" string for ") + what);
}

Integer as_integer(const json& j, const char* what) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw ParseError(std::string("expected an exact integer for ") + what);
}

std::uint64_t resolve_q(const json& j, std::optional<std::uint64_t> q) {
  if (j.is_object() && j.contains("q")) {
    const auto own = as_u64(j.at("q"), "q");
    if (q && *q != own) {
      throw ParseError("q = " + std::to_string(own) + " conflicts with q = " + std::to_string(*q));
    }
    return own;
  }
  if (!q) throw ParseError("q is neither given in the input nor supplied by the caller");
  return *q;
}

geom::DegreeRelation relation_from(const std::string& s) {
  if (s == "divides") return geom::DegreeRelation::kDivides;
  if (s == "not_divides") return geom::DegreeRelation::kNotDivides;
  if (s == "equals") return geom::DegreeRelation::kEquals;
  if (s == "not_equals") return geom::DegreeRelation::kNotEquals;
  throw ParseError("unknown degree relation '" + s + "'");
}

std::string relation_name(geom::DegreeRelation r) {
  switch (r) {
    case geom::DegreeRelation::kDivides:
      return "divides";
    case geom::DegreeRelation::kNotDivides:
      return "not_divides";
    case geom::DegreeRelation::kEquals:
      return "equals";
    case geom::DegreeRelation::kNotEquals:
      return "not_equals";
  }
  return "?";
}

// Every number leaves as a decimal string so downstream tools never round.
json stringify(json j) {
  if (j.is_number_integer()) return j.dump();
  if (j.is_array() || j.is_object()) {
    for (auto& v : j) v = stringify(std::move(v));
  }
  return j;
}

}  // namespace

json numeric_json(const ff::FieldCtx& v);
json numeric_json(const geom::PolySystem& v);
json numeric_json(const geom::ConstructibleSet& v);
json numeric_json(const geom::ClosedPointTally& v);
json numeric_json(const kring::RingElement& v);
json numeric_json(const kring::MeasureCandidate& v);
json numeric_json(const falsify::Witness& v);

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// --- ff ----------------------------------------------------------------------

json numeric_json(const ff::FieldCtx& ctx) {
  return {{"p", ctx.characteristic()}, {"N", ctx.degree()}, {"modulus", ctx.modulus()}};
}

ff::FieldCtx field_from_json(const json& j) {
  const auto p = as_u64(field(j, "p"), "p");
  const auto n = as_u64(field(j, "N"), "N");
  const json& mod = field(j, "modulus");
  if (!mod.is_array() || mod.size() != n) throw ParseError("modulus must list N coefficients");
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : mod) coeffs.push_back(as_u64(c, "modulus coefficient"));
  try {
    return ff::make_field_with_modulus(p, std::move(coeffs));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json element_to_json(const ff::FieldCtx& ctx, ff::FieldElement a) {
  return stringify(json(ctx.coeffs(a)));
}

ff::FieldElement element_from_json(const ff::FieldCtx& ctx, const json& j) {
  if (!j.is_array()) throw ParseError("field element must be a coefficient array");
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : j) coeffs.push_back(as_u64(c, "element coefficient"));
  try {
    return ctx.from_coeffs(coeffs);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// --- geom --------------------------------------------------------------------

json numeric_json(const geom::PolySystem& system) {
  const geom::BaseField base(system.q());
  json polys = json::array();
  for (const auto& poly : system.polys()) {
    json terms = json::array();
    for (const auto& t : poly.terms) {
      json coeff = base.prime_power().e == 1 ? json(t.coeff.packed)
                                             : element_to_json(base.ctx(), t.coeff);
      terms.push_back({{"exp", t.exponents}, {"coeff", coeff}});
    }
    polys.push_back(std::move(terms));
  }
  return {{"q", system.q()}, {"num_vars", system.num_vars()}, {"polys", std::move(polys)}};
}

geom::PolySystem system_from_json(const json& j, std::optional<std::uint64_t> q_hint) {
  const std::uint64_t q = resolve_q(j, q_hint);
  const auto num_vars = as_u64(field(j, "num_vars"), "num_vars");
  const json& polys_j = j.contains("polys") ? j.at("polys") : json::array();
  if (!polys_j.is_array()) throw ParseError("polys must be an array");
  try {
    const geom::BaseField base(q);
    std::vector<geom::Polynomial> polys;
    for (const auto& poly_j : polys_j) {
      if (!poly_j.is_array()) throw ParseError("each polynomial must be an array of terms");
      geom::Polynomial poly;
      for (const auto& term_j : poly_j) {
        geom::Exponents exps;
        for (const auto& e : field(term_j, "exp")) {
          exps.push_back(static_cast<unsigned>(as_u64(e, "exponent")));
        }
        const json& c = field(term_j, "coeff");
        ff::FieldElement coeff;
        if (c.is_array()) {
          coeff = element_from_json(base.ctx(), c);
        } else if (base.prime_power().e == 1) {
          coeff = base.ctx().from_int(static_cast<std::int64_t>(
              static_cast<long long>(as_integer(c, "coefficient") % Integer(q))));
        } else {
          throw ParseError("coefficients over non-prime F_q must be element arrays");
        }
        poly.terms.push_back({std::move(exps), coeff});
      }
      polys.push_back(std::move(poly));
    }
    return geom::PolySystem(q, num_vars, std::move(polys));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json numeric_json(const geom::ConstructibleSet& set) {
  using Kind = geom::ConstructibleSet::Kind;
  const auto& ch = set.children();
  switch (set.kind()) {
    case Kind::kSystem:
      return {{"kind", "system"}, {"system", to_json(set.system())}};
    case Kind::kUnion:
    case Kind::kIntersection: {
      json parts = json::array();
      for (const auto& c : ch) parts.push_back(to_json(c));
      return {{"kind", set.kind() == Kind::kUnion ? "union" : "intersection"},
              {"parts", std::move(parts)}};
    }
    case Kind::kDifference:
      return {{"kind", "difference"}, {"whole", to_json(ch[0])}, {"removed", to_json(ch[1])}};
    case Kind::kDegreeFilter:
      return {{"kind", "degree_filter"},
              {"coord", set.filter_coord()},
              {"relation", relation_name(set.filter_condition().relation)},
              {"value", set.filter_condition().value},
              {"inner", to_json(ch[0])}};
    case Kind::kProduct:
      return {{"kind", "product"}, {"left", to_json(ch[0])}, {"right", to_json(ch[1])}};
  }
  return {};
}

geom::ConstructibleSet set_from_json(const json& j, std::optional<std::uint64_t> q_hint) {
  using geom::ConstructibleSet;
  std::optional<std::uint64_t> q = q_hint;
  if (j.is_object() && j.contains("q")) q = resolve_q(j, q_hint);
  const std::string kind = field(j, "kind").get<std::string>();
  try {
    if (kind == "system") return ConstructibleSet::zero_set(system_from_json(field(j, "system"), q));
    if (kind == "union" || kind == "intersection") {
      std::vector<ConstructibleSet> parts;
      for (const auto& p : field(j, "parts")) parts.push_back(set_from_json(p, q));
      return kind == "union" ? ConstructibleSet::unite(std::move(parts))
                             : ConstructibleSet::intersect(std::move(parts));
    }
    if (kind == "difference") {
      return ConstructibleSet::difference(set_from_json(field(j, "whole"), q),
                                          set_from_json(field(j, "removed"), q));
    }
    if (kind == "degree_filter") {
      geom::DegreeCondition cond{relation_from(field(j, "relation").get<std::string>()),
                                 as_u64(field(j, "value"), "value")};
      return ConstructibleSet::degree_filter(set_from_json(field(j, "inner"), q),
                                             as_u64(field(j, "coord"), "coord"), cond);
    }
    if (kind == "product") {
      return ConstructibleSet::product(set_from_json(field(j, "left"), q),
                                       set_from_json(field(j, "right"), q));
    }
    if (kind == "builtin") {
      if (!q) throw ParseError("builtin set needs q");
      return builtin_set(*q, field(j, "name").get<std::string>());
    }
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  } catch (const json::type_error& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown set kind '" + kind + "'");
}

json numeric_json(const geom::ClosedPointTally& tally) {
  json out = json::object();
  for (const auto& [d, n] : tally.counts) out[std::to_string(d)] = std::to_string(n);
  return out;
}

// --- kring -------------------------------------------------------------------

json numeric_json(const kring::RingElement& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms()) {
    terms.push_back({{"L_exp", key.l_exp}, {"spec_m", key.spec_m}, {"coeff", c.str()}});
  }
  return {{"q", x.q()}, {"terms", std::move(terms)}};
}

kring::RingElement ring_element_from_json(const json& j, std::optional<std::uint64_t> q_hint) {
  const json& terms_j = j.is_array() ? j : field(j, "terms");
  const std::uint64_t q = j.is_array() ? resolve_q(json::object(), q_hint) : resolve_q(j, q_hint);
  std::map<kring::BasisKey, Integer> terms;
  for (const auto& t : terms_j) {
    const kring::BasisKey key{as_u64(field(t, "L_exp"), "L_exp"),
                              as_u64(field(t, "spec_m"), "spec_m")};
    terms[key] += as_integer(field(t, "coeff"), "coeff");
  }
  try {
    return kring::RingElement::from_terms(q, terms);
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

json numeric_json(const kring::MeasureCandidate& m) {
  json s = json::object();
  for (const auto& [idx, v] : m.explicit_values()) s[std::to_string(idx)] = to_string(v);
  return {{"t", to_string(m.t())}, {"s", std::move(s)}};
}

kring::MeasureCandidate candidate_from_json(const json& j) {
  const Rational t = as_rational(field(j, "t"), "t");
  std::map<std::uint64_t, Rational> s;
  if (j.contains("s")) {
    const json& sj = j.at("s");
    if (!sj.is_object()) throw ParseError("s must be an object mapping m to s_m");
    for (const auto& [key, value] : sj.items()) {
      s[as_u64(json(key), "spec index")] = as_rational(value, "s_m");
    }
  }
  try {
    return kring::MeasureCandidate(t, std::move(s));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

// --- falsify -----------------------------------------------------------------

json numeric_json(const falsify::Witness& w) {
  json out = {{"construction", std::string(falsify::to_string(w.construction))},
              {"class", w.class_expr ? to_json(*w.class_expr) : json(nullptr)},
              {"value", to_string(w.value)},
              {"narrative", w.narrative}};
  if (w.violation) {
    out["violation"] = {{"a", w.violation->a},
                        {"b", w.violation->b},
                        {"lhs", to_string(w.violation->lhs)},
                        {"rhs", to_string(w.violation->rhs)}};
  }
  return out;
}

falsify::Witness witness_from_json(const json& j, std::optional<std::uint64_t> q) {
  falsify::Witness w;
  w.construction = falsify::construction_from_string(field(j, "construction").get<std::string>());
  if (j.contains("class") && !j.at("class").is_null()) {
    w.class_expr = ring_element_from_json(j.at("class"), q);
  }
  w.value = as_rational(field(j, "value"), "value");
  if (j.contains("narrative")) w.narrative = j.at("narrative").get<std::string>();
  if (j.contains("violation")) {
    const json& v = j.at("violation");
    w.violation = kring::HomViolation{as_u64(field(v, "a"), "a"), as_u64(field(v, "b"), "b"),
                                      as_rational(field(v, "lhs"), "lhs"),
                                      as_rational(field(v, "rhs"), "rhs")};
  }
  return w;
}

// --- public writers -----------------------------------------------------------

json to_json(const ff::FieldCtx& v) { return stringify(numeric_json(v)); }
json to_json(const geom::PolySystem& v) { return stringify(numeric_json(v)); }
json to_json(const geom::ConstructibleSet& v) { return stringify(numeric_json(v)); }
json to_json(const geom::ClosedPointTally& v) { return stringify(numeric_json(v)); }
json to_json(const kring::RingElement& v) { return stringify(numeric_json(v)); }
json to_json(const kring::MeasureCandidate& v) { return stringify(numeric_json(v)); }
json to_json(const falsify::Witness& v) { return stringify(numeric_json(v)); }

}  // namespace gk::json_io
