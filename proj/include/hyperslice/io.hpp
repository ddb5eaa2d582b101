/// @file io.hpp
/// @brief JSON documents for polynomials, tables, decompositions and suite
/// reports, with exact re-ingestion.
///
/// Rationals are strings "p/q"; algebra elements are arrays of d rationals
/// in table order. Keys keep insertion order so output is byte-stable.

#pragma once

#include "hyperslice/decompositions.hpp"
#include "hyperslice/verify.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hyperslice {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline Json to_json(const AlgElement& a) {
  Json j = Json::array();
  for (const auto& q : a.coeffs()) j.push_back(to_json(q));
  return j;
}

inline AlgElement element_from_json(const Json& j, const AlgebraPtr& table) {
  if (!j.is_array() || j.size() != table->dim())
    throw Error("expected an array of " + std::to_string(table->dim()) + " rationals");
  std::vector<Rational> c;
  for (const auto& q : j) c.push_back(rational_from_json(q));
  return AlgElement(table, std::move(c));
}

/// {"terms":[{"exponents":[...],"coeff":[...]}]} in graded-lex order.
inline Json to_json(const CoordPoly& p) {
  Json terms = Json::array();
  const int nv = p.active_variables();
  for (const auto& [k, c] : p.terms()) {
    Json e = Json::array();
    for (int i = 0; i < nv; ++i) e.push_back(static_cast<int>(k[i]));
    terms.push_back(Json{{"exponents", e}, {"coeff", to_json(c)}});
  }
  return Json{{"terms", terms}};
}

/// Exponent vectors of length m+2 mark a polynomial in the extension variable.
inline CoordPoly coord_from_json(const Json& j, const SubspacePtr& sub) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw Error("coordinate polynomial needs a \"terms\" array");
  const int m1 = sub->m() + 1;
  bool extended = false;
  CoordPoly p(sub);
  for (const auto& t : j["terms"]) {
    const auto& e = t.at("exponents");
    const int n = static_cast<int>(e.size());
    if (n != m1 && n != m1 + 1)
      throw Error("exponent vector must have " + std::to_string(m1) + " or " +
                  std::to_string(m1 + 1) + " entries");
    extended = extended || n == m1 + 1;
    MultiIndex k;
    for (int i = 0; i < n; ++i) {
      const int v = e[i].get<int>();
      if (v < 0 || v > 255) throw Error("exponent out of range");
      k.e[i] = static_cast<std::uint8_t>(v);
    }
    p.add_term(k, element_from_json(t.at("coeff"), sub->table()));
  }
  if (extended) p.set_extended(true);
  return p;
}

/// {"coefficients":[a_0, a_1, ...]} for sum_n x^n a_n.
inline Json to_json(const SlicePoly& f) {
  Json c = Json::array();
  for (const auto& a : f.coeffs()) c.push_back(to_json(a));
  return Json{{"coefficients", c}};
}

inline SlicePoly slice_from_json(const Json& j, const SubspacePtr& sub) {
  if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array())
    throw Error("slice polynomial needs a \"coefficients\" array");
  std::vector<AlgElement> c;
  for (const auto& a : j["coefficients"]) c.push_back(element_from_json(a, sub->table()));
  return SlicePoly(sub, std::move(c));
}

inline Json document_header(const char* kind, const SubspacePtr& sub) {
  return Json{{"kind", kind}, {"algebra", sub->table()->spec()}, {"subspace", sub->selector()}};
}

inline SubspacePtr subspace_from_document(const Json& j) {
  return make_subspace(j.at("algebra").get<std::string>(), j.at("subspace").get<std::string>());
}

inline Json table_document(const AlgebraTable& t) {
  Json products = Json::array();
  for (std::size_t a = 0; a < t.dim(); ++a)
    for (std::size_t b = 0; b < t.dim(); ++b) {
      Json terms = Json::array();
      for (const auto& pt : t.product(a, b))
        terms.push_back(Json{{"label", t.label(pt.index)}, {"coeff", to_json(pt.coeff)}});
      products.push_back(Json{{"lhs", t.label(a)}, {"rhs", t.label(b)}, {"terms", terms}});
    }
  return Json{{"kind", "table"},
              {"algebra", t.spec()},
              {"dimension", t.dim()},
              {"associative", t.associative()},
              {"labels", t.labels()},
              {"conjugation_signs", t.conjugation_signs()},
              {"products", products}};
}

struct NamedPoly {
  std::string role;
  CoordPoly poly;
};

/// Output of one `decompose` run.
struct Decomposition {
  std::string method;
  SlicePoly input;
  std::optional<std::vector<Rational>> center;
  std::vector<NamedPoly> components;
  std::vector<Certificate> certificates;

  bool certified() const { return all_ok(certificates); }
};

inline const std::vector<std::string>& decomposition_methods() {
  static const std::vector<std::string> names{"zonal", "ddelta", "fueter", "primitive", "pzd", "bvp"};
  return names;
}

/// Runs `method` on f. Roles: zonal/pzd h1, h2; ddelta f0..; fueter g0..;
/// primitive g1, g2; bvp g, v. A centre is accepted by ddelta only.
inline Decomposition run_decomposition(const std::string& method, const SlicePoly& f,
                                       const std::optional<std::vector<Rational>>& center = {}) {
  Decomposition d{method, f, center, {}, {}};
  if (center && method != "ddelta") throw Error("--center is supported by the ddelta method only");
  auto indexed = [&](const char* prefix, const std::vector<CoordPoly>& ps) {
    for (std::size_t k = 0; k < ps.size(); ++k)
      d.components.push_back({prefix + std::to_string(k), ps[k]});
  };
  if (method == "zonal" || method == "pzd") {
    const ZonalPair z = method == "zonal" ? zonal_decompose(f) : pzd_decompose(f);
    d.components = {{"h1", z.h1}, {"h2", z.h2}};
    d.certificates = z.certificates;
  } else if (method == "ddelta") {
    const DDeltaComponents c = center ? ddelta_decompose_local(f, *center) : ddelta_decompose(f);
    indexed("f", c.components);
    d.certificates = c.certificates;
  } else if (method == "fueter") {
    const FueterImage g = ddelta_fueter(f);
    indexed("g", g.monogenics);
    d.certificates = g.certificates;
  } else if (method == "primitive") {
    const PrimitivePair p = primitive_decompose(f);
    d.components = {{"g1", p.g1}, {"g2", p.g2}};
    d.certificates = p.certificates;
  } else if (method == "bvp") {
    const BvpPair b = bvp_pair(f);
    d.components = {{"g", b.g}, {"v", b.v}};
    d.certificates = {{"Delta g + 4 cr_conj(v) = 0", b.equation_g}, {"Delta v = 0", b.equation_v}};
  } else {
    throw Error("unknown decomposition method '" + method + "'");
  }
  return d;
}

inline Json to_json(const Decomposition& d) {
  Json j = document_header("decomposition", d.input.subspace());
  j["method"] = d.method;
  j["input"] = to_json(d.input);
  if (d.center) {
    Json c = Json::array();
    for (const auto& q : *d.center) c.push_back(to_json(q));
    j["center"] = c;
  }
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(Json{{"role", c.role}, {"poly", to_json(c.poly)}});
  j["components"] = comps;
  Json certs = Json::array();
  for (const auto& c : d.certificates) certs.push_back(Json{{"name", c.name}, {"ok", c.ok}});
  j["certificates"] = certs;
  return j;
}

inline Decomposition decomposition_from_json(const Json& j) {
  if (j.at("kind") != "decomposition") throw Error("document kind is not \"decomposition\"");
  const SubspacePtr sub = subspace_from_document(j);
  Decomposition d{j.at("method").get<std::string>(), slice_from_json(j.at("input"), sub), {}, {}, {}};
  if (j.contains("center")) {
    std::vector<Rational> c;
    for (const auto& q : j["center"]) c.push_back(rational_from_json(q));
    d.center = std::move(c);
  }
  for (const auto& c : j.at("components"))
    d.components.push_back({c.at("role").get<std::string>(), coord_from_json(c.at("poly"), sub)});
  for (const auto& c : j.at("certificates"))
    d.certificates.push_back({c.at("name").get<std::string>(), c.at("ok").get<bool>()});
  return d;
}

/// A single polynomial as a document of kind "coord" or "slice".
inline Json poly_document(const CoordPoly& p) {
  Json j = document_header("coord", p.subspace());
  j["poly"] = to_json(p);
  return j;
}

inline Json poly_document(const SlicePoly& f) {
  Json j = document_header("slice", f.subspace());
  j["poly"] = to_json(f);
  return j;
}

inline Json to_json(const SuiteReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"trial", f.trial},
                            {"context", f.context},
                            {"check", f.check},
                            {"input", f.input},
                            {"expected", f.expected},
                            {"got", f.got}});
  Json j{{"kind", "report"},
         {"suite", r.suite},
         {"seed", r.seed},
         {"trials", r.trials},
         {"contexts", r.contexts},
         {"passed", r.passed()},
         {"failure_count", r.failure_count},
         {"failures", failures},
         {"notes", r.notes}};
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

}  // namespace hyperslice
