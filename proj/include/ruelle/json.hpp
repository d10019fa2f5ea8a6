#pragma once

// JSON rendering of the exact types and reports.  Exact numbers are strings
// ("p/q") or {"a","b","d"} objects; reports pair them with float
// approximations as {"exact": ..., "approx": ...}.  nlohmann::json keeps
// object keys sorted, so dump() output is canonical.

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "ruelle/exactnum.hpp"
#include "ruelle/reps.hpp"
#include "ruelle/rootdata.hpp"
#include "ruelle/spectrum.hpp"

namespace ruelle::json {

using Json = nlohmann::json;

struct RenderOptions {
  bool float_display = false;  // round approximations to 15 significant digits
};

inline double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::stod(buf);
}

inline Json to_json(const Rational& q) { return q.str(); }

inline Json to_json(const QuadExt& x) { return Json{{"a", x.a().str()}, {"b", x.b().str()}, {"d", x.d()}}; }

inline Json to_json(const ComplexQuad& z) { return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}}; }

inline Rational rational_from_json(const Json& j) { return Rational::parse(j.get<std::string>()); }

inline QuadExt quad_from_json(const Json& j) {
  return QuadExt(rational_from_json(j.at("a")), rational_from_json(j.at("b")), j.at("d").get<std::int64_t>());
}

inline ComplexQuad complex_from_json(const Json& j) {
  return ComplexQuad(quad_from_json(j.at("re")), quad_from_json(j.at("im")));
}

inline double approx(double x, const RenderOptions& o) { return o.float_display ? round15(x) : x; }

inline Json dual(const Rational& q, const RenderOptions& o = {}) {
  return Json{{"exact", to_json(q)}, {"approx", approx(q.to_double(), o)}};
}
inline Json dual(const QuadExt& x, const RenderOptions& o = {}) {
  return Json{{"exact", to_json(x)}, {"approx", approx(x.to_double(), o)}};
}
inline Json dual(const ComplexQuad& z, const RenderOptions& o = {}) {
  return Json{{"exact", to_json(z)},
              {"approx", Json{{"re", approx(z.re().to_double(), o)}, {"im", approx(z.im().to_double(), o)}}}};
}

inline Json to_json(const IrrepSpec& rep) {
  Json j{{"group", rep.group.name()}, {"hw", rep.highest_weight}, {"dim", rep_dimension(rep)}};
  if (rep.label) j["label"] = *rep.label;
  return j;
}

inline Json to_json(const BranchingDecomposition& b) {
  Json entries = Json::array();
  for (const auto& e : b.entries) entries.push_back(Json{{"tau", to_json(e.tau)}, {"mult", e.multiplicity}});
  return Json{{"parent", to_json(b.parent)}, {"entries", entries}};
}

inline Json to_json(const RankOneGroup& g) {
  return Json{{"family", family_token(g.family)}, {"n", g.n}, {"name", g.name()}};
}

inline Json root_data_report(const RankOneGroup& g, const BandStructure& bands, const RenderOptions& o = {}) {
  auto rd = restricted_root_data(g);
  Json lines = Json::array();
  for (const auto& l : bands.lines) lines.push_back(dual(l, o));
  return Json{{"family", family_token(g.family)},
              {"n", g.n},
              {"group", g.name()},
              {"m_alpha", rd.m_alpha},
              {"m_2alpha", rd.m_2alpha},
              {"norm_alpha0_sq", dual(rd.norm_alpha0_sq, o)},
              {"rho_coeff", to_json(rd.rho_coeff)},
              {"norm_rho", dual(rd.norm_rho, o)},
              {"norm_alpha0", dual(rd.norm_alpha0, o)},
              {"lines", lines},
              {"note", bands.note}};
}

inline Json to_json(const JordanVerdict& v) {
  return Json{{"max_size", v.max_size}, {"exact", v.exact}, {"hypothesis_note", v.hypothesis_note}};
}

/// lambda, mu and the weight term are given in the caller's normalization;
/// the remaining fields are normalization independent.
struct ReportView {
  const CorrespondenceReport* report = nullptr;
  ComplexQuad lambda;
  ComplexQuad mu;
  Rational weight_term;
  std::string normalization = "paper";
};

inline Json to_json(const ReportView& v, const RenderOptions& o = {}) {
  const auto& r = *v.report;
  return Json{{"group", to_json(r.group)},
              {"sigma", to_json(r.sigma)},
              {"tau", to_json(r.tau)},
              {"lambda", dual(v.lambda, o)},
              {"mu", dual(v.mu, o)},
              {"weight_term", dual(v.weight_term, o)},
              {"multiplicity", r.multiplicity},
              {"assumption1", r.assumption1},
              {"assumption2", r.assumption2},
              {"on_critical_line", r.on_critical_line},
              {"on_real_axis", r.on_real_axis},
              {"jordan", to_json(r.jordan)},
              {"caveats", r.caveats},
              {"normalization", v.normalization}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ruelle::json
