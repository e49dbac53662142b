#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inose/curve.hpp"
#include "inose/errors.hpp"
#include "inose/pencil.hpp"
#include "inose/poly.hpp"
#include "inose/ratfunc.hpp"
#include "inose/rational.hpp"
#include "inose/zerocycle.hpp"

namespace inose {

using json = nlohmann::json;

// Rationals travel as "p/q" strings ("p" when q = 1); integers are also
// accepted on input.
inline json to_json(const Rational& r) { return r.to_string(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  fail(ErrorCode::InvalidSpec, "expected a rational as string or integer, got " + j.dump());
}

// Polynomials are arrays of rationals, constant term first; the zero
// polynomial is the empty array.
inline json to_json(const Poly& p) {
  json arr = json::array();
  for (const Rational& c : p.coeffs()) arr.push_back(to_json(c));
  return arr;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::InvalidSpec, "expected a coefficient array");
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

inline json to_json(const RatFunc& f) {
  return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(ErrorCode::InvalidSpec, "expected {num, den}");
  return RatFunc::reduce(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

inline json to_json(const Quadruple& q) { return json::array({q.p, q.q, q.r, q.s}); }

inline Quadruple quadruple_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    fail(ErrorCode::InvalidSpec, "expected a quadruple [p, q, r, s]");
  for (const auto& c : j)
    if (!c.is_number_integer()) fail(ErrorCode::InvalidSpec, "quadruple entries must be integers");
  return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>(),
          j[3].get<long long>()};
}

inline json to_json(const PencilConfig& cfg) {
  return json{{"a", to_json(cfg.a())}, {"b", to_json(cfg.b())}};
}

inline PencilConfig config_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b"))
    fail(ErrorCode::InvalidSpec, "expected {a, b}");
  return validate_config(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
}

inline json to_json(const PencilPoint& p) {
  return json{{"h1", to_json(p.h1())}, {"h2", to_json(p.h2())}};
}

inline PencilPoint point_from_json(const PencilConfig& cfg, const json& j) {
  if (!j.is_object() || !j.contains("h1") || !j.contains("h2"))
    fail(ErrorCode::InvalidSpec, "expected {h1, h2}");
  return make_point(cfg, ratfunc_from_json(j.at("h1")), ratfunc_from_json(j.at("h2")));
}

inline json to_json(const IntersectionStats& s) {
  json named = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j)
      row.push_back(s.named[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    named.push_back(std::move(row));
  }
  return json{{"deg_h1", s.deg_h1},
              {"deg_h2", s.deg_h2},
              {"named", std::move(named)},
              {"sum_named", s.sum_named},
              {"a00", to_json(s.a00)},
              {"total_D", to_json(s.total_D)},
              {"p_a11", s.p_a11},
              {"component_inf", s.component_inf},
              {"component_zero", s.component_zero},
              {"contr_zero", to_json(s.contr_zero)},
              {"contr_inf", to_json(s.contr_inf)},
              {"height", to_json(s.height)}};
}

inline IntersectionStats stats_from_json(const json& j) {
  IntersectionStats s;
  s.deg_h1 = j.at("deg_h1").get<int>();
  s.deg_h2 = j.at("deg_h2").get<int>();
  const json& named = j.at("named");
  if (!named.is_array() || named.size() != 3)
    fail(ErrorCode::InvalidSpec, "stats.named must be a 3x3 array");
  for (std::size_t i = 0; i < 3; ++i) {
    if (!named[i].is_array() || named[i].size() != 3)
      fail(ErrorCode::InvalidSpec, "stats.named must be a 3x3 array");
    for (std::size_t k = 0; k < 3; ++k) s.named[i][k] = named[i][k].get<long long>();
  }
  s.sum_named = j.at("sum_named").get<long long>();
  s.a00 = rational_from_json(j.at("a00"));
  s.total_D = rational_from_json(j.at("total_D"));
  s.p_a11 = j.at("p_a11").get<long long>();
  s.component_inf = j.at("component_inf").get<int>();
  s.component_zero = j.at("component_zero").get<int>();
  s.contr_zero = rational_from_json(j.at("contr_zero"));
  s.contr_inf = rational_from_json(j.at("contr_inf"));
  s.height = rational_from_json(j.at("height"));
  return s;
}

inline json to_json(const EllipticImage& img) {
  if (img.at_infinity) return json{{"inf", true}};
  return json{{"x", to_json(img.x)}, {"y", to_json(img.y)}};
}

inline EllipticImage image_from_json(const json& j) {
  if (j.contains("inf")) return {true, Rational(0), Rational(0)};
  return {false, rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

inline json to_json(const WitnessRecord& w) {
  return json{{"x", to_json(w.x)},
              {"y", to_json(w.y)},
              {"weierstrass", w.weierstrass},
              {"on_ea", to_json(w.on_ea)},
              {"on_eb", to_json(w.on_eb)}};
}

inline WitnessRecord witness_record_from_json(const json& j) {
  WitnessRecord w;
  w.x = rational_from_json(j.at("x"));
  w.y = rational_from_json(j.at("y"));
  w.weierstrass = j.at("weierstrass").get<bool>();
  w.on_ea = image_from_json(j.at("on_ea"));
  w.on_eb = image_from_json(j.at("on_eb"));
  return w;
}

// The persisted curve record: everything a consumer needs to evaluate the
// maps and audit the invariants, without the internal factor data.
struct CurveRecord {
  PencilConfig config;
  Quadruple quad;
  long long n = 0;
  long long genus = 0;
  long long branch_count = 0;
  Poly sf;
  RatFunc h1, h2, y_multiplier;
  IntersectionStats stats;
  bool genus_is_expected = false;
  std::optional<std::vector<WitnessRecord>> harvest;  // engaged when a harvest was requested

  bool operator==(const CurveRecord&) const = default;
};

inline CurveRecord make_record(const HyperellipticModel& model,
                               std::optional<std::vector<WitnessRecord>> harvest = std::nullopt) {
  return CurveRecord{model.config,       model.quad,  model.n,
                     model.genus,        model.branch_count, model.sf,
                     model.h1,           model.h2,    model.y_multiplier,
                     model.stats,        model.genus_is_expected,
                     std::move(harvest)};
}

inline json to_json(const CurveRecord& rec) {
  json out{{"config", to_json(rec.config)},
           {"quad", to_json(rec.quad)},
           {"n", rec.n},
           {"genus", rec.genus},
           {"branch_count", rec.branch_count},
           {"sf", to_json(rec.sf)},
           {"maps",
            json{{"h1", to_json(rec.h1)},
                 {"h2", to_json(rec.h2)},
                 {"y_multiplier", to_json(rec.y_multiplier)}}},
           {"stats", to_json(rec.stats)},
           {"genus_is_expected", rec.genus_is_expected}};
  if (rec.harvest) {
    json arr = json::array();
    for (const auto& w : *rec.harvest) arr.push_back(to_json(w));
    out["harvest"] = std::move(arr);
  }
  return out;
}

inline CurveRecord curve_record_from_json(const json& j) {
  CurveRecord rec{config_from_json(j.at("config")),
                  quadruple_from_json(j.at("quad")),
                  j.at("n").get<long long>(),
                  j.at("genus").get<long long>(),
                  j.at("branch_count").get<long long>(),
                  poly_from_json(j.at("sf")),
                  ratfunc_from_json(j.at("maps").at("h1")),
                  ratfunc_from_json(j.at("maps").at("h2")),
                  ratfunc_from_json(j.at("maps").at("y_multiplier")),
                  stats_from_json(j.at("stats")),
                  j.at("genus_is_expected").get<bool>(),
                  std::nullopt};
  if (j.contains("harvest")) {
    rec.harvest.emplace();
    for (const auto& w : j.at("harvest")) rec.harvest->push_back(witness_record_from_json(w));
  }
  return rec;
}

// Witness file for the zero-cycle engine:
// {m, witnesses: [[ints]], targets: [{c: [rationals], d: [rationals]}]}.
struct ZerocycleJob {
  WitnessSet witnesses;
  std::vector<std::pair<RationalVec, RationalVec>> targets;
};

inline ZerocycleJob zerocycle_job_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("witnesses") || !j.contains("targets"))
    fail(ErrorCode::InvalidSpec, "witness file needs {m, witnesses, targets}");
  ZerocycleJob job;
  if (!j.at("m").is_number_integer() || j.at("m").get<long long>() < 1)
    fail(ErrorCode::InvalidSpec, "m must be a positive integer");
  job.witnesses.m = j.at("m").get<std::size_t>();
  for (const auto& w : j.at("witnesses")) {
    if (!w.is_array()) fail(ErrorCode::InvalidSpec, "witnesses must be integer arrays");
    std::vector<long long> row;
    for (const auto& c : w) {
      if (!c.is_number_integer())
        fail(ErrorCode::InvalidSpec, "witness entries must be integers");
      row.push_back(c.get<long long>());
    }
    if (row.size() != job.witnesses.m)
      fail(ErrorCode::LengthMismatch, "witness length differs from m");
    job.witnesses.witnesses.push_back(std::move(row));
  }
  const auto vec_from = [&](const json& v) {
    if (!v.is_array()) fail(ErrorCode::InvalidSpec, "target vectors must be arrays");
    RationalVec out;
    for (const auto& c : v) out.push_back(rational_from_json(c));
    if (out.size() != job.witnesses.m)
      fail(ErrorCode::LengthMismatch, "target vector length differs from m");
    return out;
  };
  for (const auto& t : j.at("targets")) {
    if (!t.is_object() || !t.contains("c") || !t.contains("d"))
      fail(ErrorCode::InvalidSpec, "each target needs {c, d}");
    job.targets.emplace_back(vec_from(t.at("c")), vec_from(t.at("d")));
  }
  return job;
}

inline json to_json(const Certificate& cert) {
  json coeffs = json::array();
  for (const Rational& r : cert.coefficients) coeffs.push_back(to_json(r));
  return json{{"denominator", cert.denominator.get_str()}, {"coefficients", std::move(coeffs)}};
}

}  // namespace inose
