#ifndef NUMOID_JSON_HPP
#define NUMOID_JSON_HPP

#include "numoid/falsifier.hpp"

#include <json.hpp>

namespace numoid::json {

using Json = nlohmann::ordered_json;

/// Exact integers are written as JSON numbers when they fit in 64 bits and as
/// decimal strings otherwise.
inline Json integer(const BigInt& v) {
  if (v <= std::numeric_limits<Int>::max() && v >= std::numeric_limits<Int>::min()) return static_cast<Int>(v);
  return v.str();
}

inline Json rational(const Rational& q) {
  return Json{{"num", integer(boost::multiprecision::numerator(q))},
              {"den", integer(boost::multiprecision::denominator(q))}};
}

inline Json atoms(const NumericalMonoid& m) {
  auto a = m.atoms();
  return Json(std::vector<Int>(a.begin(), a.end()));
}

inline Json to_json(const InvariantReport& r) {
  Json tame_local = Json::object();
  for (const auto& [atom, t] : r.tame_local) tame_local[std::to_string(atom)] = t;
  return Json{{"atoms", atoms(r.monoid)},
              {"frobenius", r.monoid.frobenius()},
              {"catenary", r.catenary},
              {"tame", r.tame},
              {"elasticity", rational(r.elasticity)},
              {"betti", r.betti},
              {"tame_local", tame_local},
              {"ca_partial", r.ca_partial},
              {"scan_bound", r.scan_bound}};
}

inline Json to_json(const ClosedForm3& f) {
  Json r = Json::object();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) r[std::to_string(i + 1) + std::to_string(j + 1)] = f.r[i][j];
  return Json{{"atoms", f.atoms}, {"c", f.c}, {"r", r}, {"value", f.value}};
}

inline Json to_json(const StratumRecord& rec) {
  Json j{{"h1", rec.h1}, {"k", rec.k}, {"h2", rec.h2}, {"h3", rec.h3}};
  for (std::size_t i = 0; i < 6; ++i) j["lambda" + std::to_string(i + 1)] = rec.lambda[i];
  j["predicted"] = rec.predicted;
  j["catenary"] = rec.catenary ? Json(*rec.catenary) : Json(nullptr);
  j["tame"] = rec.tame ? Json(*rec.tame) : Json(nullptr);
  j["verified"] = std::string(to_string(rec.verified));
  return j;
}

inline Json to_json(const StrataDataset& ds) {
  Json records = Json::array();
  for (const auto& r : ds.records) records.push_back(to_json(r));
  return Json{{"h1", ds.h1},
              {"per_stratum", ds.per_stratum},
              {"crosscheck_fraction", rational(ds.crosscheck_fraction)},
              {"h2_min", ds.h2_min},
              {"seed", ds.seed},
              {"records", records}};
}

inline Json to_json(const DirichletQuery& q, const DirichletPair& p) {
  return Json{{"x", p.x},
              {"y", p.y},
              {"primes_examined", p.primes_examined},
              {"query",
               {{"alpha", rational(q.alpha)},
                {"epsilon", rational(q.epsilon)},
                {"p", q.p},
                {"i", q.i},
                {"j", q.j},
                {"max_candidates", q.max_candidates}}}};
}

inline Json to_json(const FormulaCandidate& c, InvariantName name, const FalsifyResult& result) {
  Json j{{"formula", c.source}, {"kind", std::string(to_string(c.kind))}, {"invariant", std::string(to_string(name))}};
  if (const auto* ce = std::get_if<Counterexample>(&result)) {
    j["outcome"] = "Counterexample";
    j["monoid"] = atoms(ce->monoid);
    j["actual"] = rational(ce->actual);
    Json values = Json::array();
    for (const auto& v : ce->evaluation.values) values.push_back(rational(v));
    j[c.kind == FormulaKind::Explicit ? "candidate_values" : "residual"] =
        c.kind == FormulaKind::Explicit ? values : values.at(0);
    j["examined"] = ce->examined;
  } else {
    j["outcome"] = "NotFoundWithinBudget";
    j["examined"] = std::get<NotFoundWithinBudget>(result).examined;
  }
  return j;
}

inline Json to_json(const DataPoint& p) {
  return Json{{"k", p.k}, {"h2", p.h2}, {"h3", p.h3}, {"catenary", p.value}};
}

inline std::string monomial_name(const std::array<unsigned, 3>& m) {
  static constexpr std::array<const char*, 3> names{"X2", "X3", "Y"};
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

inline Json to_json(const DegreeCertificate& c) {
  Json monomials = Json::array();
  for (const auto& m : c.monomials) monomials.push_back(monomial_name(m));
  Json fresh = Json::array();
  for (const auto& p : c.fresh_points) fresh.push_back(to_json(p));
  Json refutations = Json::array();
  for (const auto& r : c.refutations)
    refutations.push_back(
        {{"annihilator", r.polynomial}, {"failing_point", r.failing_point ? to_json(*r.failing_point) : Json(nullptr)}});
  Json j{{"h1", c.h1},
         {"degree", c.degree},
         {"strata_used", c.strata_used},
         {"sample_points", c.sample_points},
         {"outcome", std::string(to_string(c.outcome))},
         {"transcript",
          {{"rows", c.rows},
           {"cols", c.cols},
           {"rank", c.rank},
           {"pivot_columns", c.pivot_columns},
           {"monomials", monomials},
           {"fresh_points", fresh},
           {"final_rank", c.final_rank}}},
         {"refutations", refutations}};
  if (!c.advice.empty()) j["advice"] = c.advice;
  return j;
}

}  // namespace numoid::json

#endif  // NUMOID_JSON_HPP
