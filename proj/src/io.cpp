#include "corelab/io.hpp"

namespace corelab {

Json to_json(const Rational& r) { return to_string(r); }
Json to_json(const BigInt& z) { return to_string(z); }

Json to_json(const VectorQ& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
  return a;
}

Json to_json(const VectorZ& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json to_json(const Partition& p) { return Json(p.parts); }
Json to_json(const Word& w) { return Json(w.letters); }

Json to_json(const Verdict& v) {
  Json j{{"verdict", to_string(v.kind)}};
  if (v.kind != Verdict::no_closed_form) j["delta"] = to_string(v.delta);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json to_json(const PolynomialQ& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs) a.push_back(Json::array({to_string(numer(c)), to_string(denom(c))}));
  return a;
}

Json to_json(const QuasiPolynomial& q) {
  Json comps = Json::array();
  for (const auto& c : q.components) comps.push_back(c ? to_json(*c) : Json());
  return Json{{"period", q.period}, {"degree_bound", q.degree_bound}, {"components", comps}};
}

QuasiPolynomial quasi_from_json(const Json& j) {
  QuasiPolynomial q;
  q.period = j.at("period").get<int>();
  q.degree_bound = j.value("degree_bound", 0);
  for (const auto& c : j.at("components")) {
    if (c.is_null()) {
      q.components.emplace_back();
      continue;
    }
    std::vector<Rational> coeffs;
    for (const auto& pair : c)
      coeffs.push_back(Rational(BigInt(pair.at(0).get<std::string>()), BigInt(pair.at(1).get<std::string>())));
    q.components.emplace_back(PolynomialQ(coeffs));
  }
  if (static_cast<int>(q.components.size()) != q.period) throw std::invalid_argument("component count differs from period");
  return q;
}

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs) a.push_back(to_string(c));
  return a;
}

Json to_json(const IntSeries& s) {
  Json a = Json::array();
  for (const auto& c : s.coeffs) a.push_back(to_string(c));
  return Json{{"trunc", s.N}, {"coeffs", a}};
}

Json to_json(const MomentReport& r) {
  Json j{{"type", r.type}, {"b", r.b}, {"count", to_string(r.count)}, {"max", to_string(r.max)},
         {"max_multiplicity", r.max_multiplicity}, {"argmax", to_json(r.argmax)}, {"mean", to_string(r.mean)}};
  if (r.max_k >= 2) j["variance"] = to_string(r.m2);
  if (r.max_k >= 3) j["m3"] = to_string(r.m3);
  if (r.two_way_agree) j["two_way_agree"] = *r.two_way_agree;
  Json checks{{"count", to_json(r.count_verdict)}, {"max", to_json(r.max_verdict)}, {"mean", to_json(r.mean_verdict)}};
  if (r.max_k >= 2) checks["variance"] = to_json(r.variance_verdict);
  if (r.max_k >= 3) checks["m3"] = to_json(r.m3_verdict);
  j["checks"] = checks;
  j["unique_max"] = r.unique_max;
  j["pass"] = r.pass();
  return j;
}

Json to_json(const MaxReport& r) {
  Json j{{"max", to_string(r.max)}, {"multiplicity", r.multiplicity}, {"argmax", to_json(r.argmax)},
         {"argmax_is_wb_inverse_zero", r.argmax_is_wb_inverse_zero}};
  j["closed_form"] = r.closed_form ? Json(to_string(*r.closed_form)) : Json();
  j["pass"] = r.pass();
  return j;
}

Json to_json(const FloorIdentityReport& r) {
  Json j{{"b", r.b}, {"general", to_string(r.general)}, {"closed", to_string(r.closed)}};
  if (r.type_a) j["type_a"] = to_string(*r.type_a);
  if (r.type_d) j["type_d"] = to_string(*r.type_d);
  j["pass"] = r.pass();
  return j;
}

Json to_json(const FitResult& r) {
  auto pairs = [](const std::vector<std::pair<std::int64_t, Rational>>& v) {
    Json a = Json::array();
    for (const auto& [b, x] : v) a.push_back(Json::array({b, to_string(x)}));
    return a;
  };
  return Json{{"k", r.spec.k},
              {"centered", r.spec.centered},
              {"lattice", to_string(r.spec.lattice)},
              {"residue", r.spec.residue},
              {"degree", r.spec.degree},
              {"polynomial", to_string(r.poly)},
              {"coefficients", to_json(r.poly)},
              {"samples", pairs(r.sample_values)},
              {"holdouts", pairs(r.holdout_values)},
              {"holdouts_pass", r.holdouts_pass}};
}

Json to_json(const ReciprocityReport& r) {
  Json probes = Json::array();
  for (const auto& p : r.probes)
    probes.push_back(Json{{"b", p.b},
                          {"value", p.value ? Json(to_string(*p.value)) : Json()},
                          {"mirrored", p.mirrored ? Json(to_string(*p.mirrored)) : Json()},
                          {"ok", p.ok}});
  return Json{{"sign", r.sign}, {"probes", probes}, {"pass", r.pass}};
}

Json to_json(const ExpectedSizeReport& r) {
  Json j{{"type", r.type}, {"closed_form", to_string(r.closed_form)}, {"pointwise_only", r.pointwise_only}};
  Json res = Json::array();
  for (const auto& [j0, ok] : r.residue_matches) res.push_back(Json{{"residue", j0}, {"match", ok}});
  j["residues"] = res;
  Json pts = Json::array();
  for (const auto& [b, ok] : r.point_matches) pts.push_back(Json{{"b", b}, {"match", ok}});
  j["points"] = pts;
  Json fits = Json::array();
  for (const auto& f : r.fits) fits.push_back(to_json(f));
  j["fits"] = fits;
  if (r.reciprocity) j["reciprocity"] = to_json(*r.reciprocity);
  j["pass"] = r.pass;
  return j;
}

Json to_json(const LeadingCoefficientReport& r) {
  return Json{{"type", r.type},
              {"k", r.k},
              {"grade", r.grade},
              {"residue", r.residue},
              {"leading", to_string(r.leading)},
              {"count_leading", to_string(r.count_leading)},
              {"ratio", to_string(r.ratio)},
              {"expected", r.expected ? Json(to_string(*r.expected)) : Json()},
              {"verdict", !r.expected ? "no_closed_form" : (r.match ? "consistent" : "counterexample")}};
}

Json to_json(const WeakOrderReport& r) {
  return Json{{"type", r.type},
              {"b", r.b},
              {"total", r.total},
              {"contained", r.contained},
              {"violations", r.violations},
              {"verdict", r.contained == r.total ? "consistent" : "counterexample"}};
}

Json to_json(const FussReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"b", r.b},
              {"count", to_string(r.count)},
              {"mean", to_string(r.mean)},
              {"conjectured", to_string(r.conjectured)},
              {"verdict", r.consistent ? "consistent" : "counterexample"}};
}

Json to_json(const WeightingCase& c) {
  return Json{{"word", to_json(c.word)},
              {"element_size", c.element_size},
              {"word_element_size", c.word_element_size},
              {"core", to_json(c.core)},
              {"self_conjugate", c.self_conjugate},
              {"boxes", c.boxes},
              {"weighted", c.weighted},
              {"verdict", c.agree ? "consistent" : "counterexample"}};
}

Json to_json(const WeightingReport& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) cases.push_back(to_json(c));
  return Json{{"n", r.n}, {"seed", r.seed}, {"cases", cases}, {"agreements", r.agreements}};
}

Json envelope(const Json& config, const Json& results, const std::string& grade, const std::string& verdict) {
  return Json{{"schema_version", kSchemaVersion},
              {"config", config},
              {"results", results},
              {"grade", grade},
              {"verdict", verdict}};
}

}  // namespace corelab
