#include "json_io.hpp"

namespace gordian::io {

json poly_to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json coef;
    if (c.fits_slong_p())
      coef = c.get_si();
    else
      coef = c.get_str();
    terms.push_back({{"exp", e}, {"coef", coef}});
  }
  return {{"variable", std::string(1, p.var())}, {"terms", terms}};
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("variable") || !j.contains("terms"))
    throw ParseError("polynomial JSON needs 'variable' and 'terms'");
  const std::string var = j.at("variable").get<std::string>();
  if (var.size() != 1) throw ParseError("polynomial variable must be one letter");
  std::vector<std::pair<int, Integer>> terms;
  for (const auto& t : j.at("terms")) {
    const json& c = t.at("coef");
    Integer coef;
    if (c.is_string()) {
      if (coef.set_str(c.get<std::string>(), 10) != 0) throw ParseError("bad coefficient '" + c.get<std::string>() + "'");
    } else if (c.is_number_integer()) {
      coef = Integer(std::to_string(c.get<long long>()));
    } else {
      throw ParseError("coefficient must be an integer or a decimal string");
    }
    terms.emplace_back(t.at("exp").get<int>(), coef);
  }
  return LaurentPoly::from_terms(terms, var[0]);
}

json degree_to_json(const MaxPlusDeg& d) {
  if (d.is_bottom()) return "BOTTOM";
  return d.value();
}

json verify_to_json(const VerifyResult& r) {
  json j{{"claim", r.claim}, {"parameters", r.parameters}, {"status", r.pass ? "PASS" : "FAIL"}, {"details", r.details}};
  if (!r.pass) j["counterexample"] = r.counterexample;
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

json move_report_to_json(const MoveReport& r) {
  json moves = json::array();
  for (const auto& m : r.moves) moves.push_back(move_str(m));
  json j{{"before", r.before.str()}, {"moves", moves}, {"after", r.after.str()}, {"simplified", r.simplified.str()}};
  if (!r.checks.empty()) {
    json checks = json::array();
    for (const auto& c : r.checks)
      checks.push_back({{"invariant", c.name}, {"moved", c.moved}, {"target", c.target}, {"match", c.match}});
    j["checks"] = checks;
    j["match"] = r.match;
  }
  return j;
}

}  // namespace gordian::io
