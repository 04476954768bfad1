#include <doctest.h>

#include "json_io.hpp"

using namespace gordian;
using gordian::io::json;

TEST_SUITE("json") {

TEST_CASE("polynomials") {
  LaurentPoly p = parse_poly("-A^-4 + 2 - A^12");
  json j = io::poly_to_json(p);
  CHECK(j.dump() == R"({"variable":"A","terms":[{"exp":-4,"coef":-1},{"exp":0,"coef":2},{"exp":12,"coef":-1}]})");
  CHECK(io::poly_from_json(j) == p);
  CHECK(io::poly_to_json(LaurentPoly::zero('t'))["terms"].empty());

  LaurentPoly big = (parse_poly("1 + A")).pow(100);
  json b = io::poly_to_json(big);
  CHECK(b["terms"][50]["coef"] == "100891344545564193334812497256");
  CHECK(io::poly_from_json(b) == big);
  CHECK(io::poly_from_json(json::parse(R"({"variable":"x","terms":[{"exp":1,"coef":"7"}]})")) == parse_poly("7x"));
}

TEST_CASE("malformed polynomials") {
  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"terms":[]})")), ParseError);
  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"variable":"xy","terms":[]})")), ParseError);
  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"variable":"x","terms":[{"exp":1,"coef":1.5}]})")), ParseError);
  CHECK_THROWS_AS(io::poly_from_json(json::parse(R"({"variable":"x","terms":[{"exp":1,"coef":"1e3"}]})")), ParseError);
}

TEST_CASE("degrees") {
  CHECK(io::degree_to_json(MaxPlusDeg::bottom()) == "BOTTOM");
  CHECK(io::degree_to_json(MaxPlusDeg(-3)) == -3);
}

TEST_CASE("verify results") {
  VerifyResult ok{"writhe-vkn", "n=0..2", true, {"n=0 w=2"}, "", {}};
  json j = io::verify_to_json(ok);
  CHECK(j["status"] == "PASS");
  CHECK_FALSE(j.contains("counterexample"));
  CHECK_FALSE(j.contains("skipped"));
  VerifyResult bad{"b-matrix", "", false, {}, "b12", {"n=9"}};
  json k = io::verify_to_json(bad);
  CHECK(k["status"] == "FAIL");
  CHECK(k["counterexample"] == "b12");
  CHECK(k["skipped"].size() == 1);
}

TEST_CASE("move reports") {
  MoveReport r;
  r.before = parse_gauss("O1+,U1+");
  r.moves = {SimplifyMove{}};
  json j = io::move_report_to_json(r);
  CHECK(j["before"] == "O1+,U1+");
  CHECK(j["moves"].size() == 1);
  CHECK_FALSE(j.contains("match"));
  r.checks.push_back({"f", "1", "1", true});
  r.match = true;
  json k = io::move_report_to_json(r);
  CHECK(k["match"] == true);
  CHECK(k["checks"][0]["invariant"] == "f");
}

}
