#include <doctest.h>

#include "gordian/diagram.hpp"
#include "gordian/skein.hpp"

using namespace gordian;

TEST_SUITE("skein") {

TEST_CASE("rules") {
  SkeinPtr u = SkeinNode::unknot();
  CHECK(eval_c0(*u) == parse_poly("1", 'x'));
  SkeinPtr hopf = SkeinNode::two_component(1, u, u);
  CHECK(eval_c0(*hopf) == parse_poly("1 - x^-1"));
  SkeinPtr plus = SkeinNode::resolve(SkeinRole::Plus, u, hopf);
  CHECK(eval_c0(*plus) == parse_poly("2x^-1 - x^-2"));
  SkeinPtr minus = SkeinNode::resolve(SkeinRole::Minus, u, SkeinNode::two_component(0, u, u));
  CHECK(eval_c0(*minus) == parse_poly("1", 'x'));
}

TEST_CASE("node validation") {
  SkeinPtr u = SkeinNode::unknot();
  SkeinPtr link = SkeinNode::two_component(0, u, u);
  CHECK_THROWS_AS(SkeinNode::resolve(SkeinRole::Plus, link, link), ValidationError);
  CHECK_THROWS_AS(SkeinNode::resolve(SkeinRole::Plus, u, u), ValidationError);
  CHECK_THROWS_AS(SkeinNode::two_component(0, link, u), ValidationError);
  CHECK_THROWS_AS(SkeinNode::resolve(SkeinRole::Plus, nullptr, link), ValidationError);
}

TEST_CASE("text form round trips") {
  for (int m = 1; m <= 4; ++m) {
    SkeinPtr t = build_km_tree(m);
    SkeinPtr p = parse_skein(skein_str(*t));
    CHECK(skein_str(*p) == skein_str(*t));
    CHECK(eval_c0(*p) == eval_c0(*t));
  }
  CHECK(skein_str(*parse_skein(" R+ ( U , L( -1 ,U, U) ) ")) == "R+(U, L(-1, U, U))");
  CHECK_THROWS(parse_skein("R+(U)"));
  CHECK_THROWS(parse_skein("L(x, U, U)"));
  CHECK_THROWS(parse_skein("U U"));
}

TEST_CASE("closed forms") {
  CHECK(c0_Lm(0) == parse_poly("1", 'x'));
  CHECK(c0_Lm(1) == parse_poly("-x^2 + 2x"));
  CHECK(c0_Km(0) == parse_poly("1", 'x'));
  CHECK(c0_Km(1) == parse_poly("x^-1 - 2 + 3x - x^2"));
  for (int m = 1; m <= 10; ++m) {
    LaurentPoly want = parse_poly("1", 'x') - parse_poly("x - 1").pow(2) * c0_Lm(m - 1);
    CHECK(c0_Lm(m) == want);
    CHECK(c0_Km(m).maxdeg() == MaxPlusDeg(2 * m));
    CHECK(c0_Km(m).eval_at_one() == 1);
  }
}

TEST_CASE("K_m trees") {
  for (int m = 1; m <= 8; ++m) {
    SkeinPtr t = build_km_tree(m);
    CHECK(eval_c0(*t) == c0_Km(m));
    CHECK(t->depth() >= 3 * m);
  }
  CHECK_THROWS(build_km_tree(0));
}

}
