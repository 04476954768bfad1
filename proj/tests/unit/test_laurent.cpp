#include <doctest.h>

#include "gordian/laurent.hpp"

using namespace gordian;

TEST_SUITE("laurent") {

TEST_CASE("canonical text round trips") {
  for (const char* s : {"0", "1", "-1", "A^-4 - A^4 + 1", "-A^20 + 2A^16 - 2A^12 + 3A^8 - 3A^4 + 3 - 2A^-4 + A^-8",
                        "2 - t^2 - t^-2", "x^-1 - 2 + 3*x - x^2"}) {
    LaurentPoly p = parse_poly(s);
    CHECK(parse_poly(p.str()) == p);
  }
  CHECK(parse_poly("1 + A^-4 - A^4").str() == "A^-4 + 1 - A^4");
  CHECK(parse_poly("3A^6").str() == "3*A^6");
  CHECK(parse_poly("0").str() == "0");
  CHECK(parse_poly("2 - t^2").var() == 't');
}

TEST_CASE("malformed polynomials are rejected") {
  CHECK_THROWS(parse_poly(""));
  CHECK_THROWS(parse_poly("A^"));
  CHECK_THROWS(parse_poly("A + t"));
  CHECK_THROWS(parse_poly("1 +"));
}

TEST_CASE("ring arithmetic") {
  LaurentPoly a = parse_poly("A^2 + A^-2"), b = parse_poly("A^2 - A^-2");
  CHECK(a * b == parse_poly("A^4 - A^-4"));
  CHECK(a + b == parse_poly("2A^2"));
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.shifted(4) == parse_poly("A^6 + A^2"));
  CHECK(parse_poly("A^3 - 2A^-1").mirrored() == parse_poly("A^-3 - 2A"));
  CHECK(parse_poly("A^4 - 2 + 3A^-8").eval_at_one() == 2);
  CHECK(parse_poly("A^4 - 2 + 3A^-8").maxdeg() == MaxPlusDeg(4));
  CHECK(parse_poly("A^4 - 2 + 3A^-8").mindeg() == MaxPlusDeg(-8));
  CHECK(LaurentPoly().maxdeg().is_bottom());
  CHECK_THROWS_AS(parse_poly("t") + parse_poly("A"), AlgebraError);
}

TEST_CASE("coefficients grow past machine words") {
  LaurentPoly p = parse_poly("A + 1").pow(100);
  CHECK(p.coeff(50).get_str() == "100891344545564193334812497256");
  CHECK(parse_poly(p.str()) == p);
}

TEST_CASE("exact division") {
  LaurentPoly mu = parse_poly("-A^2 - A^-2");
  LaurentPoly k = (mu - LaurentPoly::constant(1)) * (mu + LaurentPoly::constant(2));
  LaurentPoly q = parse_poly("A^7 - 3A + A^-5");
  CHECK(exact_div(q * k, k) == q);
  CHECK_THROWS_AS(exact_div(q * k + LaurentPoly::constant(1), k), AlgebraError);
  CHECK_THROWS_AS(exact_div(q, LaurentPoly()), AlgebraError);
  CHECK(rat_reduce_exact(RationalFn(q * k, k)) == q);
}

TEST_CASE("rational functions compare by cross multiplication") {
  LaurentPoly a = parse_poly("A + 1"), b = parse_poly("A - 1");
  RationalFn r(a * b, b * b), s(a, b);
  CHECK(r == s);
  CHECK(r + s == RationalFn(a * LaurentPoly::constant(2), b));
  CHECK(r * s == RationalFn(a * a, b * b));
}

TEST_CASE("max-plus semiring") {
  MaxPlusDeg bot = MaxPlusDeg::bottom();
  CHECK((bot + MaxPlusDeg(3)).is_bottom());
  CHECK(max(bot, MaxPlusDeg(-7)) == MaxPlusDeg(-7));
  CHECK(bot <= MaxPlusDeg(-100));
  CHECK(!(MaxPlusDeg(1) <= bot));
  CHECK(bot.str() == "BOTTOM");

  MaxPlusMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 4;
  m.at(1, 1) = 0;
  auto v = maxplus_matvec(m, {2, 3});
  CHECK(v[0] == MaxPlusDeg(7));
  CHECK(v[1] == MaxPlusDeg(3));
  CHECK(maxplus_matvec(MaxPlusMatrix::identity(2), {5, bot}) == std::vector<MaxPlusDeg>{5, bot});
  CHECK_THROWS(maxplus_matvec(m, {1, 2, 3}));
}

TEST_CASE("max-plus bounds the degree of a product") {
  LaurentPoly p = parse_poly("A^5 - A^-3"), q = parse_poly("A^2 + A^-2");
  CHECK((p * q).maxdeg() <= p.maxdeg() + q.maxdeg());
  CHECK((p + q).maxdeg() <= max(p.maxdeg(), q.maxdeg()));
}

}
