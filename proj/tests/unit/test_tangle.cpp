#include <doctest.h>

#include "gordian/families.hpp"
#include "gordian/random.hpp"
#include "gordian/tangle.hpp"
#include "oracle.hpp"

using namespace gordian;

namespace {

// Two horizontal strands: WT-ET and WB-EB.
TangleDiagram horizontal() { return TangleDiagram({}, {0, 1, 0, 1}); }
// Two vertical strands: WT-WB and ET-EB.
TangleDiagram vertical() { return TangleDiagram({}, {0, 0, 1, 1}); }

}  // namespace

TEST_SUITE("tangle") {

TEST_CASE("closures of the trivial tangles") {
  CHECK(close_diagram(horizontal(), Closure::D).component_count() == 1);
  CHECK(close_diagram(horizontal(), Closure::N).component_count() == 2);
  CHECK(close_diagram(vertical(), Closure::D).component_count() == 2);
  CHECK(close_diagram(vertical(), Closure::N).component_count() == 1);
  CHECK(close_diagram(horizontal(), Closure::X).component_count() == 1);
  CHECK(close_diagram(vertical(), Closure::X).component_count() == 1);
  CHECK_THROWS_AS(close(horizontal(), Closure::N), ValidationError);
  CHECK(close(horizontal(), Closure::D).empty());
  BracketVector mu_one{LaurentPoly::constant(1), loop_value(), LaurentPoly::constant(1)};
  CHECK(bracket_vector(horizontal()) == mu_one);
}

TEST_CASE("tangle validation") {
  CHECK_THROWS_AS(TangleDiagram({}, {0, 1, 2, 3}), ValidationError);
  CHECK_THROWS_AS(TangleDiagram({{CrossingKind::Classical, {0, 1, 2, 3}}}, {0, 1, 2, 4}), ValidationError);
}

TEST_CASE("gram matrix inverse") {
  LaurentPoly mu = loop_value();
  PolyMatrix a = matrix_A_numerators();
  LaurentPoly k = kappa_inverse();
  // Gram matrix of the closures: G = (mu - 1) I + J.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      LaurentPoly acc;
      for (int l = 0; l < 3; ++l) {
        LaurentPoly g = l == i ? mu : LaurentPoly::constant(1);
        acc += g * a[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)];
      }
      CHECK(acc == (i == j ? k : LaurentPoly()));
    }
  CHECK(matrix_A()[0][1] == RationalFn(LaurentPoly::constant(-1), k));
}

TEST_CASE("closure of a sum through the bilinear form") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    TangleDiagram a = random_tangle(rng, 1 + t % 4), b = random_tangle(rng, 1 + (t / 4) % 4);
    PlanarDiagram d = sum_closure(a, b);
    CHECK(closure_sum_bracket(a, b) == bracket(d));
  }
}

TEST_CASE("tangle brackets match the oracle on knotted closures") {
  Rng rng(37);
  int checked = 0;
  for (int t = 0; t < 60; ++t) {
    TangleDiagram s = random_tangle(rng, 1 + t % 5);
    for (Closure c : {Closure::D, Closure::N, Closure::X}) {
      PlanarDiagram d = close_diagram(s, c);
      if (d.component_count() != 1) continue;
      CHECK(bracket(d) == oracle::bracket(to_gauss(d)));
      ++checked;
    }
  }
  CHECK(checked > 40);
}

TEST_CASE("vectors of T and S_n") {
  CHECK(bracket_vector(tangle_T()) == BracketVector{parse_poly("A^6"), parse_poly("-A^4 - A^-4"), parse_poly("-A^4 + 1 + A^-2")});
  CHECK(bracket_vector(tangle_S(1)) ==
        BracketVector{parse_poly("-A^12 - A^4 + 1 - A^-4"), parse_poly("A^6"), parse_poly("A^10 + A^8 - 2A^4 - A^2 + 1 + A^-2")});
  BracketVector s2{parse_poly("-A^22 + A^18 - 2A^10 - A^2 + 2A^-2 - A^-6"), parse_poly("A^12"),
                   parse_poly("A^20 + A^18 - A^16 - 2A^14 - A^12 + 3A^8 + 3A^6 - 3A^2 - 2 + A^-2 + A^-4")};
  CHECK(bracket_vector(tangle_S(2)) == s2);
  CHECK(sn_bracket_vector(2) == s2);
}

TEST_CASE("one block step is B A") {
  ScaledMatrix ba = matrix_BA(matrix_B());
  for (int n = 1; n <= 2; ++n) CHECK(apply(ba, bracket_vector(tangle_S(n))) == bracket_vector(tangle_S(n + 1)));
}

TEST_CASE("computed B and the max-plus matrix") {
  PolyMatrix b = matrix_B();
  CHECK(b[0][1] == parse_poly("A^10 + 2A^6 + A^2"));
  CHECK(b[2][1] == parse_poly("-A^8 - A^4"));
  PolyMatrix listed = listed_matrix_B();
  int agree = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) agree += b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == listed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  CHECK(agree == 7);
  CHECK_THROWS_AS(matrix_B({}, true), BMatrixMismatch);

  MaxPlusMatrix m = ba_max(matrix_BA(b));
  const MaxPlusDeg bot = MaxPlusDeg::bottom();
  MaxPlusDeg want[3][3] = {{10, 4, bot}, {bot, 6, bot}, {8, 4, 6}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == want[i][j]);
}

TEST_CASE("degree vectors") {
  for (int n = 1; n <= 4; ++n) {
    auto d = degree_vector(n);
    CHECK(d[0] == MaxPlusDeg(10 * n + 2));
    CHECK(d[1] == MaxPlusDeg(6 * n));
    CHECK(d[2] == MaxPlusDeg(10 * n));
  }
  CHECK_THROWS(degree_vector(0));
}

TEST_CASE("tangle route against the state sum") {
  for (int n = 1; n <= 2; ++n) CHECK(vkn_bracket(n) == bracket(vkn(n)));
}

}
