#include <doctest.h>

#include "gordian/families.hpp"
#include "gordian/invariants.hpp"
#include "gordian/moves.hpp"
#include "gordian/random.hpp"

using namespace gordian;

TEST_SUITE("moves") {

TEST_CASE("rcc is an involution on every face") {
  Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    PlanarDiagram d = to_planar(random_gauss(rng, 1 + t % 6));
    auto fs = faces(d);
    for (std::size_t r = 0; r < fs.size(); ++r) {
      PlanarDiagram n = d;
      n.name_region("probe", fs[r].boundary.front());
      PlanarDiagram twice = rcc(rcc(n, "probe"), "probe");
      CHECK(same_diagram(to_gauss(twice), to_gauss(d)));
    }
  }
}

TEST_CASE("rcc flips exactly the classical crossings of the face") {
  PlanarDiagram d = km(1);
  int r = region_by_name(d, "R1");
  auto fs = faces(d);
  int classical = 0;
  for (const Corner& c : fs[static_cast<std::size_t>(r)].boundary) classical += d.crossing(c.crossing).classical();
  PlanarDiagram m = rcc(d, "R1");
  int changed = 0;
  for (int i = 0; i < d.crossing_count(); ++i) changed += d.crossing(i).sign != m.crossing(i).sign;
  CHECK(changed == classical);
  CHECK(is_planar(m));
  CHECK_THROWS_AS(rcc(d, "R9"), ValidationError);
  CHECK_THROWS_AS(rcc(d, 10000), ValidationError);
}

TEST_CASE("rcc unknots K_m") {
  for (int m = 1; m <= 3; ++m) {
    PlanarDiagram d = km(m);
    for (int i = 1; i <= m; ++i) d = rcc(d, "R" + std::to_string(i));
    CHECK(simplify(to_gauss(d)).empty());
  }
  MoveReport r = verify_one_move(km(1), RccMove{"R1"}, GaussCode());
  CHECK(r.match);
  CHECK(r.simplified.empty());
}

TEST_CASE("arc shift on a block arc") {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= n; ++j) {
      PlanarDiagram d = vkn_planar(n);
      PlanarDiagram s = arc_shift(d, vkn_block_arc(n, j));
      CHECK(is_planar(s));
      CHECK(s.classical_count() == d.classical_count());
      CHECK(f_polynomial(s) == f_polynomial(vkn(j - 1)));
    }
}

TEST_CASE("arc shift rejects bad arcs") {
  PlanarDiagram d = vkn_planar(1);
  ArcSpec a = vkn_block_arc(1, 1);
  CHECK_THROWS_AS(arc_shift(d, ArcSpec{a.first, a.first}), ValidationError);
  CHECK_THROWS_AS(arc_shift(d, ArcSpec{-1, a.last}), ValidationError);
}

TEST_CASE("simplify") {
  CHECK(simplify(parse_gauss("O1+,U1+")).empty());
  CHECK(simplify(parse_gauss("O1+,O2-,U1+,U2-")).empty());
  GaussCode trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(same_diagram(simplify(trefoil), trefoil));
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    GaussCode g = random_gauss(rng, t % 8);
    GaussCode s = simplify(g);
    CHECK(s.crossing_count() <= g.crossing_count());
    CHECK(f_polynomial(s) == f_polynomial(g));
    CHECK(affine_index(s) == affine_index(g));
  }
}

TEST_CASE("connected sum") {
  GaussCode trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  GaussCode sum = connected_sum(trefoil, trefoil);
  CHECK(sum.crossing_count() == 6);
  CHECK(f_polynomial(sum) == f_polynomial(trefoil) * f_polynomial(trefoil));
  CHECK(same_diagram(connected_sum(trefoil, GaussCode()), trefoil));
}

TEST_CASE("move reports") {
  MoveReport r = run_moves(km(1), {RccMove{"R1"}}, to_gauss(km(0)));
  CHECK(r.match);
  CHECK(r.moves.size() == 1);
  CHECK(r.checks.size() == 2);
  CHECK(r.before == to_gauss(km(1)));

  MoveReport none = run_moves(km(1), {RccMove{"R1"}}, std::nullopt);
  CHECK(none.checks.empty());

  MoveReport back = run_moves(km(1), {RccMove{"R1"}, RccMove{"R1"}}, std::nullopt);
  CHECK(same_diagram(back.after, back.before));

  MoveReport miss = verify_one_move(vkn_planar(1), SimplifyMove{}, vkn(2));
  CHECK_FALSE(miss.match);

  MoveReport shift = verify_one_move(vkn_planar(2), ArcShiftMove{vkn_block_arc(2, 2)}, vkn(1));
  CHECK(shift.match);
  CHECK(move_str(RccMove{"R1"}) == "rcc R1");
}

}
