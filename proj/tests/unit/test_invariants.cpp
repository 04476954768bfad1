#include <doctest.h>

#include <algorithm>

#include "gordian/invariants.hpp"
#include "gordian/random.hpp"
#include "oracle.hpp"

using namespace gordian;

namespace {

GaussCode mirror(const GaussCode& g) {
  std::vector<Pass> ps = g.passes();
  for (auto& p : ps) {
    p.strand = p.strand == Strand::Over ? Strand::Under : Strand::Over;
    p.sign = -p.sign;
  }
  return GaussCode(ps);
}

// Chord index: over pass to under pass, counted against the signed chords it
// meets.
int chord_index(const GaussCode& g, int id) {
  const auto& ps = g.passes();
  const int m = static_cast<int>(ps.size());
  auto pos = [&](int c, Strand s) {
    for (int i = 0; i < m; ++i)
      if (ps[static_cast<std::size_t>(i)].id == c && ps[static_cast<std::size_t>(i)].strand == s) return i;
    return -1;
  };
  const int o = pos(id, Strand::Over), u = pos(id, Strand::Under);
  auto inside = [&](int i) { return ((i - o + m) % m) < ((u - o + m) % m) && i != o; };
  int sum = 0;
  for (int c : g.crossing_ids()) {
    if (c == id) continue;
    bool tail = inside(pos(c, Strand::Over)), head = inside(pos(c, Strand::Under));
    if (tail == head) continue;
    sum += (tail ? 1 : -1) * g.sign_of(c);
  }
  return sum;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("bracket agrees with the oracle on random codes") {
  Rng rng(20240601);
  for (int t = 0; t < 400; ++t) {
    GaussCode g = random_gauss(rng, t % 11);
    CHECK_MESSAGE(bracket(g) == oracle::bracket(g), g.str());
  }
}

TEST_CASE("planar and gauss routes agree") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    GaussCode g = random_gauss(rng, 1 + t % 8);
    CHECK(bracket(to_planar(g)) == bracket(g));
    CHECK(writhe(to_planar(g)) == writhe(g));
  }
}

TEST_CASE("known values") {
  GaussCode trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  CHECK(bracket(trefoil) == parse_poly("A^-7 - A^-3 - A^5"));
  CHECK(f_polynomial(trefoil) == parse_poly("-A^-16 + A^-12 + A^-4"));
  CHECK(bracket(GaussCode()) == parse_poly("1"));
  CHECK(bracket(parse_gauss("O1+,U1+")) == parse_poly("-A^3"));
  CHECK(bracket(parse_gauss("O1-,U1-")) == parse_poly("-A^-3"));
  CHECK(f_polynomial(parse_gauss("O1-,U1-")) == parse_poly("1"));
  CHECK(loop_value() == parse_poly("-A^2 - A^-2"));
}

TEST_CASE("bracket of a split unlink") {
  NetBuilder b;
  int l = b.reserve(2);
  b.join(l, l);
  b.join(l + 1, l + 1);
  PlanarDiagram d = b.build();
  CHECK(d.free_loops() == 2);
  CHECK(bracket(d) == loop_value());
}

TEST_CASE("mirror and reversal") {
  Rng rng(9);
  for (int t = 0; t < 100; ++t) {
    GaussCode g = random_gauss(rng, t % 9);
    CHECK(bracket(mirror(g)) == bracket(g).mirrored());
    CHECK(f_polynomial(mirror(g)) == f_polynomial(g).mirrored());
    CHECK(f_polynomial(reversed(g)) == f_polynomial(g));
    CHECK(writhe(g) == oracle::writhe(g));
  }
}

TEST_CASE("first Reidemeister move") {
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    GaussCode g = random_gauss(rng, t % 7);
    for (int s : {1, -1})
      for (Strand first : {Strand::Over, Strand::Under}) {
        std::vector<Pass> ps = g.passes();
        Strand second = first == Strand::Over ? Strand::Under : Strand::Over;
        ps.insert(ps.begin(), {{99, first, s}, {99, second, s}});
        GaussCode k(ps);
        CHECK(f_polynomial(k) == f_polynomial(g));
        CHECK(bracket(k) == bracket(g) * parse_poly(s > 0 ? "-A^3" : "-A^-3"));
        CHECK(affine_index(k) == affine_index(g));
      }
  }
}

TEST_CASE("f normalization") {
  LaurentPoly br = parse_poly("A^2 - 1");
  CHECK(f_normalize(br, 0) == br);
  CHECK(f_normalize(br, 1) == parse_poly("-A^-1 + A^-3"));
  CHECK(f_normalize(br, -2) == parse_poly("A^8 - A^6"));
}

TEST_CASE("state resolution") {
  GaussCode trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+");
  auto all = [](Split s) { return std::map<int, Split>{{1, s}, {2, s}, {3, s}}; };
  BracketState a = resolve_state(trefoil, all(Split::A));
  BracketState b = resolve_state(trefoil, all(Split::B));
  CHECK(a.a_count == 3);
  CHECK(b.b_count == 3);
  CHECK(a.loops + b.loops == 5);
  CHECK_THROWS(resolve_state(trefoil, {{1, Split::A}}));
}

TEST_CASE("state sum limit") {
  Rng rng(1);
  GaussCode g = random_gauss(rng, 25);
  CHECK_THROWS_AS(bracket(g), BruteforceLimit);
  BracketOptions opt;
  opt.max_crossings = 3;
  CHECK_THROWS_AS(bracket(parse_gauss("O1+,U2+,O3+,U1+,O2+,U4+,O4+,U3+"), opt), BruteforceLimit);
}

TEST_CASE("thread count does not change the result") {
  Rng rng(17);
  GaussCode g = random_gauss(rng, 14);
  BracketOptions one, four;
  one.threads = 1;
  four.threads = 4;
  CHECK(bracket(g, one) == bracket(g, four));
}

TEST_CASE("affine index") {
  CHECK(affine_index(parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")).is_zero());
  CHECK(affine_index(GaussCode()).is_zero());
  CHECK(affine_index(parse_gauss("O1-,O2-,U1-,U2-")) == parse_poly("-t + 2 - t^-1"));
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    GaussCode g = random_gauss(rng, t % 10);
    LaurentPoly p = affine_index(g);
    CHECK(p.var() == 't');
    CHECK(p.eval_at_one() == 0);
    ArcLabeling lab = arc_labels(g);
    CHECK(lab.labels.size() == std::max<std::size_t>(g.size(), 1));
    for (int id : g.crossing_ids()) CHECK_MESSAGE(crossing_weight(g, lab, id) == chord_index(g, id), g.str() << " @" << id);
  }
}

}
