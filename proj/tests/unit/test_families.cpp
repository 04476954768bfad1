#include <doctest.h>

#include <fstream>
#include <sstream>

#include "gordian/families.hpp"
#include "gordian/invariants.hpp"
#include "oracle.hpp"

using namespace gordian;

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(GORDIAN_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in, "missing golden file " << name);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

}  // namespace

TEST_SUITE("families") {

TEST_CASE("VK_n shape") {
  for (int n = 0; n <= 8; ++n) {
    PlanarDiagram d = vkn_planar(n);
    CHECK(is_planar(d));
    CHECK(d.component_count() == 1);
    CHECK(d.classical_count() == 6 * n + 2);
    CHECK(vkn(n).crossing_count() == 6 * n + 2);
    CHECK(writhe(vkn(n)) == 2 * n + 2);
  }
  CHECK_THROWS(vkn(-1));
}

TEST_CASE("VK_0 is a trivial knot diagram") {
  CHECK(f_polynomial(vkn(0)) == LaurentPoly::constant(1));
  CHECK(normalize(vkn(0)).str() == "O1+,U1+,U2+,O2+");
}

TEST_CASE("frozen codes") {
  CHECK(same_diagram_unoriented(vkn(1), parse_gauss(golden("vkn1.gauss"))));
  CHECK(same_diagram_unoriented(to_gauss(km(1)), parse_gauss(golden("km1.gauss"))));
  CHECK(write_pd(km(1)) == golden("km1.pd") + "\n");
  CHECK(write_pd(vkn_planar(1)) == golden("vkn1.pd") + "\n");
}

TEST_CASE("frozen brackets") {
  CHECK(bracket(vkn(1)) == parse_poly("-A^-4 + 2 - A^4 + A^8 - A^12 + A^16"));
  CHECK(bracket(vkn(2)) == parse_poly("-A^-6 + 3*A^-2 - 3*A^2 + A^6 - A^10 + 2*A^14 + A^18 - 2*A^22 + A^26"));
  CHECK(f_polynomial(vkn(1)) == parse_poly("-A^-16 + 2*A^-12 - A^-8 + A^-4 - 1 + A^4"));
  CHECK(f_polynomial(km(1)) == parse_poly("A^-8 - 2*A^-4 + 3 - 3*A^4 + 3*A^8 - 2*A^12 + 2*A^16 - A^20"));
  CHECK(bracket(to_gauss(km(1))) == oracle::bracket(to_gauss(km(1))));
}

TEST_CASE("K_m shape") {
  CHECK(km(0).crossing_count() == 0);
  for (int m = 1; m <= 5; ++m) {
    PlanarDiagram d = km(m);
    CHECK(is_planar(d));
    CHECK(d.virtual_count() == 0);
    CHECK(d.component_count() == 1);
    CHECK(d.classical_count() == 2 + 9 * m);
    CHECK(d.region_names().size() == static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) CHECK_NOTHROW(region_by_name(d, "R" + std::to_string(i)));
  }
}

TEST_CASE("the D links are the nine closures of one block") {
  for (int j = 1; j <= 9; ++j) {
    PlanarDiagram d = d_link(j);
    CHECK(is_planar(d));
    CHECK(d.classical_count() == 6);
  }
  CHECK(bracket(d_link(1)) == parse_poly("-A^-4 + 1 - A^4 - A^12"));
  CHECK(bracket(d_link(4)) == parse_poly("A^6"));
  CHECK(bracket(d_link(5)) == parse_poly("-A^4 - A^8"));
  CHECK_THROWS(d_link(0));
  CHECK_THROWS(d_link(10));
}

TEST_CASE("tangles") {
  CHECK(tangle_T().classical_count() == 2);
  for (int n = 1; n <= 3; ++n) CHECK(tangle_S(n).classical_count() == 6 * n);
  CHECK_THROWS(tangle_S(0));
}

TEST_CASE("block arcs") {
  for (int n = 1; n <= 3; ++n)
    for (int j = 1; j <= n; ++j) {
      ArcSpec a = vkn_block_arc(n, j);
      PlanarDiagram d = vkn_planar(n);
      int mid = d.next_edge(a.first);
      CHECK(d.next_edge(mid) == a.last);
      CHECK(d.crossing(d.edge(a.first).head.crossing).classical());
    }
  CHECK_THROWS(vkn_block_arc(2, 3));
}

TEST_CASE("family names") {
  CHECK(parse_family("km", 3).kind == FamilyKind::KM);
  CHECK(parse_family("d7", 0).param == 7);
  CHECK(parse_family("tangle-s", 2).kind == FamilyKind::TANGLE_S);
  CHECK_THROWS_AS(parse_family("k", 1), ValidationError);
}

}
