#include "gordian/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gordian/families.hpp"
#include "gordian/moves.hpp"
#include "gordian/random.hpp"
#include "gordian/skein.hpp"
#include "gordian/tangle.hpp"

namespace gordian {

namespace {

void record(VerifyResult& r, bool ok, const std::string& detail) {
  r.details.push_back(std::string(ok ? "ok   " : "FAIL ") + detail);
  if (!ok && r.pass) {
    r.pass = false;
    r.counterexample = detail;
  }
}

std::string range_str(const char* var, int lo, int hi) {
  return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

std::string deg_str(const std::array<MaxPlusDeg, 3>& v) {
  return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

using Claim = std::function<void(VerifyResult&, const VerifyOptions&)>;

void affine_vkn(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(10);
  r.parameters = range_str("n", lo, hi);
  const LaurentPoly want = parse_poly("2 - t^2 - t^-2");
  for (int n = lo; n <= hi; ++n) {
    LaurentPoly p = affine_index(vkn(n));
    record(r, p == want, "n=" + std::to_string(n) + ": P = " + p.str());
  }
}

void writhe_vkn(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(0), hi = o.hi.value_or(10);
  r.parameters = range_str("n", lo, hi);
  for (int n = lo; n <= hi; ++n) {
    int w = writhe(vkn(n));
    record(r, w == 2 * n + 2, "n=" + std::to_string(n) + ": w = " + std::to_string(w) + " (2n+2 = " + std::to_string(2 * n + 2) + ")");
  }
}

void oracle_bracket(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(3);
  r.parameters = range_str("n", lo, hi);
  for (int n = lo; n <= hi; ++n) {
    GaussCode g = vkn(n);
    if (g.crossing_count() > o.bracket.max_crossings) {
      r.skipped.push_back("n=" + std::to_string(n) + " (" + std::to_string(g.crossing_count()) + " classical crossings)");
      continue;
    }
    LaurentPoly tangle = vkn_bracket(n, o.bracket), brute = bracket(g, o.bracket);
    record(r, tangle == brute,
           "n=" + std::to_string(n) + ": tangle route " + tangle.str() + (tangle == brute ? " equals" : " differs from") +
               " state sum" + (tangle == brute ? "" : " " + brute.str()));
  }
}

void maxdeg4n(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(10);
  r.parameters = range_str("n", lo, hi);
  for (int n = lo; n <= hi; ++n) {
    LaurentPoly br = vkn_bracket(n, o.bracket);
    LaurentPoly f = f_normalize(br, writhe(vkn(n)));
    MaxPlusDeg d = f.maxdeg();
    record(r, d == MaxPlusDeg(4 * n) && br.maxdeg() == MaxPlusDeg(10 * n + 6),
           "n=" + std::to_string(n) + ": maxdeg f = " + d.str() + ", maxdeg bracket = " + br.maxdeg().str());
  }
}

void b_matrix(VerifyResult& r, const VerifyOptions& o) {
  r.parameters = "D1..D9";
  auto b = matrix_B(o.bracket);
  auto p = listed_matrix_B();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& x = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const auto& y = p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      record(r, x == y,
             "b" + std::to_string(i + 1) + std::to_string(j + 1) + " = <D" + std::to_string(3 * i + j + 1) + "> = " + x.str() +
                 (x == y ? "" : " (listed " + y.str() + ")"));
    }
}

void tangle_vectors(VerifyResult& r, const VerifyOptions& o) {
  r.parameters = "T, S1";
  BracketVector t = bracket_vector(tangle_T(), o.bracket);
  BracketVector want_t{parse_poly("A^6"), parse_poly("-A^4 - A^-4"), parse_poly("-A^4 + 1 + A^-2")};
  BracketVector s = bracket_vector(tangle_S(1), o.bracket);
  BracketVector want_s{parse_poly("-A^12 + 1 - A^4 - A^-4"), parse_poly("A^6"),
                       parse_poly("A^10 + A^8 - 2A^4 - A^2 + 1 + A^-2")};
  auto show = [](const BracketVector& v) { return "(" + v.d.str() + ", " + v.n.str() + ", " + v.x.str() + ")"; };
  record(r, t == want_t, "T: " + show(t));
  record(r, s == want_s, "S1: " + show(s));
}

void prop4(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(6);
  r.parameters = range_str("n", lo, hi);
  for (int n = lo; n <= hi; ++n) {
    auto exact = maxdeg_vector(sn_bracket_vector(n, o.bracket));
    auto est = degree_vector(n);
    std::array<MaxPlusDeg, 3> law{10 * n + 2, 6 * n, 10 * n};
    record(r, exact == law && est == law,
           "n=" + std::to_string(n) + ": exact " + deg_str(exact) + ", max-plus " + deg_str(est) + ", law " + deg_str(law));
  }
}

void c0_km(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(0), hi = o.hi.value_or(12);
  r.parameters = range_str("m", lo, hi) + ", trees m=1..8";
  std::map<int, int> seen;
  for (int m = lo; m <= hi; ++m) {
    LaurentPoly c = c0_Km(m);
    int d = c.maxdeg().value();
    bool fresh = seen.emplace(d, m).second;
    record(r, c.eval_at_one() == 1 && fresh,
           "m=" + std::to_string(m) + ": c0 = " + c.str() + ", at x=1: " + c.eval_at_one().get_str() + ", maxdeg " +
               std::to_string(d) + (fresh ? "" : " (repeats m=" + std::to_string(seen[d]) + ")"));
  }
  for (int m = 1; m <= 8; ++m) {
    bool eq = eval_c0(*build_km_tree(m)) == c0_Km(m);
    record(r, eq, "tree m=" + std::to_string(m) + (eq ? " matches" : " differs from") + " closed form");
  }
}

void rcc_km(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(2);
  r.parameters = range_str("m", lo, hi) + ", 100 random involutions";
  for (int m = lo; m <= hi; ++m) {
    PlanarDiagram k = km(m);
    for (int i = 1; i <= m; ++i) {
      std::string tag = "m=" + std::to_string(m) + ", R" + std::to_string(i);
      PlanarDiagram moved = rcc(k, "R" + std::to_string(i));
      GaussCode g = to_gauss(moved);
      GaussCode target = to_gauss(km(i - 1));
      int need = std::max(g.crossing_count(), target.crossing_count());
      if (need > o.bracket.max_crossings) {
        r.skipped.push_back(tag + " (" + std::to_string(need) + " classical crossings)");
        continue;
      }
      LaurentPoly f = f_polynomial(g, o.bracket), want = f_polynomial(target, o.bracket);
      record(r, f == want, tag + ": f = " + f.str() + ", f(K_" + std::to_string(i - 1) + ") = " + want.str());
    }
  }
  Rng rng(o.seed);
  std::uniform_int_distribution<int> size(1, 8);
  int bad = 0;
  std::string first;
  for (int t = 0; t < 100; ++t) {
    PlanarDiagram d = to_planar(random_gauss(rng, size(rng)));
    auto fs = faces(d);
    std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
    std::size_t reg = pick(rng);
    // Flips rotate slots and so renumber faces; follow the region by a corner.
    d.name_region("probe", fs[reg].boundary.front());
    if (!(rcc(rcc(d, "probe"), "probe") == d)) {
      if (!bad++) first = "trial " + std::to_string(t) + ", region " + std::to_string(reg);
    }
  }
  record(r, bad == 0, "rcc involution on 100 random diagrams: " + std::to_string(bad) + " failures" + (bad ? " (" + first + ")" : ""));
}

void arcshift_vkn(VerifyResult& r, const VerifyOptions& o) {
  int lo = o.lo.value_or(1), hi = o.hi.value_or(3);
  r.parameters = range_str("n", lo, hi) + ", blocks j=1..n";
  for (int n = lo; n <= hi; ++n) {
    PlanarDiagram d = vkn_planar(n);
    for (int j = 1; j <= n; ++j) {
      std::string tag = "n=" + std::to_string(n) + ", c_" + std::to_string(j);
      GaussCode g = simplify(to_gauss(arc_shift(d, vkn_block_arc(n, j))));
      GaussCode target = vkn(j - 1);
      int need = std::max(g.crossing_count(), target.crossing_count());
      if (need > o.bracket.max_crossings) {
        r.skipped.push_back(tag + " (" + std::to_string(need) + " classical crossings)");
        continue;
      }
      LaurentPoly f = f_polynomial(g, o.bracket), want = f_polynomial(target, o.bracket);
      record(r, f == want,
             tag + ": " + std::to_string(g.crossing_count()) + " crossings after simplify, f = " + f.str() + ", f(VK_" +
                 std::to_string(j - 1) + ") = " + want.str());
    }
  }
}

void properties(VerifyResult& r, const VerifyOptions& o) {
  r.parameters = "1000 codes, 200 tangles, 100 pairs, seed " + std::to_string(o.seed);
  Rng rng(o.seed);
  std::uniform_int_distribution<int> size(0, 8);
  int bad_f = 0, bad_p = 0, bad_one = 0;
  std::string first;
  for (int t = 0; t < 1000; ++t) {
    GaussCode g = random_gauss(rng, size(rng));
    GaussCode s = simplify(g);
    LaurentPoly pg = affine_index(g);
    bool f_ok = f_polynomial(s, o.bracket) == f_polynomial(g, o.bracket);
    bool p_ok = affine_index(s) == pg;
    bool one_ok = pg.eval_at_one() == 0;
    bad_f += !f_ok;
    bad_p += !p_ok;
    bad_one += !one_ok;
    if ((!f_ok || !p_ok || !one_ok) && first.empty()) first = " first: " + g.str();
  }
  record(r, bad_f == 0, "f invariant under simplify: " + std::to_string(bad_f) + "/1000 failures" + (bad_f ? first : ""));
  record(r, bad_p == 0, "affine index invariant under simplify: " + std::to_string(bad_p) + "/1000 failures" + (bad_p ? first : ""));
  record(r, bad_one == 0, "P(1) = 0: " + std::to_string(bad_one) + "/1000 failures" + (bad_one ? first : ""));

  ScaledMatrix ba = matrix_BA(matrix_B(o.bracket));
  MaxPlusMatrix mx = ba_max(ba);
  std::uniform_int_distribution<int> tsize(1, 5);
  int bad_est = 0;
  std::string first_est;
  for (int t = 0; t < 200; ++t) {
    TangleDiagram s = random_tangle(rng, tsize(rng));
    BracketVector v = bracket_vector(s, o.bracket);
    auto dv = maxdeg_vector(v);
    auto est = maxplus_matvec(mx, {dv[0], dv[1], dv[2]});
    auto exact = maxdeg_vector(apply(ba, v));
    for (int i = 0; i < 3; ++i)
      if (!(exact[static_cast<std::size_t>(i)] <= est[static_cast<std::size_t>(i)])) {
        if (!bad_est++) first_est = " first: tangle " + std::to_string(t);
        break;
      }
  }
  record(r, bad_est == 0, "max-plus estimate bounds exact maxdeg: " + std::to_string(bad_est) + "/200 failures" + first_est);

  std::uniform_int_distribution<int> psize(0, 6);
  int bad_sum = 0;
  std::string first_sum;
  for (int t = 0; t < 100; ++t) {
    GaussCode a = random_gauss(rng, psize(rng)), b = random_gauss(rng, psize(rng));
    if (!(f_polynomial(connected_sum(a, b), o.bracket) == f_polynomial(a, o.bracket) * f_polynomial(b, o.bracket)))
      if (!bad_sum++) first_sum = " first: " + a.str() + " # " + b.str();
  }
  record(r, bad_sum == 0, "f multiplicative under connected sum: " + std::to_string(bad_sum) + "/100 failures" + first_sum);
}

const std::vector<std::pair<std::string, Claim>>& registry() {
  static const std::vector<std::pair<std::string, Claim>> r{
      {"affine-vkn", affine_vkn}, {"writhe-vkn", writhe_vkn}, {"oracle-bracket", oracle_bracket},
      {"maxdeg4n", maxdeg4n},     {"b-matrix", b_matrix},     {"tangle-vectors", tangle_vectors},
      {"prop4", prop4},           {"c0-km", c0_km},           {"rcc-km", rcc_km},
      {"arcshift-vkn", arcshift_vkn}, {"properties", properties}};
  return r;
}

}  // namespace

const std::vector<std::string>& claim_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, c] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool known_claim(const std::string& claim) {
  const auto& n = claim_names();
  return std::find(n.begin(), n.end(), claim) != n.end();
}

VerifyResult run_claim(const std::string& claim, const VerifyOptions& opt) {
  for (const auto& [name, fn] : registry())
    if (name == claim) {
      VerifyResult r;
      r.claim = claim;
      fn(r, opt);
      return r;
    }
  throw ValidationError("unknown claim '" + claim + "'");
}

}  // namespace gordian
