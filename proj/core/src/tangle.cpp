#include "gordian/tangle.hpp"

#include <map>

#include "gordian/families.hpp"

namespace gordian {

const char* closure_name(Closure c) {
  switch (c) {
    case Closure::D:
      return "D";
    case Closure::N:
      return "N";
    default:
      return "X";
  }
}

TangleDiagram::TangleDiagram(std::vector<TangleCrossing> crossings, std::array<int, 4> ends)
    : crossings_(std::move(crossings)), ends_(ends) {
  std::map<int, int> uses;
  for (const auto& c : crossings_)
    for (int l : c.label) ++uses[l];
  for (int l : ends_) ++uses[l];
  for (const auto& [l, k] : uses) {
    if (l < 0) throw ValidationError("tangle labels must be non-negative");
    if (k != 2) throw ValidationError("tangle label " + std::to_string(l) + " meets " + std::to_string(k) + " ends (expected 2)");
    labels_ = std::max(labels_, l + 1);
  }
}

int TangleDiagram::classical_count() const {
  int k = 0;
  for (const auto& c : crossings_) k += c.kind == CrossingKind::Classical;
  return k;
}

std::array<int, 4> TangleDiagram::emit(NetBuilder& b) const {
  int base = b.reserve(labels_);
  for (const auto& c : crossings_) {
    std::array<int, 4> ls{};
    for (int k = 0; k < 4; ++k) ls[static_cast<std::size_t>(k)] = base + c.label[static_cast<std::size_t>(k)];
    b.add_crossing(c.kind, ls);
  }
  std::array<int, 4> out{};
  for (int t = 0; t < 4; ++t) out[static_cast<std::size_t>(t)] = base + ends_[static_cast<std::size_t>(t)];
  return out;
}

PlanarDiagram close_diagram(const TangleDiagram& t, Closure mode) {
  NetBuilder b;
  auto e = t.emit(b);
  const int wt = e[0], wb = e[1], et = e[2], eb = e[3];
  switch (mode) {
    case Closure::D:
      b.join(wt, wb);
      b.join(et, eb);
      break;
    case Closure::N:
      b.join(wt, et);
      b.join(wb, eb);
      break;
    case Closure::X: {
      int l = b.reserve(4);
      b.add_crossing(CrossingKind::Virtual, {l, l + 1, l + 2, l + 3});
      b.join(l, wt);
      b.join(l + 1, et);
      b.join(l + 2, eb);
      b.join(l + 3, wb);
    }
  }
  return b.build();
}

GaussCode close(const TangleDiagram& t, Closure mode) {
  PlanarDiagram d = close_diagram(t, mode);
  int k = d.component_count();
  if (k != 1)
    throw ValidationError(std::string(closure_name(mode)) + "-closure has " + std::to_string(k) + " components");
  return to_gauss(d);
}

BracketVector bracket_vector(const TangleDiagram& t, const BracketOptions& opt) {
  return {bracket(close_diagram(t, Closure::D), opt), bracket(close_diagram(t, Closure::N), opt),
          bracket(close_diagram(t, Closure::X), opt)};
}

TangleDiagram tangle_from_cuts(const PlanarDiagram& d, int e1, int e2) {
  const int ne = d.edge_count();
  if (e1 < 0 || e2 < 0 || e1 >= ne || e2 >= ne || e1 == e2) throw ValidationError("tangle cuts need two distinct edges");
  std::vector<TangleCrossing> cr;
  for (int c = 0; c < d.crossing_count(); ++c) {
    TangleCrossing t{d.crossing(c).kind, d.crossing(c).edge};
    cr.push_back(t);
  }
  // The head-side port of a cut edge gets a fresh label.
  const Port h1 = d.edge(e1).head, h2 = d.edge(e2).head;
  cr[static_cast<std::size_t>(h1.crossing)].label[static_cast<std::size_t>(h1.slot)] = ne;
  cr[static_cast<std::size_t>(h2.crossing)].label[static_cast<std::size_t>(h2.slot)] = ne + 1;
  return TangleDiagram(std::move(cr), {e1, e2, ne, ne + 1});
}

PlanarDiagram sum_closure(const TangleDiagram& t, const TangleDiagram& s) {
  NetBuilder b;
  auto a = t.emit(b);
  auto c = s.emit(b);
  // T.ET-S.WT and T.EB-S.WB form T+S; N closes WT to ET and WB to EB.
  b.join(a[2], c[0]);
  b.join(a[3], c[1]);
  b.join(a[0], c[2]);
  b.join(a[1], c[3]);
  return b.build();
}

LaurentPoly kappa_inverse() {
  LaurentPoly mu = loop_value();
  LaurentPoly one = LaurentPoly::constant(1);
  return (mu - one) * (mu + one * Integer(2));
}

PolyMatrix matrix_A_numerators() {
  LaurentPoly diag = loop_value() + LaurentPoly::constant(1);
  LaurentPoly off = LaurentPoly::constant(-1);
  PolyMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i == j ? diag : off;
  return m;
}

RatMatrix matrix_A() {
  auto num = matrix_A_numerators();
  LaurentPoly den = kappa_inverse();
  RatMatrix out;
  for (int i = 0; i < 3; ++i) {
    out.emplace_back();
    for (int j = 0; j < 3; ++j) out.back().emplace_back(num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], den);
  }
  return out;
}

LaurentPoly bilinear(const BracketVector& v, const BracketVector& w) {
  auto m = matrix_A_numerators();
  LaurentPoly acc;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) acc += v[i] * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[j];
  return rat_reduce_exact(RationalFn(acc, kappa_inverse()));
}

LaurentPoly closure_sum_bracket(const TangleDiagram& t, const TangleDiagram& s, const BracketOptions& opt) {
  return bilinear(bracket_vector(t, opt), bracket_vector(s, opt));
}

PolyMatrix listed_matrix_B() {
  const char* text[3][3] = {
      {"-A^12 + 1 - A^4 - A^-4", "A^10 + 3A^6 + A^2 - A^-2", "A^10 - A^6 - 3A^4 - A^2 + 1 + A^-2"},
      {"A^6", "-A^8 - A^4", "A^6"},
      {"A^10 + A^8 - 2A^4 - A^2 + 1 + A^-2", "-A^8 - A^4 - 1", "-A^4 + A^2 + 2 + A^-2 - A^-4 - A^-6"}};
  PolyMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = parse_poly(text[i][j]);
  return m;
}

PolyMatrix matrix_B(const BracketOptions& opt, bool strict) {
  PolyMatrix m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = bracket(d_link(3 * i + j + 1), opt);
  if (strict) {
    auto p = listed_matrix_B();
    std::string bad;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (!(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
          bad += " b" + std::to_string(i + 1) + std::to_string(j + 1) + " = " +
                 m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str() + " (listed " +
                 p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].str() + ");";
    if (!bad.empty()) throw BMatrixMismatch("computed B differs from the listed constants:" + bad);
  }
  return m;
}

ScaledMatrix matrix_BA(const PolyMatrix& b) {
  auto a = matrix_A_numerators();
  ScaledMatrix out;
  out.den = kappa_inverse();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      LaurentPoly acc;
      for (std::size_t k = 0; k < 3; ++k) acc += b[i][k] * a[k][j];
      out.num[i][j] = acc;
    }
  return out;
}

MaxPlusMatrix ba_max(const ScaledMatrix& ba) {
  MaxPlusMatrix m(3, 3);
  const int dd = ba.den.maxdeg().value();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      MaxPlusDeg d = ba.num[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].maxdeg();
      m.at(i, j) = d.is_bottom() ? d : MaxPlusDeg(d.value() - dd);
    }
  return m;
}

BracketVector apply(const ScaledMatrix& m, const BracketVector& v) {
  std::array<LaurentPoly, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    LaurentPoly acc;
    for (std::size_t j = 0; j < 3; ++j) acc += m.num[i][j] * v[static_cast<int>(j)];
    out[i] = rat_reduce_exact(RationalFn(acc, m.den));
  }
  return {out[0], out[1], out[2]};
}

BracketVector sn_bracket_vector(int n, const BracketOptions& opt) {
  if (n < 1) throw ValidationError("sn_bracket_vector needs n >= 1");
  BracketVector v = bracket_vector(tangle_S(1), opt);
  if (n == 1) return v;
  ScaledMatrix ba = matrix_BA(matrix_B(opt));
  for (int k = 2; k <= n; ++k) v = apply(ba, v);
  return v;
}

LaurentPoly vkn_bracket(int n, const BracketOptions& opt) {
  if (n < 1) throw ValidationError("vkn_bracket needs n >= 1");
  return bilinear(bracket_vector(tangle_T(), opt), sn_bracket_vector(n, opt));
}

std::array<MaxPlusDeg, 3> maxdeg_vector(const BracketVector& v) { return {v.d.maxdeg(), v.n.maxdeg(), v.x.maxdeg()}; }

std::array<MaxPlusDeg, 3> degree_vector(int n) {
  if (n < 1) throw ValidationError("degree_vector needs n >= 1");
  std::vector<MaxPlusDeg> v{12, 6, 10};
  MaxPlusMatrix m = ba_max(matrix_BA(matrix_B()));
  for (int k = 2; k <= n; ++k) v = maxplus_matvec(m, v);
  return {v[0], v[1], v[2]};
}

}  // namespace gordian
