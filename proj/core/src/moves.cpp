#include "gordian/moves.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace gordian {

std::string move_str(const MoveDescriptor& m) {
  if (auto* r = std::get_if<RccMove>(&m)) return "rcc " + r->region;
  if (auto* a = std::get_if<ArcShiftMove>(&m))
    return "arc-shift " + std::to_string(a->arc.first + 1) + "," + std::to_string(a->arc.last + 1);
  return "simplify";
}

PlanarDiagram rcc(const PlanarDiagram& d, int region) {
  auto fs = faces(d);
  if (region < 0 || region >= static_cast<int>(fs.size()))
    throw ValidationError("region " + std::to_string(region) + " out of range (" + std::to_string(fs.size()) + " faces)");
  std::set<int> on_boundary;
  for (const auto& c : fs[static_cast<std::size_t>(region)].boundary) on_boundary.insert(c.crossing);
  PlanarDiagram r = d;
  for (int c : on_boundary)
    if (r.crossing(c).classical()) r = flip_crossing(r, c);
  return r;
}

PlanarDiagram rcc(const PlanarDiagram& d, const std::string& region) {
  if (d.region_names().count(region)) return rcc(d, region_by_name(d, region));
  int idx = -1;
  auto [p, ec] = std::from_chars(region.data(), region.data() + region.size(), idx);
  if (ec != std::errc() || p != region.data() + region.size()) throw ValidationError("unknown region " + region);
  return rcc(d, idx);
}

namespace {

struct ResolvedArc {
  int e_in, e_mid, e_out;
};

std::optional<ResolvedArc> follow(const PlanarDiagram& d, int from, int to) {
  int mid = d.next_edge(from);
  int out = d.next_edge(mid);
  if (out != to) return std::nullopt;
  return ResolvedArc{from, mid, out};
}

}  // namespace

PlanarDiagram arc_shift(const PlanarDiagram& d, const ArcSpec& arc) {
  const int ne = d.edge_count();
  if (arc.first < 0 || arc.first >= ne || arc.last < 0 || arc.last >= ne)
    throw ValidationError("arc edges out of range");
  auto r = follow(d, arc.first, arc.last);
  if (!r) r = follow(d, arc.last, arc.first);
  if (!r) throw ValidationError("path does not pass exactly two crossings between the given edges");
  const auto [e_in, e_mid, e_out] = *r;
  const Port pin = d.edge(e_in).head, qin = d.edge(e_mid).head;
  const int x1 = pin.crossing, x2 = qin.crossing;
  if (x1 == x2) throw ValidationError("arc passes the same crossing twice");
  if (e_in == e_mid || e_mid == e_out || e_in == e_out) throw ValidationError("arc edges are not distinct");
  const Port qout = d.edge(e_out).tail;
  const Port l1p{x1, (pin.slot + 3) % 4}, l2p{x2, (qin.slot + 3) % 4};
  const int l1 = d.edge_at(l1p), l2 = d.edge_at(l2p);
  for (int l : {l1, l2})
    if (l == e_in || l == e_mid || l == e_out) throw ValidationError("arc's left edges run along the arc");

  NetBuilder b;
  b.reserve(ne);
  std::vector<std::array<int, 4>> labels;
  for (const auto& x : d.crossings()) labels.push_back(x.edge);
  auto set = [&](Port p, int l) { labels[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.slot)] = l; };
  const int b1 = b.fresh_label(), l1a = b.fresh_label(), abe = b.fresh_label(), l2a = b.fresh_label();
  const int bb = b.fresh_label(), ba1 = b.fresh_label(), aa = b.fresh_label(), bab = b.fresh_label();
  const int ba2 = b.fresh_label(), aab = b.fresh_label();
  set(pin, b1);
  set(l1p, l1a);
  set(qout, abe);
  set(l2p, l2a);
  for (int c = 0; c < d.crossing_count(); ++c)
    b.add_crossing(d.crossing(c).kind, labels[static_cast<std::size_t>(c)]);
  // New virtual crossings, ports E, N, W, S. Lane B runs next to the arc,
  // lane A outside it; they cross once beyond X2.
  const CrossingKind V = CrossingKind::Virtual;
  b.add_crossing(V, {l1a, bb, ba1, b1});     // B1
  b.add_crossing(V, {ba1, aa, l1, e_in});    // A1
  b.add_crossing(V, {l2a, bab, ba2, bb});    // B2
  b.add_crossing(V, {ba2, aab, l2, aa});     // A2
  b.add_crossing(V, {abe, e_out, aab, bab}); // AB
  for (const auto& [name, c] : d.region_names()) b.name_region(name, c);
  return b.build();
}

GaussCode simplify(const GaussCode& g) {
  std::vector<Pass> ps = g.passes();
  auto erase = [&](std::vector<std::size_t> idx) {
    std::sort(idx.rbegin(), idx.rend());
    for (auto i : idx) ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(i));
  };
  bool changed = true;
  while (changed && !ps.empty()) {
    changed = false;
    const std::size_t m = ps.size();
    for (std::size_t k = 0; k < m; ++k)
      if (ps[k].id == ps[(k + 1) % m].id) {
        erase({k, (k + 1) % m});
        changed = true;
        break;
      }
    if (changed) continue;
    for (std::size_t i = 0; i < m && !changed; ++i) {
      const Pass& a = ps[i];
      const Pass& c = ps[(i + 1) % m];
      if (a.strand != Strand::Over || c.strand != Strand::Over || a.sign == c.sign) continue;
      std::size_t ua = m, uc = m;
      for (std::size_t j = 0; j < m; ++j)
        if (ps[j].strand == Strand::Under) {
          if (ps[j].id == a.id) ua = j;
          if (ps[j].id == c.id) uc = j;
        }
      if ((ua + 1) % m == uc || (uc + 1) % m == ua) {
        erase({i, (i + 1) % m, ua, uc});
        changed = true;
      }
    }
  }
  return GaussCode(std::move(ps));
}

GaussCode connected_sum(const GaussCode& g1, const GaussCode& g2) {
  int shift = 0;
  for (const auto& p : g1.passes()) shift = std::max(shift, p.id);
  std::vector<Pass> ps = g1.passes();
  for (Pass p : g2.passes()) {
    p.id += shift;
    ps.push_back(p);
  }
  return GaussCode(std::move(ps));
}

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveDescriptor& move) {
  if (auto* r = std::get_if<RccMove>(&move)) return rcc(d, r->region);
  if (auto* a = std::get_if<ArcShiftMove>(&move)) return arc_shift(d, a->arc);
  return to_planar(simplify(to_gauss(d)));
}

MoveReport run_moves(const PlanarDiagram& source, const std::vector<MoveDescriptor>& moves,
                     const std::optional<GaussCode>& target, const BracketOptions& opt) {
  MoveReport rep;
  rep.before = to_gauss(source);
  rep.moves = moves;
  PlanarDiagram moved = source;
  for (const auto& m : moves) moved = apply_move(moved, m);
  rep.after = to_gauss(moved);
  rep.simplified = simplify(rep.after);
  if (!target) return rep;
  auto add = [&](const std::string& name, const LaurentPoly& x, const LaurentPoly& y) {
    rep.checks.push_back({name, x.str(), y.str(), x == y});
  };
  add("f-polynomial", f_polynomial(rep.simplified, opt), f_polynomial(*target, opt));
  add("affine-index", affine_index(rep.simplified), affine_index(*target));
  rep.match = std::all_of(rep.checks.begin(), rep.checks.end(), [](const InvariantCheck& c) { return c.match; });
  return rep;
}

MoveReport verify_one_move(const PlanarDiagram& source, const MoveDescriptor& move, const GaussCode& target,
                           const BracketOptions& opt) {
  return run_moves(source, {move}, target, opt);
}

}  // namespace gordian
