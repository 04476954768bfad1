#include <algorithm>
#include <map>
#include <stdexcept>

#include "gordian/diagram.hpp"

namespace gordian {

namespace {

struct PassInfo {
  int crossing;
  bool first;
};

std::vector<PassInfo> pass_info(const GaussCode& g, std::vector<int>& index_of_id) {
  auto ids = g.crossing_ids();
  std::map<int, int> idx;
  for (std::size_t i = 0; i < ids.size(); ++i) idx[ids[i]] = static_cast<int>(i);
  std::vector<PassInfo> out;
  std::vector<char> met(ids.size(), 0);
  for (const auto& p : g.passes()) {
    int c = idx.at(p.id);
    out.push_back({c, !met[static_cast<std::size_t>(c)]});
    met[static_cast<std::size_t>(c)] = 1;
  }
  index_of_id = ids;
  return out;
}

// Ports read straight off the signed code; planar iff the face count is V+2.
PlanarDiagram rotation_system(const GaussCode& g) {
  const int m = static_cast<int>(g.size());
  const int n = m / 2;
  std::vector<int> ids;
  auto info = pass_info(g, ids);
  std::vector<int> upos(static_cast<std::size_t>(n)), opos(static_cast<std::size_t>(n)), sign(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    const auto& p = g.passes()[static_cast<std::size_t>(k)];
    int c = info[static_cast<std::size_t>(k)].crossing;
    (p.strand == Strand::Under ? upos : opos)[static_cast<std::size_t>(c)] = k;
    sign[static_cast<std::size_t>(c)] = p.sign;
  }
  auto md = [m](int k) { return ((k % m) + m) % m; };
  std::vector<Crossing> cr(static_cast<std::size_t>(n));
  std::vector<Edge> edges(static_cast<std::size_t>(m));
  for (int c = 0; c < n; ++c) {
    int u = upos[static_cast<std::size_t>(c)], o = opos[static_cast<std::size_t>(c)];
    Crossing& x = cr[static_cast<std::size_t>(c)];
    x.kind = CrossingKind::Classical;
    x.sign = sign[static_cast<std::size_t>(c)];
    if (x.sign > 0)
      x.edge = {md(u - 1), md(o), md(u), md(o - 1)};
    else
      x.edge = {md(u - 1), md(o - 1), md(u), md(o)};
    edges[static_cast<std::size_t>(md(u - 1))].head = {c, 0};
    edges[static_cast<std::size_t>(md(u))].tail = {c, 2};
    if (x.sign > 0) {
      edges[static_cast<std::size_t>(md(o))].tail = {c, 1};
      edges[static_cast<std::size_t>(md(o - 1))].head = {c, 3};
    } else {
      edges[static_cast<std::size_t>(md(o - 1))].head = {c, 1};
      edges[static_cast<std::size_t>(md(o))].tail = {c, 3};
    }
  }
  PlanarDiagram d = PlanarDiagram::from_parts(std::move(cr), std::move(edges), 0);
  d.set_base_edge(m - 1);
  return d;
}

struct Pt {
  long x, y;
  friend bool operator==(const Pt&, const Pt&) = default;
};

enum Side { E = 0, N = 1, W = 2, S = 3 };

// Orthogonal layout: crossing i at (10i, 0); the first pass through a
// crossing runs west to east, the second runs vertically. Connection k runs
// in its own lanes y = +-(3 + k) and, when it must switch sides, in its own
// column x = 10n + 5 + k. Every lane intersection becomes a virtual crossing.
PlanarDiagram routed(const GaussCode& g) {
  const int m = static_cast<int>(g.size());
  const int n = m / 2;
  std::vector<int> ids;
  auto info = pass_info(g, ids);

  std::vector<char> first_over(static_cast<std::size_t>(n)), vertical_up(static_cast<std::size_t>(n));
  for (int k = 0; k < m; ++k) {
    const auto& p = g.passes()[static_cast<std::size_t>(k)];
    int c = info[static_cast<std::size_t>(k)].crossing;
    if (!info[static_cast<std::size_t>(k)].first) continue;
    bool over = p.strand == Strand::Over;
    first_over[static_cast<std::size_t>(c)] = over;
    vertical_up[static_cast<std::size_t>(c)] = over ? p.sign > 0 : p.sign < 0;
  }
  auto exit_side = [&](int k) {
    const auto& pi = info[static_cast<std::size_t>(k)];
    if (pi.first) return E;
    return vertical_up[static_cast<std::size_t>(pi.crossing)] ? N : S;
  };
  auto entry_side = [&](int k) {
    const auto& pi = info[static_cast<std::size_t>(k)];
    if (pi.first) return W;
    return vertical_up[static_cast<std::size_t>(pi.crossing)] ? S : N;
  };
  // Classical slot of each side: slot 0 is the incoming under strand.
  auto slot_of = [&](int c, Side s) {
    Side start;
    if (!first_over[static_cast<std::size_t>(c)])
      start = W;
    else
      start = vertical_up[static_cast<std::size_t>(c)] ? S : N;
    return (static_cast<int>(s) - static_cast<int>(start) + 4) % 4;
  };

  std::vector<std::vector<Pt>> path(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    int a = info[static_cast<std::size_t>(k)].crossing, b = info[static_cast<std::size_t>((k + 1) % m)].crossing;
    long xa = 10L * a, xb = 10L * b;
    Side so = exit_side(k), si = entry_side((k + 1) % m);
    int need_out = so == N ? 1 : so == S ? -1 : 0;
    int need_in = si == N ? 1 : si == S ? -1 : 0;
    long lane = 3 + k;
    auto& pts = path[static_cast<std::size_t>(k)];
    long cx;
    int sig_out = need_out ? need_out : (need_in ? need_in : 1);
    int sig_in = need_in ? need_in : sig_out;
    if (so == E) {
      pts.push_back({xa + 1, 0});
      pts.push_back({xa + 2, 0});
      cx = xa + 2;
    } else {
      pts.push_back({xa, so == N ? 1 : -1});
      cx = xa;
    }
    pts.push_back({cx, sig_out * lane});
    long cin = si == W ? xb - 2 : xb;
    if (sig_out != sig_in) {
      long z = 10L * n + 5 + k;
      pts.push_back({z, sig_out * lane});
      pts.push_back({z, sig_in * lane});
    }
    pts.push_back({cin, sig_in * lane});
    if (si == W) {
      pts.push_back({xb - 2, 0});
      pts.push_back({xb - 1, 0});
    } else {
      pts.push_back({xb, si == N ? 1 : -1});
    }
  }

  struct Hit {
    long at;  // arc length along the connection
    int vc;   // virtual crossing index
    int in, out;
  };
  std::vector<std::vector<Hit>> hits(static_cast<std::size_t>(m));
  int nv = 0;
  auto side_in = [](Pt a, Pt b) {
    if (a.y == b.y) return b.x > a.x ? W : E;
    return b.y > a.y ? S : N;
  };
  for (int k = 0; k < m; ++k)
    for (int l = k + 1; l < m; ++l) {
      const auto& P = path[static_cast<std::size_t>(k)];
      const auto& Q = path[static_cast<std::size_t>(l)];
      long lp = 0;
      for (std::size_t i = 0; i + 1 < P.size(); ++i) {
        Pt a = P[i], b = P[i + 1];
        long lq = 0;
        for (std::size_t j = 0; j + 1 < Q.size(); ++j) {
          Pt c = Q[j], d = Q[j + 1];
          bool ph = a.y == b.y, qh = c.y == d.y;
          if (ph != qh) {
            Pt h0 = ph ? a : c, h1 = ph ? b : d, v0 = ph ? c : a, v1 = ph ? d : b;
            long x = v0.x, y = h0.y;
            long hx0 = std::min(h0.x, h1.x), hx1 = std::max(h0.x, h1.x);
            long vy0 = std::min(v0.y, v1.y), vy1 = std::max(v0.y, v1.y);
            if (hx0 <= x && x <= hx1 && vy0 <= y && y <= vy1) {
              if (x == hx0 || x == hx1 || y == vy0 || y == vy1) throw std::logic_error("degenerate layout contact");
              int vc = nv++;
              Side pin = side_in(a, b), qin = side_in(c, d);
              hits[static_cast<std::size_t>(k)].push_back(
                  {lp + std::abs(x - a.x) + std::abs(y - a.y), vc, pin, (pin + 2) % 4});
              hits[static_cast<std::size_t>(l)].push_back(
                  {lq + std::abs(x - c.x) + std::abs(y - c.y), vc, qin, (qin + 2) % 4});
            }
          } else if (ph && a.y == c.y) {
            long lo = std::max(std::min(a.x, b.x), std::min(c.x, d.x));
            long hi = std::min(std::max(a.x, b.x), std::max(c.x, d.x));
            if (lo <= hi) throw std::logic_error("overlapping layout lanes");
          } else if (!ph && a.x == c.x) {
            long lo = std::max(std::min(a.y, b.y), std::min(c.y, d.y));
            long hi = std::min(std::max(a.y, b.y), std::max(c.y, d.y));
            if (lo <= hi) throw std::logic_error("overlapping layout lanes");
          }
          lq += std::abs(d.x - c.x) + std::abs(d.y - c.y);
        }
        lp += std::abs(b.x - a.x) + std::abs(b.y - a.y);
      }
    }

  std::vector<Crossing> cr(static_cast<std::size_t>(n + nv));
  for (int c = 0; c < n; ++c) {
    cr[static_cast<std::size_t>(c)].kind = CrossingKind::Classical;
    cr[static_cast<std::size_t>(c)].sign = g.sign_of(ids[static_cast<std::size_t>(c)]);
  }
  std::vector<Edge> edges;
  int base = 0;
  for (int k = 0; k < m; ++k) {
    auto& hs = hits[static_cast<std::size_t>(k)];
    std::sort(hs.begin(), hs.end(), [](const Hit& a, const Hit& b) { return a.at < b.at; });
    int a = info[static_cast<std::size_t>(k)].crossing, b = info[static_cast<std::size_t>((k + 1) % m)].crossing;
    Port from{a, slot_of(a, exit_side(k))};
    for (const auto& h : hs) {
      int e = static_cast<int>(edges.size());
      Port to{n + h.vc, h.in};
      edges.push_back({from, to});
      cr[static_cast<std::size_t>(from.crossing)].edge[static_cast<std::size_t>(from.slot)] = e;
      cr[static_cast<std::size_t>(to.crossing)].edge[static_cast<std::size_t>(to.slot)] = e;
      from = {n + h.vc, h.out};
    }
    int e = static_cast<int>(edges.size());
    Port to{b, slot_of(b, entry_side((k + 1) % m))};
    edges.push_back({from, to});
    cr[static_cast<std::size_t>(from.crossing)].edge[static_cast<std::size_t>(from.slot)] = e;
    cr[static_cast<std::size_t>(to.crossing)].edge[static_cast<std::size_t>(to.slot)] = e;
    if (k == m - 1) base = e;
  }
  PlanarDiagram d = PlanarDiagram::from_parts(std::move(cr), std::move(edges), 0);
  d.set_base_edge(base);
  if (!is_planar(d)) throw std::logic_error("planarization produced a non-planar diagram");
  return d;
}

}  // namespace

PlanarDiagram to_planar(const GaussCode& g) {
  if (g.empty()) return PlanarDiagram::unknot();
  PlanarDiagram d = rotation_system(g);
  if (is_planar(d)) return d;
  return routed(g);
}

}  // namespace gordian
