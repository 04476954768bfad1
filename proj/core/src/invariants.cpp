#include "gordian/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <thread>

namespace gordian {

namespace {

// Classical crossings over strand classes: each entry lists the class at
// slots 0..3. Classes are maximal strand pieces between classical ports.
struct StrandNet {
  int classes = 0;
  std::vector<std::array<int, 4>> cross;
  int extra_loops = 0;
};

StrandNet net_of(const GaussCode& g) {
  StrandNet net;
  const int m = static_cast<int>(g.size());
  net.classes = m;
  if (m == 0) {
    net.classes = 1;
    return net;
  }
  std::map<int, int> upos, opos, sign;
  for (int k = 0; k < m; ++k) {
    const auto& p = g.passes()[static_cast<std::size_t>(k)];
    (p.strand == Strand::Under ? upos : opos)[p.id] = k;
    sign[p.id] = p.sign;
  }
  auto md = [m](int k) { return ((k % m) + m) % m; };
  for (int id : g.crossing_ids()) {
    int u = upos[id], o = opos[id];
    if (sign[id] > 0)
      net.cross.push_back({md(u - 1), md(o), md(u), md(o - 1)});
    else
      net.cross.push_back({md(u - 1), md(o - 1), md(u), md(o)});
  }
  return net;
}

StrandNet net_of(const PlanarDiagram& d) {
  const int ne = d.edge_count();
  std::vector<int> parent(static_cast<std::size_t>(ne));
  for (int e = 0; e < ne; ++e) parent[static_cast<std::size_t>(e)] = e;
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  for (const auto& x : d.crossings())
    if (!x.classical()) {
      parent[static_cast<std::size_t>(find(x.edge[0]))] = find(x.edge[2]);
      parent[static_cast<std::size_t>(find(x.edge[1]))] = find(x.edge[3]);
    }
  std::map<int, int> cls;
  for (int e = 0; e < ne; ++e) cls.try_emplace(find(e), static_cast<int>(cls.size()));
  StrandNet net;
  net.classes = static_cast<int>(cls.size());
  net.extra_loops = d.free_loops();
  for (const auto& x : d.crossings())
    if (x.classical()) {
      std::array<int, 4> c{};
      for (int k = 0; k < 4; ++k) c[static_cast<std::size_t>(k)] = cls.at(find(x.edge[static_cast<std::size_t>(k)]));
      net.cross.push_back(c);
    }
  return net;
}

// Loops of the state whose bit i selects a B-split at crossing i.
int state_loops(const StrandNet& net, std::uint64_t state, std::vector<int>& parent) {
  parent.resize(static_cast<std::size_t>(net.classes));
  for (int i = 0; i < net.classes; ++i) parent[static_cast<std::size_t>(i)] = i;
  int comps = net.classes;
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  };
  for (std::size_t i = 0; i < net.cross.size(); ++i) {
    const auto& c = net.cross[i];
    if ((state >> i) & 1u) {
      unite(c[0], c[3]);
      unite(c[1], c[2]);
    } else {
      unite(c[0], c[1]);
      unite(c[2], c[3]);
    }
  }
  return comps + net.extra_loops;
}

LaurentPoly state_sum(const StrandNet& net, const BracketOptions& opt) {
  const int n = static_cast<int>(net.cross.size());
  if (n > opt.max_crossings)
    throw BruteforceLimit("state sum over " + std::to_string(n) + " classical crossings exceeds the limit of " +
                          std::to_string(opt.max_crossings));
  if (n > 62) throw BruteforceLimit("state sum too large");
  const int max_loops = net.classes + net.extra_loops;
  const std::uint64_t total = std::uint64_t{1} << n;
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  if (total < (1u << 12)) threads = 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
  // counts[b][loops]; a - b = n - 2b
  using Table = std::vector<std::uint64_t>;
  const std::size_t width = static_cast<std::size_t>(max_loops + 1);
  std::vector<Table> tables(threads, Table(static_cast<std::size_t>(n + 1) * width, 0));
  auto work = [&](unsigned t) {
    std::uint64_t lo = total / threads * t, hi = t + 1 == threads ? total : total / threads * (t + 1);
    std::vector<int> parent;
    Table& tab = tables[t];
    for (std::uint64_t s = lo; s < hi; ++s) {
      int loops = state_loops(net, s, parent);
      ++tab[static_cast<std::size_t>(std::popcount(s)) * width + static_cast<std::size_t>(loops)];
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Table sum(tables[0].size(), 0);
  for (const auto& tab : tables)
    for (std::size_t i = 0; i < tab.size(); ++i) sum[i] += tab[i];
  std::vector<LaurentPoly> mu_pow{LaurentPoly::constant(1)};
  const LaurentPoly mu = loop_value();
  for (int k = 1; k < max_loops; ++k) mu_pow.push_back(mu_pow.back() * mu);
  LaurentPoly out;
  for (int b = 0; b <= n; ++b) {
    LaurentPoly inner;
    for (int l = 1; l <= max_loops; ++l) {
      std::uint64_t c = sum[static_cast<std::size_t>(b) * width + static_cast<std::size_t>(l)];
      if (!c) continue;
      Integer k;
      mpz_import(k.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
      inner += mu_pow[static_cast<std::size_t>(l - 1)] * k;
    }
    out += inner.shifted(n - 2 * b);
  }
  return out;
}

}  // namespace

LaurentPoly loop_value() { return LaurentPoly::from_terms({{2, -1}, {-2, -1}}); }

BracketState resolve_state(const GaussCode& g, const std::map<int, Split>& s) {
  auto ids = g.crossing_ids();
  BracketState st;
  std::uint64_t state = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto it = s.find(ids[i]);
    if (it == s.end()) throw ValidationError("state does not assign crossing " + std::to_string(ids[i]));
    st.choice[ids[i]] = it->second;
    if (it->second == Split::B) {
      state |= std::uint64_t{1} << i;
      ++st.b_count;
    } else {
      ++st.a_count;
    }
  }
  for (const auto& [id, sp] : s)
    if (!st.choice.count(id)) throw ValidationError("state assigns unknown crossing " + std::to_string(id));
  std::vector<int> parent;
  st.loops = state_loops(net_of(g), state, parent);
  return st;
}

LaurentPoly bracket(const GaussCode& g, const BracketOptions& opt) { return state_sum(net_of(g), opt); }

LaurentPoly bracket(const PlanarDiagram& d, const BracketOptions& opt) {
  if (d.edge_count() == 0 && d.free_loops() == 0) throw ValidationError("bracket of the empty diagram");
  return state_sum(net_of(d), opt);
}

int writhe(const GaussCode& g) {
  int w = 0;
  for (const auto& p : g.passes())
    if (p.strand == Strand::Over) w += p.sign;
  return w;
}

int writhe(const PlanarDiagram& d) {
  int w = 0;
  for (const auto& x : d.crossings()) w += x.sign;
  return w;
}

LaurentPoly f_normalize(const LaurentPoly& br, int w) {
  LaurentPoly r = br.shifted(-3 * w);
  if (w % 2) r = -r;
  return r;
}

LaurentPoly f_polynomial(const GaussCode& g, const BracketOptions& opt) { return f_normalize(bracket(g, opt), writhe(g)); }

LaurentPoly f_polynomial(const PlanarDiagram& d, const BracketOptions& opt) {
  return f_normalize(bracket(d, opt), writhe(d));
}

ArcLabeling arc_labels(const GaussCode& g) {
  ArcLabeling lab;
  const auto& ps = g.passes();
  if (ps.empty()) {
    lab.labels = {0};
    return lab;
  }
  auto delta = [](const Pass& p) {
    bool over = p.strand == Strand::Over;
    return p.sign > 0 ? (over ? -1 : 1) : (over ? 1 : -1);
  };
  lab.labels.assign(ps.size(), 0);
  for (std::size_t k = 1; k < ps.size(); ++k) lab.labels[k] = lab.labels[k - 1] + delta(ps[k]);
  if (lab.labels.back() + delta(ps[0]) != lab.labels[0])
    throw ValidationError("arc labeling does not close up");
  return lab;
}

int crossing_weight(const GaussCode& g, const ArcLabeling& labeling, int id) {
  const auto& ps = g.passes();
  const int m = static_cast<int>(ps.size());
  if (static_cast<int>(labeling.labels.size()) != m) throw ValidationError("labeling does not match the code");
  int u = -1, o = -1;
  for (int k = 0; k < m; ++k)
    if (ps[static_cast<std::size_t>(k)].id == id) (ps[static_cast<std::size_t>(k)].strand == Strand::Under ? u : o) = k;
  if (u < 0 || o < 0) throw ValidationError("unknown crossing " + std::to_string(id));
  int under_in = labeling.labels[static_cast<std::size_t>((u + m - 1) % m)];
  int over_in = labeling.labels[static_cast<std::size_t>((o + m - 1) % m)];
  int sign = ps[static_cast<std::size_t>(u)].sign;
  return sign > 0 ? over_in - under_in - 1 : -(under_in - over_in - 1);
}

LaurentPoly affine_index(const GaussCode& g) {
  LaurentPoly p('t');
  ArcLabeling lab = arc_labels(g);
  for (int id : g.crossing_ids()) {
    int w = crossing_weight(g, lab, id);
    int s = g.sign_of(id);
    p += LaurentPoly::monomial(s, w, 't') - LaurentPoly::constant(s, 't');
  }
  return p;
}

}  // namespace gordian
