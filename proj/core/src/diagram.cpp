#include "gordian/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

namespace gordian {

namespace {

std::string strand_name(Strand s) { return s == Strand::Over ? "OVER" : "UNDER"; }

}  // namespace

GaussCode::GaussCode(std::vector<Pass> passes) : passes_(std::move(passes)) {
  std::map<int, std::vector<const Pass*>> by_id;
  for (const auto& p : passes_) {
    if (p.id <= 0) throw ValidationError("crossing id " + std::to_string(p.id) + " is not positive");
    if (p.sign != 1 && p.sign != -1) throw ValidationError("crossing " + std::to_string(p.id) + " has sign other than +/-");
    by_id[p.id].push_back(&p);
  }
  for (const auto& [id, ps] : by_id) {
    if (ps.size() != 2)
      throw ValidationError("crossing " + std::to_string(id) + " occurs " + std::to_string(ps.size()) +
                            " times (expected 2)");
    if (ps[0]->strand == ps[1]->strand)
      throw ValidationError("crossing " + std::to_string(id) + " has two " + strand_name(ps[0]->strand) + " passes");
    if (ps[0]->sign != ps[1]->sign) throw ValidationError("crossing " + std::to_string(id) + " has inconsistent signs");
  }
}

std::vector<int> GaussCode::crossing_ids() const {
  std::set<int> ids;
  for (const auto& p : passes_) ids.insert(p.id);
  return {ids.begin(), ids.end()};
}

int GaussCode::sign_of(int id) const {
  for (const auto& p : passes_)
    if (p.id == id) return p.sign;
  throw ValidationError("unknown crossing " + std::to_string(id));
}

std::string GaussCode::str() const {
  std::string out;
  for (std::size_t i = 0; i < passes_.size(); ++i) {
    if (i) out += ',';
    out += static_cast<char>(passes_[i].strand);
    out += std::to_string(passes_[i].id);
    out += passes_[i].sign > 0 ? '+' : '-';
  }
  return out;
}

GaussCode parse_gauss(const std::string& text) {
  std::vector<Pass> passes;
  if (text.empty()) return GaussCode();
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("gauss code syntax error at position " + std::to_string(i) + ": " + why);
  };
  while (true) {
    if (i >= text.size()) fail("expected item");
    Pass p{};
    if (text[i] == 'O') {
      p.strand = Strand::Over;
    } else if (text[i] == 'U') {
      p.strand = Strand::Under;
    } else {
      fail(std::string("expected 'O' or 'U', got '") + text[i] + "'");
    }
    ++i;
    std::size_t start = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == start) fail("expected crossing id");
    if (i - start > 9) fail("crossing id too large");
    p.id = std::stoi(text.substr(start, i - start));
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) fail("expected '+' or '-'");
    p.sign = text[i] == '+' ? 1 : -1;
    ++i;
    passes.push_back(p);
    if (i == text.size()) break;
    if (text[i] != ',') fail("expected ','");
    ++i;
  }
  return GaussCode(std::move(passes));
}

namespace {

std::vector<Pass> renamed_rotation(const std::vector<Pass>& ps, std::size_t r) {
  std::map<int, int> rename;
  std::vector<Pass> out;
  out.reserve(ps.size());
  for (std::size_t k = 0; k < ps.size(); ++k) {
    Pass p = ps[(r + k) % ps.size()];
    auto [it, fresh] = rename.try_emplace(p.id, static_cast<int>(rename.size()) + 1);
    p.id = it->second;
    out.push_back(p);
  }
  return out;
}

bool pass_less(const std::vector<Pass>& a, const std::vector<Pass>& b) {
  auto key = [](const Pass& p) { return std::tuple(p.id, static_cast<char>(p.strand), p.sign > 0 ? '+' : '-'); };
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [&](const Pass& x, const Pass& y) { return key(x) < key(y); });
}

}  // namespace

GaussCode normalize(const GaussCode& g) {
  const auto& ps = g.passes();
  if (ps.empty()) return g;
  std::vector<Pass> best = renamed_rotation(ps, 0);
  for (std::size_t r = 1; r < ps.size(); ++r) {
    auto cand = renamed_rotation(ps, r);
    if (pass_less(cand, best)) best = std::move(cand);
  }
  return GaussCode(std::move(best));
}

GaussCode reversed(const GaussCode& g) {
  std::vector<Pass> ps(g.passes().rbegin(), g.passes().rend());
  return GaussCode(std::move(ps));
}

bool same_diagram(const GaussCode& a, const GaussCode& b) { return normalize(a) == normalize(b); }

bool same_diagram_unoriented(const GaussCode& a, const GaussCode& b) {
  return same_diagram(a, b) || same_diagram(a, reversed(b));
}

PlanarDiagram PlanarDiagram::unknot() {
  PlanarDiagram d;
  d.free_loops_ = 1;
  return d;
}

PlanarDiagram PlanarDiagram::from_parts(std::vector<Crossing> crossings, std::vector<Edge> edges, int free_loops) {
  if (free_loops < 0) throw ValidationError("negative loop count");
  const int n = static_cast<int>(crossings.size());
  std::vector<std::array<int, 4>> seen(static_cast<std::size_t>(n), {0, 0, 0, 0});
  std::vector<std::array<int, 4>> is_head(static_cast<std::size_t>(n), {0, 0, 0, 0});
  auto check_port = [&](const Port& p, int e) {
    if (p.crossing < 0 || p.crossing >= n || p.slot < 0 || p.slot > 3)
      throw ValidationError("edge " + std::to_string(e) + " has an invalid port");
    if (crossings[static_cast<std::size_t>(p.crossing)].edge[static_cast<std::size_t>(p.slot)] != e)
      throw ValidationError("edge " + std::to_string(e) + " disagrees with crossing " + std::to_string(p.crossing));
    if (seen[static_cast<std::size_t>(p.crossing)][static_cast<std::size_t>(p.slot)]++)
      throw ValidationError("port used twice at crossing " + std::to_string(p.crossing));
  };
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    check_port(edges[static_cast<std::size_t>(e)].tail, e);
    check_port(edges[static_cast<std::size_t>(e)].head, e);
    const auto& h = edges[static_cast<std::size_t>(e)].head;
    is_head[static_cast<std::size_t>(h.crossing)][static_cast<std::size_t>(h.slot)] = 1;
  }
  for (int c = 0; c < n; ++c) {
    const auto& x = crossings[static_cast<std::size_t>(c)];
    const auto& s = seen[static_cast<std::size_t>(c)];
    const auto& h = is_head[static_cast<std::size_t>(c)];
    for (int k = 0; k < 4; ++k)
      if (!s[static_cast<std::size_t>(k)])
        throw ValidationError("crossing " + std::to_string(c) + " has an unused port");
    if (x.classical()) {
      if (x.sign != 1 && x.sign != -1) throw ValidationError("classical crossing " + std::to_string(c) + " lacks sign");
      int over_in = x.sign > 0 ? 3 : 1;
      if (!h[0] || h[2] || !h[static_cast<std::size_t>(over_in)] || h[static_cast<std::size_t>(4 - over_in)])
        throw ValidationError("classical crossing " + std::to_string(c) + " is inconsistent with its orientation");
    } else {
      if (x.sign != 0) throw ValidationError("virtual crossing " + std::to_string(c) + " carries a sign");
      if (h[0] == h[2] || h[1] == h[3])
        throw ValidationError("virtual crossing " + std::to_string(c) + " is inconsistent with its orientation");
    }
  }
  PlanarDiagram d;
  d.crossings_ = std::move(crossings);
  d.edges_ = std::move(edges);
  d.free_loops_ = free_loops;
  return d;
}

int PlanarDiagram::classical_count() const {
  return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(), [](const Crossing& c) { return c.classical(); }));
}

int PlanarDiagram::virtual_count() const { return crossing_count() - classical_count(); }

int PlanarDiagram::next_edge(int e) const {
  const Port& h = edge(e).head;
  return crossing(h.crossing).edge[static_cast<std::size_t>((h.slot + 2) % 4)];
}

int PlanarDiagram::prev_edge(int e) const {
  const Port& t = edge(e).tail;
  return crossing(t.crossing).edge[static_cast<std::size_t>((t.slot + 2) % 4)];
}

int PlanarDiagram::component_count() const {
  std::vector<char> seen(edges_.size(), 0);
  int count = free_loops_;
  for (int e = 0; e < edge_count(); ++e) {
    if (seen[static_cast<std::size_t>(e)]) continue;
    ++count;
    for (int f = e; !seen[static_cast<std::size_t>(f)]; f = next_edge(f)) seen[static_cast<std::size_t>(f)] = 1;
  }
  return count;
}

bool PlanarDiagram::connected() const {
  if (crossings_.empty()) return free_loops_ <= 1;
  if (free_loops_ > 0) return false;
  std::vector<char> seen(crossings_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    for (int e : crossing(c).edge)
      for (const Port& p : {edge(e).tail, edge(e).head})
        if (!seen[static_cast<std::size_t>(p.crossing)]) {
          seen[static_cast<std::size_t>(p.crossing)] = 1;
          ++reached;
          stack.push_back(p.crossing);
        }
  }
  return reached == crossing_count();
}

void PlanarDiagram::set_base_edge(int e) {
  if (e < 0 || e >= edge_count()) throw ValidationError("base edge " + std::to_string(e) + " out of range");
  base_ = e;
}

void PlanarDiagram::name_region(const std::string& name, Corner c) {
  if (c.crossing < 0 || c.crossing >= crossing_count() || c.corner < 0 || c.corner > 3)
    throw ValidationError("region " + name + " names an invalid corner");
  names_[name] = c;
}

int PlanarDiagram::gauss_id(int c) const {
  if (!crossing(c).classical()) throw ValidationError("crossing " + std::to_string(c) + " is virtual");
  int id = 0;
  for (int i = 0; i <= c; ++i)
    if (crossings_[static_cast<std::size_t>(i)].classical()) ++id;
  return id;
}

int PlanarDiagram::crossing_of_gauss_id(int id) const {
  int k = 0;
  for (int i = 0; i < crossing_count(); ++i)
    if (crossings_[static_cast<std::size_t>(i)].classical() && ++k == id) return i;
  throw ValidationError("unknown crossing " + std::to_string(id));
}

int NetBuilder::fresh_label() {
  parent_.push_back(static_cast<int>(parent_.size()));
  used_.push_back(0);
  return static_cast<int>(parent_.size()) - 1;
}

int NetBuilder::reserve(int n) {
  int first = static_cast<int>(parent_.size());
  for (int i = 0; i < n; ++i) fresh_label();
  return first;
}

int NetBuilder::find(int a) {
  if (a < 0 || a >= static_cast<int>(parent_.size())) throw ValidationError("unknown label " + std::to_string(a));
  used_[static_cast<std::size_t>(a)] = 1;
  while (parent_[static_cast<std::size_t>(a)] != a) {
    parent_[static_cast<std::size_t>(a)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
    a = parent_[static_cast<std::size_t>(a)];
  }
  return a;
}

int NetBuilder::add_crossing(CrossingKind kind, std::array<int, 4> labels) {
  for (int l : labels) find(l);
  raw_.push_back({kind, std::nullopt, labels});
  return static_cast<int>(raw_.size()) - 1;
}

int NetBuilder::add_oriented(int sign, std::array<int, 4> labels) {
  if (sign != 1 && sign != -1) throw ValidationError("sign must be +1 or -1");
  for (int l : labels) find(l);
  raw_.push_back({CrossingKind::Classical, sign, labels});
  return static_cast<int>(raw_.size()) - 1;
}

void NetBuilder::join(int a, int b) {
  a = find(a);
  b = find(b);
  if (a != b) parent_[static_cast<std::size_t>(a)] = b;
}

int NetBuilder::edge_of_label(int label) {
  auto it = edge_of_root_.find(find(label));
  return it == edge_of_root_.end() ? -1 : it->second;
}

PlanarDiagram NetBuilder::build() {
  const int n = static_cast<int>(raw_.size());
  std::map<int, std::vector<Port>> ports_of;
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) ports_of[find(raw_[static_cast<std::size_t>(c)].label[static_cast<std::size_t>(k)])].push_back({c, k});
  std::map<Port, Port> partner;
  std::map<Port, int> root_of;
  for (const auto& [root, ps] : ports_of) {
    if (ps.size() != 2)
      throw ValidationError("label " + std::to_string(root) + " meets " + std::to_string(ps.size()) +
                            " ports (expected 2)");
    partner[ps[0]] = ps[1];
    partner[ps[1]] = ps[0];
    root_of[ps[0]] = root;
    root_of[ps[1]] = root;
  }
  std::set<int> loop_roots;
  for (int l = 0; l < static_cast<int>(parent_.size()); ++l)
    if (used_[static_cast<std::size_t>(l)] && !ports_of.count(find(l))) loop_roots.insert(find(l));
  const int loops = static_cast<int>(loop_roots.size());

  // Walk every component, fixing its direction from the first pre-oriented
  // crossing met on it.
  std::set<Port> visited;
  std::vector<std::pair<Port, Port>> directed;  // (tail, head)
  auto expected_in = [&](const Port& p) {
    const Raw& r = raw_[static_cast<std::size_t>(p.crossing)];
    return p.slot == 0 || p.slot == (*r.sign > 0 ? 3 : 1);
  };
  for (int c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) {
      Port start{c, k};
      if (visited.count(start)) continue;
      std::vector<std::pair<Port, Port>> comp;
      Port out = start;
      do {
        Port in = partner.at(out);
        visited.insert(out);
        visited.insert(in);
        comp.emplace_back(out, in);
        out = {in.crossing, (in.slot + 2) % 4};
      } while (out != start);
      std::optional<bool> forward;
      for (const auto& [t, h] : comp) {
        if (!raw_[static_cast<std::size_t>(h.crossing)].sign) continue;
        bool fw = expected_in(h);
        if (!forward) forward = fw;
        if (*forward != fw)
          throw ValidationError("orientation conflict at crossing " + std::to_string(h.crossing + 1));
      }
      if (forward && !*forward) {
        std::reverse(comp.begin(), comp.end());
        for (auto& [t, h] : comp) std::swap(t, h);
      }
      directed.insert(directed.end(), comp.begin(), comp.end());
    }

  std::map<Port, bool> head_at;
  for (const auto& [t, h] : directed) {
    head_at[h] = true;
    head_at[t] = false;
  }
  std::vector<int> rot(static_cast<std::size_t>(n), 0);
  std::vector<Crossing> crossings(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    const Raw& r = raw_[static_cast<std::size_t>(c)];
    Crossing& x = crossings[static_cast<std::size_t>(c)];
    x.kind = r.kind;
    if (r.kind != CrossingKind::Classical) continue;
    if (r.sign) {
      x.sign = *r.sign;
      continue;
    }
    if (head_at.at({c, 2})) rot[static_cast<std::size_t>(c)] = 2;
    int s3 = (3 + rot[static_cast<std::size_t>(c)]) % 4;
    x.sign = head_at.at({c, s3}) ? 1 : -1;
  }
  auto moved = [&](const Port& p) { return Port{p.crossing, (p.slot + 4 - rot[static_cast<std::size_t>(p.crossing)]) % 4}; };
  std::vector<Edge> edges;
  edge_of_root_.clear();
  for (const auto& [t, h] : directed) {
    int e = static_cast<int>(edges.size());
    Edge ed{moved(t), moved(h)};
    edges.push_back(ed);
    crossings[static_cast<std::size_t>(ed.tail.crossing)].edge[static_cast<std::size_t>(ed.tail.slot)] = e;
    crossings[static_cast<std::size_t>(ed.head.crossing)].edge[static_cast<std::size_t>(ed.head.slot)] = e;
    edge_of_root_[root_of.at(t)] = e;
  }
  PlanarDiagram d = PlanarDiagram::from_parts(std::move(crossings), std::move(edges), loops);
  for (const auto& [name, c] : names_) {
    if (c.crossing < 0 || c.crossing >= n) throw ValidationError("region " + name + " names an invalid crossing");
    d.name_region(name, {c.crossing, (c.corner + 4 - rot[static_cast<std::size_t>(c.crossing)]) % 4});
  }
  return d;
}

std::vector<Region> faces(const PlanarDiagram& d) {
  if (d.crossing_count() == 0) {
    if (d.free_loops() != 1) throw ValidationError("faces need a connected diagram");
    return {Region{0, {}}, Region{1, {}}};
  }
  if (!d.connected()) throw ValidationError("faces need a connected diagram");
  const int n = d.crossing_count();
  std::vector<char> used(static_cast<std::size_t>(4 * n), 0);
  std::vector<Region> out;
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < 4; ++s) {
      if (used[static_cast<std::size_t>(4 * c + s)]) continue;
      Region r{static_cast<int>(out.size()), {}};
      Port p{c, s};
      while (!used[static_cast<std::size_t>(4 * p.crossing + p.slot)]) {
        used[static_cast<std::size_t>(4 * p.crossing + p.slot)] = 1;
        const Edge& e = d.edge(d.edge_at(p));
        Port q = e.tail == p ? e.head : e.tail;
        r.boundary.push_back({q.crossing, q.slot});
        p = {q.crossing, (q.slot + 1) % 4};
      }
      out.push_back(std::move(r));
    }
  return out;
}

bool is_planar(const PlanarDiagram& d) {
  if (!d.connected()) return false;
  return static_cast<int>(faces(d).size()) == d.crossing_count() + 2;
}

int region_of(const PlanarDiagram& d, Corner c) {
  auto fs = faces(d);
  for (const auto& r : fs)
    if (std::find(r.boundary.begin(), r.boundary.end(), c) != r.boundary.end()) return r.id;
  throw ValidationError("corner " + std::to_string(c.crossing) + ":" + std::to_string(c.corner) + " is not in any face");
}

int region_by_name(const PlanarDiagram& d, const std::string& name) {
  auto it = d.region_names().find(name);
  if (it == d.region_names().end()) throw ValidationError("unknown region " + name);
  return region_of(d, it->second);
}

GaussCode to_gauss(const PlanarDiagram& d) {
  if (d.component_count() != 1) throw ValidationError("to_gauss needs a single-component diagram");
  if (d.edge_count() == 0) return GaussCode();
  std::vector<int> ids(static_cast<std::size_t>(d.crossing_count()), 0);
  int next = 0;
  for (int c = 0; c < d.crossing_count(); ++c)
    if (d.crossing(c).classical()) ids[static_cast<std::size_t>(c)] = ++next;
  std::vector<Pass> passes;
  int e = d.base_edge();
  do {
    const Port& h = d.edge(e).head;
    const Crossing& x = d.crossing(h.crossing);
    if (x.classical())
      passes.push_back({ids[static_cast<std::size_t>(h.crossing)], h.slot % 2 == 0 ? Strand::Under : Strand::Over, x.sign});
    e = d.next_edge(e);
  } while (e != d.base_edge());
  return GaussCode(std::move(passes));
}

PlanarDiagram flip_crossing(const PlanarDiagram& d, int i) {
  if (i < 0 || i >= d.crossing_count()) throw ValidationError("crossing index " + std::to_string(i) + " out of range");
  if (!d.crossing(i).classical()) throw ValidationError("crossing " + std::to_string(i) + " is virtual");
  PlanarDiagram r = d;
  Crossing& x = r.crossings_[static_cast<std::size_t>(i)];
  const int shift = x.sign > 0 ? 1 : 3;  // old slot s becomes new slot s + shift
  std::array<int, 4> ne{};
  for (int s = 0; s < 4; ++s) ne[static_cast<std::size_t>((s + shift) % 4)] = x.edge[static_cast<std::size_t>(s)];
  x.edge = ne;
  x.sign = -x.sign;
  for (auto& e : r.edges_)
    for (Port* p : {&e.tail, &e.head})
      if (p->crossing == i) p->slot = (p->slot + shift) % 4;
  for (auto& [name, c] : r.names_)
    if (c.crossing == i) c.corner = (c.corner + shift) % 4;
  return r;
}

namespace {

std::vector<int> walk_order(const PlanarDiagram& d) {
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(d.edge_count()), 0);
  auto run = [&](int start) {
    for (int e = start; !seen[static_cast<std::size_t>(e)]; e = d.next_edge(e)) {
      seen[static_cast<std::size_t>(e)] = 1;
      order.push_back(e);
    }
  };
  if (d.edge_count()) run(d.base_edge());
  for (int e = 0; e < d.edge_count(); ++e) run(e);
  return order;
}

}  // namespace

std::vector<int> pd_labels(const PlanarDiagram& d) {
  std::vector<int> label(static_cast<std::size_t>(d.edge_count()), 0);
  auto order = walk_order(d);
  for (std::size_t k = 0; k < order.size(); ++k) label[static_cast<std::size_t>(order[k])] = static_cast<int>(k) + 1;
  return label;
}

std::string write_pd(const PlanarDiagram& d) {
  const std::vector<int> label = pd_labels(d);
  std::ostringstream os;
  for (const auto& x : d.crossings()) {
    os << (x.classical() ? (x.sign > 0 ? "Xp(" : "Xm(") : "V(");
    for (int k = 0; k < 4; ++k) os << (k ? "," : "") << label[static_cast<std::size_t>(x.edge[static_cast<std::size_t>(k)])];
    os << ")\n";
  }
  for (int k = 0; k < d.free_loops(); ++k) os << "loop\n";
  if (d.edge_count()) os << "base " << label[static_cast<std::size_t>(d.base_edge())] << "\n";
  for (const auto& [name, c] : d.region_names()) os << "region " << name << " " << c.crossing + 1 << ":" << c.corner << "\n";
  return os.str();
}

PlanarDiagram parse_pd(const std::string& text) {
  std::map<long, int> ignored;
  return parse_pd(text, ignored);
}

PlanarDiagram parse_pd(const std::string& text, std::map<long, int>& edge_of_label) {
  static const std::regex rec(R"(^(Xp|Xm|V)\((\d+),(\d+),(\d+),(\d+)\)$)");
  static const std::regex base_re(R"(^base\s+(\d+)$)");
  static const std::regex region_re(R"(^region\s+(\S+)\s+(\d+):([0-3])$)");
  NetBuilder b;
  std::map<long, int> label;
  std::map<long, int> uses;
  std::optional<long> base;
  std::vector<std::pair<std::string, Corner>> regions;
  int loops = 0;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line.erase(std::remove_if(line.begin(), line.end(), [](char ch) { return ch == '\r'; }), line.end());
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    std::smatch m;
    if (std::regex_match(line, m, rec)) {
      std::array<int, 4> ls{};
      for (int k = 0; k < 4; ++k) {
        long v = std::stol(m[k + 2].str());
        if (v <= 0) throw ParseError("line " + std::to_string(lineno) + ": edge labels must be positive");
        auto [it, fresh] = label.try_emplace(v, 0);
        if (fresh) it->second = b.fresh_label();
        ++uses[v];
        ls[static_cast<std::size_t>(k)] = it->second;
      }
      if (m[1] == "V")
        b.add_crossing(CrossingKind::Virtual, ls);
      else
        b.add_oriented(m[1] == "Xp" ? 1 : -1, ls);
    } else if (std::regex_match(line, m, base_re)) {
      base = std::stol(m[1].str());
    } else if (std::regex_match(line, m, region_re)) {
      regions.emplace_back(m[1].str(), Corner{std::stoi(m[2].str()) - 1, std::stoi(m[3].str())});
    } else if (line == "loop") {
      ++loops;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unrecognized record '" + line + "'");
    }
  }
  for (const auto& [v, k] : uses)
    if (k != 2) throw ValidationError("edge label " + std::to_string(v) + " appears " + std::to_string(k) + " times (expected 2)");
  for (const auto& [name, c] : regions) {
    if (c.crossing < 0 || c.crossing >= b.crossing_count())
      throw ValidationError("region " + name + " names crossing " + std::to_string(c.crossing + 1) + " which does not exist");
    b.name_region(name, c);
  }
  PlanarDiagram d = b.build();
  if (loops) {
    if (d.crossing_count()) throw ValidationError("diagram is not connected");
    d = PlanarDiagram::unknot();
    if (loops > 1) throw ValidationError("diagram is not connected");
  }
  if (!d.connected()) throw ValidationError("diagram is not connected");
  edge_of_label.clear();
  if (!loops)
    for (const auto& [v, l] : label) edge_of_label[v] = b.edge_of_label(l);
  if (base) {
    auto it = label.find(*base);
    if (it == label.end()) throw ValidationError("base edge " + std::to_string(*base) + " does not exist");
    d.set_base_edge(b.edge_of_label(it->second));
  }
  return d;
}

}  // namespace gordian
