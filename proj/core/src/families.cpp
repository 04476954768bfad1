#include "gordian/families.hpp"

#include <map>

namespace gordian {

namespace {

constexpr CrossingKind XC = CrossingKind::Classical;
constexpr CrossingKind VC = CrossingKind::Virtual;

struct Fragment {
  std::vector<TangleCrossing> crossings;
  std::map<std::string, int> ends;  // e0..e3 east, w0..w3 west, top to bottom
};

// Left piece of VK_n: the crossings of block c_0 (this is also tangle T).
const Fragment& vk_left() {
  static const Fragment f{
      {{XC, {1, 2, 3, 4}}, {VC, {3, 5, 6, 4}}, {XC, {6, 5, 7, 8}}, {VC, {7, 9, 10, 8}}},
      {{"e0", 1}, {"e1", 10}, {"e2", 9}, {"e3", 2}}};
  return f;
}

// One block c_i of VK_n; the braid crossings are X(22,21,23,24), X(26,25,27,13).
const Fragment& vk_block() {
  static const Fragment f{{{VC, {1, 2, 3, 4}},
                           {VC, {5, 6, 2, 7}},
                           {XC, {8, 9, 5, 7}},
                           {XC, {10, 11, 8, 1}},
                           {VC, {3, 12, 13, 14}},
                           {VC, {15, 16, 12, 6}},
                           {XC, {17, 18, 15, 9}},
                           {XC, {19, 20, 17, 11}},
                           {VC, {18, 21, 22, 16}},
                           {XC, {22, 21, 23, 24}},
                           {VC, {23, 25, 26, 24}},
                           {XC, {26, 25, 27, 13}}},
                          {{"e0", 27}, {"e1", 20}, {"e2", 19}, {"e3", 28}, {"w0", 14}, {"w1", 4}, {"w2", 10}, {"w3", 28}}};
  return f;
}

const Fragment& k_clasp() {
  static const Fragment f{{{XC, {1, 2, 3, 4}}, {XC, {4, 3, 5, 6}}}, {{"e0", 1}, {"e1", 6}, {"e2", 5}, {"e3", 2}}};
  return f;
}

// One block of K_m; face R_i sits at corner 3 of crossing 1.
const Fragment& k_block() {
  static const Fragment f{{{XC, {1, 2, 3, 4}},
                           {XC, {5, 6, 2, 7}},
                           {XC, {7, 1, 8, 9}},
                           {XC, {4, 10, 11, 8}},
                           {XC, {10, 3, 12, 13}},
                           {XC, {14, 15, 5, 16}},
                           {XC, {16, 9, 17, 18}},
                           {XC, {11, 19, 18, 17}},
                           {XC, {19, 13, 20, 21}}},
                          {{"e0", 14}, {"e1", 21}, {"e2", 20}, {"e3", 22}, {"w0", 15}, {"w1", 6}, {"w2", 12}, {"w3", 22}}};
  return f;
}

constexpr int kRegionCrossing = 1;
constexpr int kRegionCorner = 3;
constexpr int kArcEntryLabel = 22;
constexpr int kArcExitLabel = 26;

int max_label(const Fragment& f) {
  int m = 0;
  for (const auto& c : f.crossings)
    for (int l : c.label) m = std::max(m, l);
  for (const auto& [k, l] : f.ends) m = std::max(m, l);
  return m;
}

struct Placed {
  int base;           // builder label of fragment label 0
  int first_crossing; // builder index of the fragment's first crossing
  std::array<int, 4> east{}, west{};
  int label(int l) const { return base + l; }
};

Placed place(NetBuilder& b, const Fragment& f) {
  Placed p;
  p.base = b.reserve(max_label(f) + 1);
  p.first_crossing = b.crossing_count();
  for (const auto& c : f.crossings) {
    std::array<int, 4> ls{};
    for (int k = 0; k < 4; ++k) ls[static_cast<std::size_t>(k)] = p.label(c.label[static_cast<std::size_t>(k)]);
    b.add_crossing(c.kind, ls);
  }
  p.east.fill(-1);
  p.west.fill(-1);
  for (const auto& [name, l] : f.ends) {
    int k = name[1] - '0';
    (name[0] == 'e' ? p.east : p.west)[static_cast<std::size_t>(k)] = p.label(l);
  }
  return p;
}

void glue(NetBuilder& b, const Placed& left, const Placed& right) {
  for (int k = 0; k < 4; ++k) b.join(left.east[static_cast<std::size_t>(k)], right.west[static_cast<std::size_t>(k)]);
}

void close_east(NetBuilder& b, const Placed& last) {
  b.join(last.east[0], last.east[3]);
  b.join(last.east[1], last.east[2]);
}

struct VkBuild {
  NetBuilder b;
  std::vector<Placed> blocks;
};

void build_vk(VkBuild& v, int n) {
  Placed prev = place(v.b, vk_left());
  for (int i = 0; i < n; ++i) {
    Placed blk = place(v.b, vk_block());
    glue(v.b, prev, blk);
    v.blocks.push_back(blk);
    prev = blk;
  }
  close_east(v.b, prev);
}

TangleDiagram to_tangle(const std::vector<const Fragment*>& chain, bool close_last,
                        const std::array<std::string, 4>& tag_end) {
  // Concatenate fragments into one label space.
  std::vector<TangleCrossing> crossings;
  std::vector<int> parent;
  auto fresh = [&] {
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(parent.size()) - 1;
  };
  auto find = [&](int a) {
    while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
    return a;
  };
  auto join = [&](int a, int c) {
    a = find(a);
    c = find(c);
    if (a != c) parent[static_cast<std::size_t>(a)] = c;
  };
  std::map<std::string, int> first_ends;
  std::array<int, 4> prev_east{-1, -1, -1, -1};
  for (std::size_t fi = 0; fi < chain.size(); ++fi) {
    const Fragment& f = *chain[fi];
    int base = static_cast<int>(parent.size());
    for (int l = 0; l <= max_label(f); ++l) fresh();
    for (const auto& c : f.crossings) {
      TangleCrossing tc = c;
      for (int& l : tc.label) l += base;
      crossings.push_back(tc);
    }
    std::array<int, 4> east{-1, -1, -1, -1};
    for (const auto& [name, l] : f.ends) {
      int k = name[1] - '0';
      if (name[0] == 'e') {
        east[static_cast<std::size_t>(k)] = base + l;
      } else if (fi > 0) {
        join(prev_east[static_cast<std::size_t>(k)], base + l);
      }
      if (fi == 0) first_ends[name] = base + l;
    }
    prev_east = east;
  }
  if (close_last) {
    join(prev_east[0], prev_east[3]);
    join(prev_east[1], prev_east[2]);
  }
  std::map<int, int> compact;
  auto relabel = [&](int l) { return compact.try_emplace(find(l), static_cast<int>(compact.size())).first->second; };
  for (auto& c : crossings)
    for (int& l : c.label) l = relabel(l);
  std::array<int, 4> ends{};
  for (int t = 0; t < 4; ++t) ends[static_cast<std::size_t>(t)] = relabel(first_ends.at(tag_end[static_cast<std::size_t>(t)]));
  return TangleDiagram(std::move(crossings), ends);
}

}  // namespace

FamilyId parse_family(const std::string& name, int param) {
  if (name == "km") return {FamilyKind::KM, param};
  if (name == "vkn") return {FamilyKind::VKN, param};
  if (name == "tangle-t") return {FamilyKind::TANGLE_T, 0};
  if (name == "tangle-s") return {FamilyKind::TANGLE_S, param};
  if (name.size() == 2 && name[0] == 'd' && name[1] >= '1' && name[1] <= '9') return {FamilyKind::D_LINK, name[1] - '0'};
  throw ValidationError("unknown family '" + name + "'");
}

PlanarDiagram km(int m) {
  if (m < 0) throw ValidationError("km needs m >= 0");
  if (m == 0) return PlanarDiagram::unknot();
  NetBuilder b;
  Placed prev = place(b, k_clasp());
  for (int i = 1; i <= m; ++i) {
    Placed blk = place(b, k_block());
    glue(b, prev, blk);
    b.name_region("R" + std::to_string(i), {blk.first_crossing + kRegionCrossing, kRegionCorner});
    prev = blk;
  }
  close_east(b, prev);
  return b.build();
}

PlanarDiagram vkn_planar(int n) {
  if (n < 0) throw ValidationError("vkn needs n >= 0");
  VkBuild v;
  build_vk(v, n);
  return v.b.build();
}

GaussCode vkn(int n) { return to_gauss(vkn_planar(n)); }

ArcSpec vkn_block_arc(int n, int j) {
  if (n < 1 || j < 1 || j > n) throw ValidationError("block c_j needs 1 <= j <= n");
  VkBuild v;
  build_vk(v, n);
  v.b.build();
  const Placed& blk = v.blocks[static_cast<std::size_t>(j - 1)];
  return {v.b.edge_of_label(blk.label(kArcEntryLabel)), v.b.edge_of_label(blk.label(kArcExitLabel))};
}

TangleDiagram tangle_T() { return to_tangle({&vk_left()}, false, {"e0", "e3", "e1", "e2"}); }

TangleDiagram tangle_S(int n) {
  if (n < 1) throw ValidationError("tangle_S needs n >= 1");
  std::vector<const Fragment*> chain(static_cast<std::size_t>(n), &vk_block());
  return to_tangle(chain, true, {"w1", "w2", "w0", "w3"});
}

PlanarDiagram d_link(int j) {
  if (j < 1 || j > 9) throw ValidationError("d_link index must be in 1..9");
  const int west = (j - 1) / 3, east = (j - 1) % 3;
  NetBuilder b;
  Placed blk = place(b, vk_block());
  const auto& w = blk.west;
  const auto& e = blk.east;
  switch (west) {
    case 0:
      b.join(w[0], w[3]);
      b.join(w[1], w[2]);
      break;
    case 1:
      b.join(w[0], w[1]);
      b.join(w[2], w[3]);
      break;
    default: {
      int l = b.reserve(4);
      b.add_crossing(VC, {l, l + 1, l + 2, l + 3});
      b.join(l, w[2]);
      b.join(l + 1, w[1]);
      b.join(l + 2, w[0]);
      b.join(l + 3, w[3]);
    }
  }
  switch (east) {
    case 0:
      b.join(e[0], e[3]);
      b.join(e[1], e[2]);
      break;
    case 1:
      b.join(e[0], e[1]);
      b.join(e[2], e[3]);
      break;
    default: {
      int l = b.reserve(4);
      b.add_crossing(VC, {l, l + 1, l + 2, l + 3});
      for (int k = 0; k < 4; ++k) b.join(l + k, e[static_cast<std::size_t>(k)]);
    }
  }
  return b.build();
}

}  // namespace gordian
