#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gordian {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Strand : char { Over = 'O', Under = 'U' };

struct Pass {
  int id;
  Strand strand;
  int sign;  // +1 or -1
  friend bool operator==(const Pass&, const Pass&) = default;
};

// Cyclic word of classical passes along the knot; virtual crossings are implicit.
class GaussCode {
 public:
  GaussCode() = default;
  explicit GaussCode(std::vector<Pass> passes);

  const std::vector<Pass>& passes() const { return passes_; }
  std::size_t size() const { return passes_.size(); }
  bool empty() const { return passes_.empty(); }
  int crossing_count() const { return static_cast<int>(passes_.size() / 2); }
  std::vector<int> crossing_ids() const;
  int sign_of(int id) const;

  std::string str() const;

  friend bool operator==(const GaussCode&, const GaussCode&) = default;

 private:
  std::vector<Pass> passes_;
};

GaussCode parse_gauss(const std::string& text);
// Minimal cyclic rotation with ids renumbered by first appearance.
GaussCode normalize(const GaussCode& g);
// Same knot diagram read against the orientation.
GaussCode reversed(const GaussCode& g);
bool same_diagram(const GaussCode& a, const GaussCode& b);
bool same_diagram_unoriented(const GaussCode& a, const GaussCode& b);

enum class CrossingKind { Classical, Virtual };

// Ports are listed counterclockwise; at a classical crossing slot 0 is the
// incoming under strand, so the under strand runs 0 -> 2 and the over strand
// enters at 3 (sign +1) or at 1 (sign -1).
struct Crossing {
  CrossingKind kind = CrossingKind::Virtual;
  int sign = 0;
  std::array<int, 4> edge{};
  bool classical() const { return kind == CrossingKind::Classical; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct Port {
  int crossing = -1;
  int slot = -1;
  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

struct Edge {
  Port tail, head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Corner k of a crossing lies between slot k and slot k+1.
struct Corner {
  int crossing = -1;
  int corner = -1;
  friend bool operator==(const Corner&, const Corner&) = default;
  friend auto operator<=>(const Corner&, const Corner&) = default;
};

struct Region {
  int id = 0;
  std::vector<Corner> boundary;
};

class PlanarDiagram {
 public:
  // The empty diagram: no crossings and no loops.
  PlanarDiagram() = default;
  static PlanarDiagram unknot();
  // Validates that every port is used by exactly one edge end and that the
  // edge directions agree with the crossing conventions.
  static PlanarDiagram from_parts(std::vector<Crossing> crossings, std::vector<Edge> edges, int free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Crossing& crossing(int i) const { return crossings_.at(static_cast<std::size_t>(i)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  int free_loops() const { return free_loops_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int classical_count() const;
  int virtual_count() const;
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int component_count() const;
  bool connected() const;

  int base_edge() const { return base_; }
  void set_base_edge(int e);

  // Edge leaving the head crossing of e straight through.
  int next_edge(int e) const;
  int prev_edge(int e) const;
  int edge_at(Port p) const { return crossing(p.crossing).edge[static_cast<std::size_t>(p.slot)]; }

  // Named faces, each identified by one of its corners.
  const std::map<std::string, Corner>& region_names() const { return names_; }
  void name_region(const std::string& name, Corner c);

  // Ids for Gauss output: classical crossings numbered 1.. in index order.
  int gauss_id(int crossing) const;
  int crossing_of_gauss_id(int id) const;

  friend bool operator==(const PlanarDiagram&, const PlanarDiagram&) = default;

 private:
  friend PlanarDiagram flip_crossing(const PlanarDiagram& d, int i);

  std::vector<Crossing> crossings_;
  std::vector<Edge> edges_;
  int free_loops_ = 0;
  int base_ = 0;
  std::map<std::string, Corner> names_;
};

// Builds diagrams from unoriented crossing tables glued by labels. Every label
// class must meet exactly two ports (an edge) or none (a closed loop).
// Reserved labels that are never referenced are ignored.
class NetBuilder {
 public:
  int fresh_label();
  // Classical records list ports counterclockwise with the under strand on
  // slots 0 and 2; sign is left open and derived from the orientation.
  int add_crossing(CrossingKind kind, std::array<int, 4> labels);
  // Classical crossing whose listing already fixes the orientation.
  int add_oriented(int sign, std::array<int, 4> labels);
  void join(int a, int b);
  void name_region(const std::string& name, Corner c) { names_[name] = c; }
  // Reserves n consecutive labels and returns the first.
  int reserve(int n);
  int crossing_count() const { return static_cast<int>(raw_.size()); }

  PlanarDiagram build();
  // After build(): the edge carrying a label, or -1 for a closed loop label.
  int edge_of_label(int label);

 private:
  struct Raw {
    CrossingKind kind;
    std::optional<int> sign;
    std::array<int, 4> label;
  };
  int find(int a);

  std::vector<Raw> raw_;
  std::vector<int> parent_;
  std::vector<char> used_;  // labels never referenced are not loops
  std::map<std::string, Corner> names_;
  std::map<int, int> edge_of_root_;
};

std::vector<Region> faces(const PlanarDiagram& d);
// Connected with faces = V + 2.
bool is_planar(const PlanarDiagram& d);
// Index into faces(d) of the face containing the named corner.
int region_of(const PlanarDiagram& d, Corner c);
int region_by_name(const PlanarDiagram& d, const std::string& name);

PlanarDiagram to_planar(const GaussCode& g);
GaussCode to_gauss(const PlanarDiagram& d);
PlanarDiagram flip_crossing(const PlanarDiagram& d, int i);

PlanarDiagram parse_pd(const std::string& text);
// Also reports which edge each label of the text became.
PlanarDiagram parse_pd(const std::string& text, std::map<long, int>& edge_of_label);
std::string write_pd(const PlanarDiagram& d);
// The 1-based label write_pd gives each edge: walk order from the base edge.
std::vector<int> pd_labels(const PlanarDiagram& d);

}  // namespace gordian
