#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/families.hpp"
#include "gordian/invariants.hpp"

namespace gordian {

struct RccMove {
  std::string region;  // a name from region_names() or a decimal face index
};

struct ArcShiftMove {
  ArcSpec arc;
};

struct SimplifyMove {};

using MoveDescriptor = std::variant<RccMove, ArcShiftMove, SimplifyMove>;

std::string move_str(const MoveDescriptor& m);

struct InvariantCheck {
  std::string name;
  std::string moved;   // value on the simplified moved diagram
  std::string target;
  bool match = false;
};

struct MoveReport {
  GaussCode before;
  std::vector<MoveDescriptor> moves;
  GaussCode after;       // moved diagram as read off, no cleanup
  GaussCode simplified;  // after, with RI/RII removed
  std::vector<InvariantCheck> checks;  // empty when there is no target
  bool match = false;
};

PlanarDiagram rcc(const PlanarDiagram& d, int region);
PlanarDiagram rcc(const PlanarDiagram& d, const std::string& region);

PlanarDiagram arc_shift(const PlanarDiagram& d, const ArcSpec& arc);

GaussCode simplify(const GaussCode& g);
GaussCode connected_sum(const GaussCode& g1, const GaussCode& g2);

PlanarDiagram apply_move(const PlanarDiagram& d, const MoveDescriptor& move);
// Applies the moves in order, simplifies, and compares f and the affine index
// of the result with the target's.
MoveReport run_moves(const PlanarDiagram& source, const std::vector<MoveDescriptor>& moves,
                     const std::optional<GaussCode>& target, const BracketOptions& opt = {});
MoveReport verify_one_move(const PlanarDiagram& source, const MoveDescriptor& move, const GaussCode& target,
                           const BracketOptions& opt = {});

}  // namespace gordian
