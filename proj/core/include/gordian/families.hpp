#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/tangle.hpp"

namespace gordian {

enum class FamilyKind { KM, VKN, TANGLE_T, TANGLE_S, D_LINK };

struct FamilyId {
  FamilyKind kind;
  int param = 0;
};

// "km", "vkn", "tangle-t", "tangle-s", "d1".."d9"
FamilyId parse_family(const std::string& name, int param);

// Path e_in -> X1 -> e_mid -> X2 -> e_out, named by its first and last edges.
struct ArcSpec {
  int first = -1;
  int last = -1;
};

// K_m with faces R1..Rm named; km(0) is the crossingless unknot.
PlanarDiagram km(int m);

// Blocks c_0..c_n closed on the right; vkn(0) is a two-crossing unknot diagram.
GaussCode vkn(int n);
PlanarDiagram vkn_planar(int n);
// The arc through the first braid crossing of block c_j, j = 1..n.
ArcSpec vkn_block_arc(int n, int j);

TangleDiagram tangle_T();
TangleDiagram tangle_S(int n);

// D_j = (west closure i) + block + (east closure k), j = 3(i-1) + k.
PlanarDiagram d_link(int j);

}  // namespace gordian
