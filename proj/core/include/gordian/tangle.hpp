#pragma once

#include <array>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/invariants.hpp"
#include "gordian/laurent.hpp"

namespace gordian {

enum class Tag { WT = 0, WB = 1, ET = 2, EB = 3 };
enum class Closure { D, N, X };

const char* closure_name(Closure c);

struct TangleCrossing {
  CrossingKind kind;
  std::array<int, 4> label;  // ccw; classical under strand on slots 0 and 2
};

// (2,2)-tangle as an unoriented crossing table; each label meets exactly two
// ends among crossing ports and boundary points.
class TangleDiagram {
 public:
  TangleDiagram(std::vector<TangleCrossing> crossings, std::array<int, 4> ends);

  const std::vector<TangleCrossing>& crossings() const { return crossings_; }
  int end(Tag t) const { return ends_[static_cast<std::size_t>(t)]; }
  int classical_count() const;

  // Copies the tangle into b; returns the builder labels of WT, WB, ET, EB.
  std::array<int, 4> emit(NetBuilder& b) const;

 private:
  std::vector<TangleCrossing> crossings_;
  std::array<int, 4> ends_;
  int labels_ = 0;
};

struct BracketVector {
  LaurentPoly d, n, x;
  const LaurentPoly& operator[](int i) const { return i == 0 ? d : i == 1 ? n : x; }
  friend bool operator==(const BracketVector&, const BracketVector&) = default;
};

using PolyMatrix = std::array<std::array<LaurentPoly, 3>, 3>;
using RatMatrix = std::vector<std::vector<RationalFn>>;

// Matrix with a shared denominator: entries num[i][j] / den.
struct ScaledMatrix {
  PolyMatrix num;
  LaurentPoly den;
};

class BMatrixMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

PlanarDiagram close_diagram(const TangleDiagram& t, Closure mode);
GaussCode close(const TangleDiagram& t, Closure mode);
BracketVector bracket_vector(const TangleDiagram& t, const BracketOptions& opt = {});

// Cuts edges e1 and e2 of a closed diagram. The tail-side ends of e1 and e2
// become WT and WB, the head-side ends ET and EB.
TangleDiagram tangle_from_cuts(const PlanarDiagram& d, int e1, int e2);

// N(T+S): T's east ends glued to S's west ends, then the N closure.
PlanarDiagram sum_closure(const TangleDiagram& t, const TangleDiagram& s);

// (mu - 1)(mu + 2), the common denominator of the Gram inverse
LaurentPoly kappa_inverse();
// Numerators of A over kappa_inverse(): mu + 1 on the diagonal, -1 elsewhere.
PolyMatrix matrix_A_numerators();
RatMatrix matrix_A();
// v * A * w^T reduced exactly.
LaurentPoly bilinear(const BracketVector& v, const BracketVector& w);
LaurentPoly closure_sum_bracket(const TangleDiagram& t, const TangleDiagram& s, const BracketOptions& opt = {});

// b_ij = bracket of d_link(3(i-1)+j). With strict set, any disagreement with
// listed_matrix_B() throws BMatrixMismatch.
PolyMatrix matrix_B(const BracketOptions& opt = {}, bool strict = false);
PolyMatrix listed_matrix_B();
ScaledMatrix matrix_BA(const PolyMatrix& b);
MaxPlusMatrix ba_max(const ScaledMatrix& ba);
BracketVector apply(const ScaledMatrix& m, const BracketVector& v);

BracketVector sn_bracket_vector(int n, const BracketOptions& opt = {});
LaurentPoly vkn_bracket(int n, const BracketOptions& opt = {});
std::array<MaxPlusDeg, 3> maxdeg_vector(const BracketVector& v);
std::array<MaxPlusDeg, 3> degree_vector(int n);

}  // namespace gordian
