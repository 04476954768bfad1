#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "gordian/diagram.hpp"
#include "gordian/laurent.hpp"

namespace gordian {

enum class Split { A, B };

struct BracketState {
  std::map<int, Split> choice;
  int a_count = 0;
  int b_count = 0;
  int loops = 1;
};

// Labels of the 2n arcs; arc k is entered after pass k.
struct ArcLabeling {
  std::vector<int> labels;
};

struct BracketOptions {
  int max_crossings = 24;
  unsigned threads = 0;  // 0: hardware concurrency
};

class BruteforceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// mu = -A^2 - A^-2
LaurentPoly loop_value();

BracketState resolve_state(const GaussCode& g, const std::map<int, Split>& s);
LaurentPoly bracket(const GaussCode& g, const BracketOptions& opt = {});
// Component-agnostic: links and free loops are allowed.
LaurentPoly bracket(const PlanarDiagram& d, const BracketOptions& opt = {});

int writhe(const GaussCode& g);
int writhe(const PlanarDiagram& d);

// (-A^3)^-w * bracket
LaurentPoly f_normalize(const LaurentPoly& bracket, int writhe);
LaurentPoly f_polynomial(const GaussCode& g, const BracketOptions& opt = {});
LaurentPoly f_polynomial(const PlanarDiagram& d, const BracketOptions& opt = {});

ArcLabeling arc_labels(const GaussCode& g);
int crossing_weight(const GaussCode& g, const ArcLabeling& labeling, int id);
LaurentPoly affine_index(const GaussCode& g);

}  // namespace gordian
