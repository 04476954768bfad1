#include "gordian/random.hpp"

#include <algorithm>

namespace gordian {

GaussCode random_gauss(Rng& rng, int crossings) {
  std::vector<int> slots;
  for (int c = 1; c <= crossings; ++c) {
    slots.push_back(c);
    slots.push_back(c);
  }
  std::shuffle(slots.begin(), slots.end(), rng);
  std::bernoulli_distribution coin;
  std::vector<int> sign(static_cast<std::size_t>(crossings + 1)), over_first(static_cast<std::size_t>(crossings + 1));
  for (int c = 1; c <= crossings; ++c) {
    sign[static_cast<std::size_t>(c)] = coin(rng) ? 1 : -1;
    over_first[static_cast<std::size_t>(c)] = coin(rng);
  }
  std::vector<char> met(static_cast<std::size_t>(crossings + 1), 0);
  std::vector<Pass> ps;
  for (int c : slots) {
    bool first = !met[static_cast<std::size_t>(c)];
    met[static_cast<std::size_t>(c)] = 1;
    bool over = first == static_cast<bool>(over_first[static_cast<std::size_t>(c)]);
    ps.push_back({c, over ? Strand::Over : Strand::Under, sign[static_cast<std::size_t>(c)]});
  }
  return GaussCode(std::move(ps));
}

TangleDiagram random_tangle(Rng& rng, int crossings) {
  PlanarDiagram d = to_planar(random_gauss(rng, std::max(1, crossings)));
  std::uniform_int_distribution<int> pick(0, d.edge_count() - 1);
  int e1 = pick(rng), e2 = pick(rng);
  while (e2 == e1) e2 = pick(rng);
  return tangle_from_cuts(d, e1, e2);
}

}  // namespace gordian
