#pragma once

#include <random>

#include "gordian/diagram.hpp"
#include "gordian/tangle.hpp"

namespace gordian {

using Rng = std::mt19937_64;

// Uniform chord arrangement with random over/under choice and signs.
GaussCode random_gauss(Rng& rng, int crossings);
// A planarized random code cut open at two random edges.
TangleDiagram random_tangle(Rng& rng, int crossings);

}  // namespace gordian
