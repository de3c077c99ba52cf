#pragma once

#include <vector>

#include "biatsp/instance.hpp"

namespace biatsp {

// Minimum-cost assignment (Hungarian algorithm with potentials, O(n^3)).
// Returns perm with perm[row] = assigned column. Self-loops carry the
// diagonal sentinel cost, so the optimum is always a derangement.
std::vector<int> solve_assignment(const WeightMatrix& cost);

}  // namespace biatsp
