#pragma once

#include "biatsp/dominance.hpp"
#include "biatsp/instance.hpp"

namespace biatsp {

inline constexpr int kEnumerationLimit = 13;
inline constexpr int kDpLimit = 16;

// Exact Pareto front by walking all (n-1)! circuits with vertex 0 fixed as
// the start. Representative per vector: the lexicographically smallest
// successor array among the tours that hit it. Throws guard_error when
// inst.n exceeds the limit.
Front enumerate_pareto(const Instance& inst, int limit = kEnumerationLimit);

// Exact Pareto front by dynamic programming over (visited set, last vertex)
// states, keeping the non-dominated label set per state. Independent of the
// enumeration path; the two must agree wherever both run.
Front dp_pareto(const Instance& inst);

}  // namespace biatsp
