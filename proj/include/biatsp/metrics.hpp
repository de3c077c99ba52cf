#pragma once

#include <span>

#include "biatsp/dominance.hpp"

namespace biatsp {

// Generational distance: (1/|A|) * sqrt(sum of squared Euclidean distances
// from each member of A to its nearest member of the reference front).
double gd(const Front& approximation, const Front& reference);

// Inverted generational distance: the same with the two sets swapped.
double igd(const Front& approximation, const Front& reference);

struct WilcoxonResult {
    bool conclusive = false;   // false when fewer than 6 non-zero differences remain
    bool significant = false;  // p_value < alpha (two-sided)
    double statistic = 0.0;    // W = min of the signed-rank sums
    double p_value = 1.0;
    int n_used = 0;            // pairs remaining after dropping zero differences
};

// Paired two-sided Wilcoxon signed-rank test. Zero differences are dropped,
// absolute differences get mid-ranks on ties. Exact conditional distribution
// for n < 20, normal approximation with tie-corrected variance otherwise.
WilcoxonResult wilcoxon_signed_rank(std::span<const double> x, std::span<const double> y,
                                    double alpha = 0.05);

}  // namespace biatsp
