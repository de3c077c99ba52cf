#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "biatsp/dominance.hpp"
#include "biatsp/rational.hpp"

namespace biatsp {

// One relative-importance statement: criterion `more_important` outweighs
// criterion `less_important` with coefficient theta in (0, 1). theta is the
// normalized willingness to trade: theta = w_less / (w_more + w_less).
struct Quantum {
    int more_important = 1;
    int less_important = 2;
    Rational theta;
    std::optional<std::pair<std::int64_t, std::int64_t>> weights;  // (w_more, w_less)

    static Quantum from_theta(int more_important, int less_important, Rational theta);
    static Quantum from_weights(int more_important, int less_important, std::int64_t w_more,
                                std::int64_t w_less);
};

// Two opposing statements at once. Consistency requires theta_12 + theta_21 < 1.
struct QuantumPair {
    Rational theta_12;  // first criterion more important than the second
    Rational theta_21;  // and vice versa

    QuantumPair(Rational t12, Rational t21);
};

// Front known to lie on p parallel lines y2 = a_i - k*y1 with common slope.
struct LineModel {
    Rational intercept;  // a (the smallest a_i when p > 1)
    Rational slope;      // k > 0
    int lines = 1;       // p

    LineModel(Rational a, Rational k, int p = 1);
};

struct RationalPoint {
    Rational x;
    Rational y;

    friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Recombined criterion: the less important component j becomes
// theta*v_i + (1-theta)*v_j; the more important one is untouched.
RationalPoint transform_single(const ObjectiveVector& v, const Quantum& q);

// Two statements recombine both components:
// new d1 = (1-theta_21)*d1 + theta_21*d2, new d2 = theta_12*d1 + (1-theta_12)*d2.
RationalPoint transform_double(const ObjectiveVector& v, const QuantumPair& qp);

// Pareto filter in the transformed space; survivors keep their original
// entries. Output vectors are always a subset of the input vectors.
Front reduce_single(const Front& front, const Quantum& q);
Front reduce_double(const Front& front, const QuantumPair& qp);

enum class LinePrediction { kSingleton, kUnchanged, kAtMostP };

// Threshold tests for fronts on lines of slope -k: a 1>2 statement collapses
// the front iff theta >= k/(k+1), a 2>1 statement iff theta >= 1/(k+1); for
// p > 1 parallel lines the collapse is to at most p points.
LinePrediction predict_line_reduction(const LineModel& line, const Quantum& q);
LinePrediction predict_line_reduction(const LineModel& line, const QuantumPair& qp);

// True if some ordered pair of front entries certifies that the reduction
// removes at least one element: (d1' - d1'') / (d2'' - d2') >= (1-theta)/theta
// with d2'' > d2', indices swapped when the second criterion is the more
// important one.
bool guaranteed_exclusion(const Front& front, const Quantum& q);

// 100 * (|before| - |after|) / |before|; `after` must be a vector subset.
double exclusion_percentage(const Front& before, const Front& after);

struct SweepRow {
    std::string scenario;  // "12", "21" or "pair"
    std::optional<Rational> theta12;
    std::optional<Rational> theta21;
    std::size_t n_before = 0;
    std::size_t n_after = 0;
    double excluded_pct = 0.0;
};

// Exercises both single directions on every grid value and every feasible
// (theta12, theta21) combination with theta12 + theta21 < 1.
std::vector<SweepRow> theta_sweep(const Front& front, const std::vector<Rational>& grid);

}  // namespace biatsp
