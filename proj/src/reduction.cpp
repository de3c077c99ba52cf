#include "biatsp/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace biatsp {

namespace {

void check_criteria(int more_important, int less_important) {
    const bool ok = (more_important == 1 && less_important == 2) ||
                    (more_important == 2 && less_important == 1);
    if (!ok) throw std::invalid_argument("quantum: criteria must be {1,2} with i != j");
}

void check_theta(const Rational& theta) {
    if (!(Rational(0) < theta && theta < Rational(1)))
        throw std::invalid_argument("quantum: theta must lie strictly inside (0, 1)");
}

}  // namespace

Quantum Quantum::from_theta(int more_important, int less_important, Rational theta) {
    check_criteria(more_important, less_important);
    check_theta(theta);
    return Quantum{more_important, less_important, theta, std::nullopt};
}

Quantum Quantum::from_weights(int more_important, int less_important, std::int64_t w_more,
                              std::int64_t w_less) {
    check_criteria(more_important, less_important);
    if (w_more <= 0 || w_less <= 0)
        throw std::invalid_argument("quantum: weights must be positive");
    Quantum q;
    q.more_important = more_important;
    q.less_important = less_important;
    q.theta = Rational(w_less, w_more + w_less);
    q.weights = std::make_pair(w_more, w_less);
    return q;
}

QuantumPair::QuantumPair(Rational t12, Rational t21) : theta_12(t12), theta_21(t21) {
    check_theta(theta_12);
    check_theta(theta_21);
    if (!(theta_12 + theta_21 < Rational(1)))
        throw std::invalid_argument(
            "quantum pair: consistency requires theta_12 + theta_21 < 1");
}

LineModel::LineModel(Rational a, Rational k, int p) : intercept(a), slope(k), lines(p) {
    if (!(Rational(0) < intercept) || !(Rational(0) < slope))
        throw std::invalid_argument("line model: intercept and slope must be positive");
    if (lines < 1) throw std::invalid_argument("line model: need at least one line");
}

RationalPoint transform_single(const ObjectiveVector& v, const Quantum& q) {
    const Rational one_minus = Rational(1) - q.theta;
    if (q.more_important == 1) {
        // component 2 is recombined, component 1 kept
        return {Rational(v.d1), q.theta * Rational(v.d1) + one_minus * Rational(v.d2)};
    }
    return {q.theta * Rational(v.d2) + one_minus * Rational(v.d1), Rational(v.d2)};
}

RationalPoint transform_double(const ObjectiveVector& v, const QuantumPair& qp) {
    const Rational d1(v.d1), d2(v.d2);
    return {(Rational(1) - qp.theta_21) * d1 + qp.theta_21 * d2,
            qp.theta_12 * d1 + (Rational(1) - qp.theta_12) * d2};
}

namespace {

bool rational_dominates(const RationalPoint& a, const RationalPoint& b) {
    return a.x <= b.x && a.y <= b.y && (a.x < b.x || a.y < b.y);
}

// Indices whose transformed image is non-dominated. Both transforms are
// injective (their 2x2 matrices have positive determinant), so no duplicate
// collapsing can occur here.
template <class TransformFn>
Front reduce_with(const Front& front, TransformFn&& transform) {
    std::vector<RationalPoint> image;
    image.reserve(front.size());
    for (const auto& e : front.entries) image.push_back(transform(e.value));

    Front out;
    for (std::size_t i = 0; i < image.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < image.size() && !dominated; ++j)
            dominated = j != i && rational_dominates(image[j], image[i]);
        if (!dominated) out.entries.push_back(front.entries[i]);
    }
    out.sort_canonical();
    return out;
}

}  // namespace

Front reduce_single(const Front& front, const Quantum& q) {
    return reduce_with(front, [&](const ObjectiveVector& v) { return transform_single(v, q); });
}

Front reduce_double(const Front& front, const QuantumPair& qp) {
    return reduce_with(front, [&](const ObjectiveVector& v) { return transform_double(v, qp); });
}

namespace {

bool collapse_condition(const LineModel& line, const Quantum& q) {
    const Rational k = line.slope;
    if (q.more_important == 1) return q.theta >= k / (k + Rational(1));
    return q.theta >= Rational(1) / (k + Rational(1));
}

LinePrediction collapsed(const LineModel& line) {
    return line.lines == 1 ? LinePrediction::kSingleton : LinePrediction::kAtMostP;
}

}  // namespace

LinePrediction predict_line_reduction(const LineModel& line, const Quantum& q) {
    return collapse_condition(line, q) ? collapsed(line) : LinePrediction::kUnchanged;
}

LinePrediction predict_line_reduction(const LineModel& line, const QuantumPair& qp) {
    const Quantum q12 = Quantum::from_theta(1, 2, qp.theta_12);
    const Quantum q21 = Quantum::from_theta(2, 1, qp.theta_21);
    if (collapse_condition(line, q12) || collapse_condition(line, q21)) return collapsed(line);
    return LinePrediction::kUnchanged;
}

bool guaranteed_exclusion(const Front& front, const Quantum& q) {
    // Written for "first criterion more important"; the opposite statement is
    // the same test with components swapped.
    const bool swap = q.more_important == 2;
    const Rational lhs_scale = q.theta;
    const Rational rhs_scale = Rational(1) - q.theta;
    for (const auto& a : front.entries) {    // candidate C'
        for (const auto& b : front.entries) {  // candidate C''
            const std::int64_t a1 = swap ? a.value.d2 : a.value.d1;
            const std::int64_t a2 = swap ? a.value.d1 : a.value.d2;
            const std::int64_t b1 = swap ? b.value.d2 : b.value.d1;
            const std::int64_t b2 = swap ? b.value.d1 : b.value.d2;
            if (!(b2 > a2)) continue;
            // (a1 - b1) / (b2 - a2) >= (1-theta)/theta, cross-multiplied with
            // the positive denominators
            if (lhs_scale * Rational(a1 - b1) >= rhs_scale * Rational(b2 - a2)) return true;
        }
    }
    return false;
}

double exclusion_percentage(const Front& before, const Front& after) {
    if (before.empty()) throw std::invalid_argument("exclusion_percentage: empty base front");
    for (const auto& e : after.entries)
        if (!before.contains(e.value))
            throw std::invalid_argument(
                "exclusion_percentage: reduced front is not a subset of the base front");
    return 100.0 * static_cast<double>(before.size() - after.size()) /
           static_cast<double>(before.size());
}

std::vector<SweepRow> theta_sweep(const Front& front, const std::vector<Rational>& grid) {
    for (const Rational& t : grid) check_theta(t);
    std::vector<SweepRow> rows;

    auto add_row = [&](std::string scenario, std::optional<Rational> t12,
                       std::optional<Rational> t21, const Front& reduced) {
        rows.push_back({std::move(scenario), t12, t21, front.size(), reduced.size(),
                        exclusion_percentage(front, reduced)});
    };

    for (const Rational& t : grid)
        add_row("12", t, std::nullopt, reduce_single(front, Quantum::from_theta(1, 2, t)));
    for (const Rational& t : grid)
        add_row("21", std::nullopt, t, reduce_single(front, Quantum::from_theta(2, 1, t)));
    for (const Rational& t12 : grid) {
        for (const Rational& t21 : grid) {
            if (!(t12 + t21 < Rational(1))) continue;
            add_row("pair", t12, t21, reduce_double(front, QuantumPair(t12, t21)));
        }
    }
    return rows;
}

}  // namespace biatsp
