#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "biatsp/types.hpp"

namespace biatsp {

// Diagonal marker: self-loops are forbidden, so the diagonal holds a weight
// larger than any feasible tour and is never summed.
inline constexpr std::int64_t kDiagonalSentinel = 1'000'000'000'000'000LL;

class WeightMatrix {
public:
    WeightMatrix() = default;
    explicit WeightMatrix(int n, std::int64_t fill = 0)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, fill) {}

    int n() const { return n_; }
    bool empty() const { return cells_.empty(); }

    std::int64_t operator()(int from, int to) const {
        return cells_[static_cast<std::size_t>(from) * n_ + to];
    }
    std::int64_t& operator()(int from, int to) {
        return cells_[static_cast<std::size_t>(from) * n_ + to];
    }

    std::int64_t max_off_diagonal() const;
    std::int64_t min_off_diagonal() const;

    friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::int64_t> cells_;
};

// Complete directed graph with one or two positive integer weight matrices.
// Single-matrix instances only occur as carriers parsed from TSPLIB files,
// waiting for a second criterion to be generated.
struct Instance {
    int n = 0;
    std::string name;
    WeightMatrix w1;
    WeightMatrix w2;  // empty when the instance carries a single criterion

    bool has_second_criterion() const { return !w2.empty(); }
    const WeightMatrix& weights(int criterion) const { return criterion == 1 ? w1 : w2; }

    // Throws std::invalid_argument when the invariants do not hold.
    void check() const;
};

// Sum of arc weights along the tour, per criterion.
ObjectiveVector evaluate(const Instance& inst, const Tour& tour);

// Off-diagonal weights drawn independently and uniformly from [lo, hi].
Instance generate_random(int n, std::int64_t lo1, std::int64_t hi1, std::int64_t lo2,
                         std::int64_t hi2, std::uint64_t seed);

// w1 uniform on {1,2} and w2 = 3 - w1, so the criteria trade off one for one
// and every tour lands on the line d1 + d2 = 3n.
Instance generate_contradicting(int n, std::uint64_t seed);

// Copies w1 from a single-criterion carrier and draws w2 uniformly from
// [1, max off-diagonal weight of w1].
Instance generate_ftv_derived(const Instance& base, std::uint64_t seed);

// TSPLIB ATSP reader, EXPLICIT / FULL_MATRIX only. The result carries a
// single criterion (w2 unset). Throws input_error naming the offending line.
Instance parse_tsplib(std::istream& in);

}  // namespace biatsp
