#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "biatsp/instance.hpp"
#include "biatsp/types.hpp"

namespace biatsp {

// Pareto relation: a <= b componentwise and a != b (minimization).
inline bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    return a.d1 <= b.d1 && a.d2 <= b.d2 && (a.d1 < b.d1 || a.d2 < b.d2);
}

struct FrontEntry {
    ObjectiveVector value;
    std::optional<Tour> tour;
};

// Non-dominated set of distinct objective vectors, each optionally carrying
// one representative tour. Entries are kept sorted by (d1, d2) so that equal
// fronts serialize identically.
struct Front {
    std::vector<FrontEntry> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }

    std::vector<ObjectiveVector> vectors() const {
        std::vector<ObjectiveVector> out;
        out.reserve(entries.size());
        for (const auto& e : entries) out.push_back(e.value);
        return out;
    }

    bool contains(const ObjectiveVector& v) const;
    void sort_canonical();

    // Throws std::invalid_argument if entries are not distinct and mutually
    // non-dominated.
    void check() const;
};

// Keeps the non-dominated distinct vectors; equal vectors collapse to the
// first payload seen. Result is in canonical order.
Front pareto_filter(const std::vector<FrontEntry>& points);

struct RankedMember {
    Tour tour;
    ObjectiveVector value;
    int rank = 0;          // 1 is best
    double crowding = 0.0;  // infinity at per-objective extremes of a level
};

struct RankedPopulation {
    std::vector<RankedMember> members;
};

// Fast non-dominated sort (domination counts + adjacency lists, O(mN^2))
// with crowding distances filled per level.
RankedPopulation nondominated_sort(const std::vector<std::pair<Tour, ObjectiveVector>>& pop);

// Crowding distances of one non-domination level: per objective, boundary
// members get infinity and interior members accumulate the normalized gap
// between their neighbours; a zero objective range contributes nothing.
std::vector<double> crowding_distances(const std::vector<ObjectiveVector>& level);

// Upper bound on the Pareto-set size: per criterion, the count of values an
// objective can take is at most UB - LB + 1 for integer weights, with bounds
// from per-vertex cheapest/costliest outgoing arcs; the answer is the
// smaller of the two counts.
std::int64_t cardinality_bound(const Instance& inst);

// (rank asc, crowding desc) preference used by selection.
inline bool ranked_better(const RankedMember& a, const RankedMember& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.crowding > b.crowding;
}

}  // namespace biatsp
