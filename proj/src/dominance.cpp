#include "biatsp/dominance.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace biatsp {

namespace {

bool entry_less(const FrontEntry& a, const FrontEntry& b) {
    return a.value < b.value;
}

}  // namespace

bool Front::contains(const ObjectiveVector& v) const {
    return std::any_of(entries.begin(), entries.end(),
                       [&](const FrontEntry& e) { return e.value == v; });
}

void Front::sort_canonical() { std::sort(entries.begin(), entries.end(), entry_less); }

void Front::check() const {
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = 0; j < entries.size(); ++j) {
            if (i == j) continue;
            if (entries[i].value == entries[j].value)
                throw std::invalid_argument("front: duplicate objective vector");
            if (dominates(entries[i].value, entries[j].value))
                throw std::invalid_argument("front: contains a dominated vector");
        }
    }
}

Front pareto_filter(const std::vector<FrontEntry>& points) {
    Front front;
    for (const auto& p : points) {
        bool dominated = false;
        bool duplicate = false;
        for (const auto& kept : front.entries) {
            if (kept.value == p.value) {
                duplicate = true;
                break;
            }
            if (dominates(kept.value, p.value)) {
                dominated = true;
                break;
            }
        }
        if (dominated || duplicate) continue;
        std::erase_if(front.entries,
                      [&](const FrontEntry& kept) { return dominates(p.value, kept.value); });
        front.entries.push_back(p);
    }
    front.sort_canonical();
    return front;
}

RankedPopulation nondominated_sort(const std::vector<std::pair<Tour, ObjectiveVector>>& pop) {
    const std::size_t n = pop.size();
    RankedPopulation out;
    out.members.reserve(n);
    for (const auto& [tour, value] : pop)
        out.members.push_back({tour, value, 0, 0.0});
    if (n == 0) return out;

    std::vector<int> domination_count(n, 0);
    std::vector<std::vector<int>> dominated_by(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dominates(pop[i].second, pop[j].second)) {
                dominated_by[i].push_back(static_cast<int>(j));
                ++domination_count[j];
            } else if (dominates(pop[j].second, pop[i].second)) {
                dominated_by[j].push_back(static_cast<int>(i));
                ++domination_count[i];
            }
        }
    }

    std::vector<int> current;
    for (std::size_t i = 0; i < n; ++i)
        if (domination_count[i] == 0) current.push_back(static_cast<int>(i));

    int rank = 1;
    while (!current.empty()) {
        std::vector<int> next;
        for (int i : current) {
            out.members[i].rank = rank;
            for (int j : dominated_by[i])
                if (--domination_count[j] == 0) next.push_back(j);
        }
        // crowding is level-local
        std::vector<ObjectiveVector> level;
        level.reserve(current.size());
        for (int i : current) level.push_back(out.members[i].value);
        const std::vector<double> crowd = crowding_distances(level);
        for (std::size_t k = 0; k < current.size(); ++k)
            out.members[current[k]].crowding = crowd[k];
        current = std::move(next);
        ++rank;
    }
    return out;
}

std::vector<double> crowding_distances(const std::vector<ObjectiveVector>& level) {
    const std::size_t n = level.size();
    std::vector<double> crowd(n, 0.0);
    if (n == 0) return crowd;
    const double inf = std::numeric_limits<double>::infinity();
    if (n <= 2) {
        std::fill(crowd.begin(), crowd.end(), inf);
        return crowd;
    }

    std::vector<std::size_t> idx(n);
    for (int objective = 0; objective < 2; ++objective) {
        auto component = [&](std::size_t i) {
            return objective == 0 ? level[i].d1 : level[i].d2;
        };
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return component(a) < component(b); });
        crowd[idx.front()] = inf;
        crowd[idx.back()] = inf;
        const std::int64_t range = component(idx.back()) - component(idx.front());
        if (range == 0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k) {
            if (crowd[idx[k]] == inf) continue;
            crowd[idx[k]] +=
                static_cast<double>(component(idx[k + 1]) - component(idx[k - 1])) /
                static_cast<double>(range);
        }
    }
    return crowd;
}

std::int64_t cardinality_bound(const Instance& inst) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (int criterion = 1; criterion <= 2; ++criterion) {
        const WeightMatrix& w = inst.weights(criterion);
        std::int64_t lb = 0, ub = 0;
        for (int u = 0; u < inst.n; ++u) {
            std::int64_t lo = std::numeric_limits<std::int64_t>::max();
            std::int64_t hi = std::numeric_limits<std::int64_t>::min();
            for (int v = 0; v < inst.n; ++v) {
                if (u == v) continue;
                lo = std::min(lo, w(u, v));
                hi = std::max(hi, w(u, v));
            }
            lb += lo;
            ub += hi;
        }
        best = std::min(best, ub - lb + 1);
    }
    return best;
}

}  // namespace biatsp
