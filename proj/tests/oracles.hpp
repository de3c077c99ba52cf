// Test-only reference implementations. Everything here recomputes results by
// a route independent of the library code it checks: quadratic filters,
// explicit peeling, permutation enumeration, and cone membership by solving
// 2x2 systems in rationals.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "biatsp/dominance.hpp"
#include "biatsp/instance.hpp"
#include "biatsp/rational.hpp"
#include "biatsp/reduction.hpp"
#include "biatsp/rng.hpp"
#include "biatsp/types.hpp"

namespace oracle {

using biatsp::Front;
using biatsp::FrontEntry;
using biatsp::Instance;
using biatsp::ObjectiveVector;
using biatsp::Quantum;
using biatsp::Rational;
using biatsp::Rng;
using biatsp::Tour;

inline bool dom(const ObjectiveVector& a, const ObjectiveVector& b) {
    return (a.d1 <= b.d1 && a.d2 <= b.d2) && !(a.d1 == b.d1 && a.d2 == b.d2);
}

// All-pairs non-dominance filter, duplicates collapsed.
inline std::set<std::pair<std::int64_t, std::int64_t>> brute_front(
    const std::vector<ObjectiveVector>& points) {
    std::set<std::pair<std::int64_t, std::int64_t>> kept;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points)
            if (dom(q, p)) {
                dominated = true;
                break;
            }
        if (!dominated) kept.insert({p.d1, p.d2});
    }
    return kept;
}

inline std::set<std::pair<std::int64_t, std::int64_t>> vector_set(const Front& f) {
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (const auto& e : f.entries) out.insert({e.value.d1, e.value.d2});
    return out;
}

// Ranks by repeated peeling of the brute-force front.
inline std::vector<int> peel_ranks(const std::vector<ObjectiveVector>& points) {
    std::vector<int> rank(points.size(), 0);
    std::vector<char> alive(points.size(), 1);
    int level = 1;
    std::size_t remaining = points.size();
    while (remaining > 0) {
        std::vector<std::size_t> current;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (!alive[i]) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < points.size(); ++j)
                if (alive[j] && dom(points[j], points[i])) {
                    dominated = true;
                    break;
                }
            if (!dominated) current.push_back(i);
        }
        for (std::size_t i : current) {
            rank[i] = level;
            alive[i] = 0;
        }
        remaining -= current.size();
        ++level;
    }
    return rank;
}

// Crowding distance straight from its definition, one objective at a time.
inline std::vector<double> crowding_reference(const std::vector<ObjectiveVector>& level) {
    const std::size_t n = level.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> out(n, 0.0);
    if (n <= 2) {
        std::fill(out.begin(), out.end(), inf);
        return out;
    }
    for (int obj = 0; obj < 2; ++obj) {
        auto key = [&](std::size_t i) { return obj == 0 ? level[i].d1 : level[i].d2; };
        std::vector<std::size_t> by(n);
        std::iota(by.begin(), by.end(), std::size_t{0});
        std::stable_sort(by.begin(), by.end(),
                         [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
        out[by[0]] = inf;
        out[by[n - 1]] = inf;
        const double range = static_cast<double>(key(by[n - 1]) - key(by[0]));
        if (range == 0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k)
            if (out[by[k]] != inf)
                out[by[k]] += static_cast<double>(key(by[k + 1]) - key(by[k - 1])) / range;
    }
    return out;
}

// Minimum-cost derangement by exhaustive permutation search (small n only).
inline std::pair<std::int64_t, std::vector<int>> brute_assignment(
    const biatsp::WeightMatrix& w) {
    const int n = w.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    std::vector<int> best_perm;
    do {
        bool fixed = false;
        std::int64_t cost = 0;
        for (int i = 0; i < n; ++i) {
            if (perm[i] == i) {
                fixed = true;
                break;
            }
            cost += w(i, perm[i]);
        }
        if (!fixed && cost < best) {
            best = cost;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {best, best_perm};
}

// Visits all (n-1)! circuits with vertex 0 first.
template <class Fn>
void for_each_tour(int n, Fn&& fn) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
        fn(Tour::from_order(order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
}

struct RatPoint {
    Rational x, y;
};

// z = alpha*u + beta*v with alpha, beta >= 0?
inline bool in_pair_cone(const RatPoint& z, const RatPoint& u, const RatPoint& v) {
    const Rational det = u.x * v.y - u.y * v.x;
    if (det != Rational(0)) {
        const Rational alpha = (z.x * v.y - z.y * v.x) / det;
        const Rational beta = (u.x * z.y - u.y * z.x) / det;
        return alpha >= Rational(0) && beta >= Rational(0);
    }
    return false;
}

// z = t*u with t >= 0?
inline bool on_ray(const RatPoint& z, const RatPoint& u) {
    if (z.x * u.y != z.y * u.x) return false;
    if (u.x != Rational(0)) return (z.x / u.x) >= Rational(0) && z.y * u.x == z.x * u.y;
    if (u.y != Rational(0)) return (z.y / u.y) >= Rational(0) && z.x == Rational(0);
    return false;
}

// Membership of z in cone{-e1, -e2, y''} \ {0}, where y'' has theta-1 in the
// more-important component and theta in the other one.
inline bool in_quantum_cone(const RatPoint& z, const Quantum& q) {
    if (z.x == Rational(0) && z.y == Rational(0)) return false;
    RatPoint extra;
    if (q.more_important == 1)
        extra = {q.theta - Rational(1), q.theta};
    else
        extra = {q.theta, q.theta - Rational(1)};
    const RatPoint e1{Rational(-1), Rational(0)};
    const RatPoint e2{Rational(0), Rational(-1)};
    const RatPoint gens[3] = {e1, e2, extra};
    for (int i = 0; i < 3; ++i) {
        if (on_ray(z, gens[i])) return true;
        for (int j = 0; j < 3; ++j)
            if (i != j && in_pair_cone(z, gens[i], gens[j])) return true;
    }
    return false;
}

// Survivors of a single importance statement, decided purely by cone
// dominance: an entry falls iff some other entry dominates it by the cone.
inline std::vector<bool> cone_survivors(const Front& front, const Quantum& q) {
    std::vector<bool> survives(front.size(), true);
    for (std::size_t i = 0; i < front.size(); ++i) {
        for (std::size_t j = 0; j < front.size(); ++j) {
            if (i == j) continue;
            const RatPoint diff{
                Rational(front.entries[j].value.d1 - front.entries[i].value.d1),
                Rational(front.entries[j].value.d2 - front.entries[i].value.d2)};
            if (in_quantum_cone(diff, q)) {
                survives[i] = false;
                break;
            }
        }
    }
    return survives;
}

// Random front of exactly `size` mutually incomparable points.
inline Front random_front(int size, Rng& rng) {
    Front f;
    std::int64_t d1 = rng.uniform_int(0, 20);
    std::int64_t d2 = rng.uniform_int(500, 2000);
    for (int i = 0; i < size; ++i) {
        f.entries.push_back({{d1, d2}, std::nullopt});
        d1 += rng.uniform_int(1, 30);
        d2 -= rng.uniform_int(1, 30);
        if (d2 <= 0) d2 = 1;  // keep decreasing strictly from a fresh floor
    }
    // strictly increasing d1 and strictly decreasing d2 guarantee pairwise
    // incomparability as long as d2 never clamps; rebuild if it did
    for (std::size_t i = 1; i < f.entries.size(); ++i) {
        if (f.entries[i].value.d2 >= f.entries[i - 1].value.d2) {
            Front retry;
            std::int64_t x = 0, y = 40ll * size + 10;
            for (int k = 0; k < size; ++k) {
                retry.entries.push_back({{x, y}, std::nullopt});
                x += rng.uniform_int(1, 9);
                y -= rng.uniform_int(1, 9);
            }
            retry.sort_canonical();
            return retry;
        }
    }
    f.sort_canonical();
    return f;
}

inline Rational random_theta(Rng& rng) {
    const std::int64_t den = rng.uniform_int(2, 40);
    const std::int64_t num = rng.uniform_int(1, den - 1);
    return {num, den};
}

}  // namespace oracle
