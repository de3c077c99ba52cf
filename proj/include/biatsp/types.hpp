#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace biatsp {

// Pair of tour weights (first criterion, second criterion).
struct ObjectiveVector {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;

    friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
    friend auto operator<=>(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// Hamiltonian circuit in successor form: succ[v] is the vertex after v.
// Two tours are equal as arc sets exactly when their successor arrays are
// equal, so no rotation handling is ever needed.
struct Tour {
    std::vector<int> succ;

    int size() const { return static_cast<int>(succ.size()); }

    // Builds a tour from a visiting order; order[0] is the start vertex.
    static Tour from_order(std::span<const int> order) {
        Tour t;
        t.succ.assign(order.size(), -1);
        for (std::size_t i = 0; i + 1 < order.size(); ++i) t.succ[order[i]] = order[i + 1];
        if (!order.empty()) t.succ[order.back()] = order.front();
        return t;
    }

    // Visiting order starting at vertex 0. Requires a valid tour.
    std::vector<int> order() const {
        std::vector<int> out;
        out.reserve(succ.size());
        int v = 0;
        for (std::size_t i = 0; i < succ.size(); ++i) {
            out.push_back(v);
            v = succ[v];
        }
        return out;
    }

    // Permutation check plus single-circuit check.
    bool valid() const {
        const int n = size();
        if (n < 2) return false;
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {
            if (succ[v] < 0 || succ[v] >= n || succ[v] == v) return false;
            if (seen[succ[v]]) return false;
            seen[succ[v]] = 1;
        }
        int v = 0;
        for (int i = 0; i < n; ++i) v = succ[v];
        if (v != 0) return false;
        int count = 0;
        v = 0;
        do {
            ++count;
            v = succ[v];
        } while (v != 0);
        return count == n;
    }

    friend bool operator==(const Tour&, const Tour&) = default;
};

}  // namespace biatsp
