#include "biatsp/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "biatsp/errors.hpp"

namespace biatsp {

namespace {

// Running archive of non-dominated (vector, tour) pairs. Ties on the vector
// keep the lexicographically smaller successor array.
class Archive {
public:
    void offer(const ObjectiveVector& v, const std::vector<int>& order) {
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].value == v) {
                Tour t = Tour::from_order(order);
                if (t.succ < entries_[i].tour->succ) entries_[i].tour = std::move(t);
                return;
            }
            if (dominates(entries_[i].value, v)) return;
        }
        std::erase_if(entries_, [&](const FrontEntry& e) { return dominates(v, e.value); });
        entries_.push_back({v, Tour::from_order(order)});
    }

    // Optimistic completions dominated by an archive entry cannot improve it.
    bool strictly_dominated(std::int64_t d1, std::int64_t d2) const {
        for (const auto& e : entries_)
            if (e.value.d1 <= d1 && e.value.d2 <= d2 && (e.value.d1 < d1 || e.value.d2 < d2))
                return true;
        return false;
    }

    Front take() {
        Front f;
        f.entries = std::move(entries_);
        f.sort_canonical();
        return f;
    }

private:
    std::vector<FrontEntry> entries_;
};

class Enumerator {
public:
    explicit Enumerator(const Instance& inst)
        : inst_(inst), n_(inst.n), order_(inst.n), used_(inst.n, 0) {
        min_out1_.resize(n_);
        min_out2_.resize(n_);
        for (int u = 0; u < n_; ++u) {
            std::int64_t m1 = std::numeric_limits<std::int64_t>::max();
            std::int64_t m2 = m1;
            for (int v = 0; v < n_; ++v) {
                if (u == v) continue;
                m1 = std::min(m1, inst.w1(u, v));
                m2 = std::min(m2, inst.w2(u, v));
            }
            min_out1_[u] = m1;
            min_out2_[u] = m2;
        }
        order_[0] = 0;
        used_[0] = 1;
        rem1_ = rem2_ = 0;
        for (int v = 1; v < n_; ++v) {
            rem1_ += min_out1_[v];
            rem2_ += min_out2_[v];
        }
    }

    Front run() {
        descend(1, 0, 0, 0);
        return archive_.take();
    }

private:
    void descend(int depth, int last, std::int64_t s1, std::int64_t s2) {
        if (depth == n_) {
            archive_.offer({s1 + inst_.w1(last, 0), s2 + inst_.w2(last, 0)}, order_);
            return;
        }
        // cheapest possible completion: one outgoing arc for `last` and for
        // every unused vertex
        if (archive_.strictly_dominated(s1 + min_out1_[last] + rem1_,
                                        s2 + min_out2_[last] + rem2_))
            return;
        for (int v = 1; v < n_; ++v) {
            if (used_[v]) continue;
            used_[v] = 1;
            order_[depth] = v;
            rem1_ -= min_out1_[v];
            rem2_ -= min_out2_[v];
            descend(depth + 1, v, s1 + inst_.w1(last, v), s2 + inst_.w2(last, v));
            rem1_ += min_out1_[v];
            rem2_ += min_out2_[v];
            used_[v] = 0;
        }
    }

    const Instance& inst_;
    int n_;
    std::vector<int> order_;
    std::vector<char> used_;
    std::vector<std::int64_t> min_out1_, min_out2_;
    std::int64_t rem1_ = 0, rem2_ = 0;
    Archive archive_;
};

}  // namespace

Front enumerate_pareto(const Instance& inst, int limit) {
    inst.check();
    if (!inst.has_second_criterion())
        throw std::invalid_argument("enumerate_pareto: instance has no second criterion");
    if (inst.n > limit)
        throw guard_error("enumerate_pareto: n=" + std::to_string(inst.n) + " exceeds limit " +
                          std::to_string(limit) + " ((n-1)! circuits would be enumerated)");
    return Enumerator(inst).run();
}

namespace {

struct Label {
    std::int64_t d1;
    std::int64_t d2;
    std::int32_t pred_label;  // index into the predecessor state's labels
    std::int8_t pred_vertex;  // -1 for paths directly out of vertex 0
};

// Sorted by (d1 asc, d2 asc, provenance); one pass keeps strictly improving d2.
void keep_nondominated(std::vector<Label>& labels) {
    std::sort(labels.begin(), labels.end(), [](const Label& a, const Label& b) {
        if (a.d1 != b.d1) return a.d1 < b.d1;
        if (a.d2 != b.d2) return a.d2 < b.d2;
        if (a.pred_vertex != b.pred_vertex) return a.pred_vertex < b.pred_vertex;
        return a.pred_label < b.pred_label;
    });
    std::vector<Label> kept;
    std::int64_t best_d2 = std::numeric_limits<std::int64_t>::max();
    for (const Label& l : labels) {
        if (l.d2 < best_d2) {
            kept.push_back(l);
            best_d2 = l.d2;
        }
    }
    labels = std::move(kept);
}

}  // namespace

Front dp_pareto(const Instance& inst) {
    inst.check();
    if (!inst.has_second_criterion())
        throw std::invalid_argument("dp_pareto: instance has no second criterion");
    if (inst.n > kDpLimit)
        throw guard_error("dp_pareto: n=" + std::to_string(inst.n) + " exceeds limit " +
                          std::to_string(kDpLimit));

    const int m = inst.n - 1;  // vertices 1..n-1, bit v-1
    const std::uint32_t full = (m >= 32) ? 0 : ((1u << m) - 1);
    auto state_id = [m](std::uint32_t mask, int v) {
        return static_cast<std::size_t>(mask) * m + (v - 1);
    };
    std::vector<std::vector<Label>> states(static_cast<std::size_t>(full + 1) * m);

    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        for (int v = 1; v <= m; ++v) {
            const std::uint32_t bit = 1u << (v - 1);
            if (!(mask & bit)) continue;
            std::vector<Label> candidates;
            const std::uint32_t rest = mask ^ bit;
            if (rest == 0) {
                candidates.push_back({inst.w1(0, v), inst.w2(0, v), -1, -1});
            } else {
                for (int u = 1; u <= m; ++u) {
                    if (!(rest & (1u << (u - 1)))) continue;
                    const auto& prev = states[state_id(rest, u)];
                    const std::int64_t a1 = inst.w1(u, v);
                    const std::int64_t a2 = inst.w2(u, v);
                    for (std::size_t li = 0; li < prev.size(); ++li)
                        candidates.push_back({prev[li].d1 + a1, prev[li].d2 + a2,
                                              static_cast<std::int32_t>(li),
                                              static_cast<std::int8_t>(u)});
                }
            }
            keep_nondominated(candidates);
            states[state_id(mask, v)] = std::move(candidates);
        }
    }

    // close the circuit back to vertex 0
    struct FinalLabel {
        ObjectiveVector value;
        int last;
        std::int32_t label;
    };
    std::vector<FinalLabel> finals;
    for (int v = 1; v <= m; ++v) {
        const auto& labels = states[state_id(full, v)];
        for (std::size_t li = 0; li < labels.size(); ++li)
            finals.push_back({{labels[li].d1 + inst.w1(v, 0), labels[li].d2 + inst.w2(v, 0)},
                              v,
                              static_cast<std::int32_t>(li)});
    }
    std::sort(finals.begin(), finals.end(), [](const FinalLabel& a, const FinalLabel& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.last != b.last) return a.last < b.last;
        return a.label < b.label;
    });

    Front front;
    std::int64_t best_d2 = std::numeric_limits<std::int64_t>::max();
    for (const FinalLabel& f : finals) {
        if (f.value.d2 >= best_d2) continue;
        if (!front.entries.empty() && front.entries.back().value == f.value) continue;
        best_d2 = f.value.d2;
        // walk predecessor pointers to recover the visiting order
        std::vector<int> rev;
        std::uint32_t mask = full;
        int v = f.last;
        std::int32_t label = f.label;
        while (v != -1) {
            rev.push_back(v);
            const Label& l = states[state_id(mask, v)][label];
            mask ^= 1u << (v - 1);
            label = l.pred_label;
            v = l.pred_vertex;
        }
        std::vector<int> order;
        order.push_back(0);
        order.insert(order.end(), rev.rbegin(), rev.rend());
        front.entries.push_back({f.value, Tour::from_order(order)});
    }
    front.sort_canonical();
    return front;
}

}  // namespace biatsp
