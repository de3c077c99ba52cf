#include "biatsp/moga.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "biatsp/assignment.hpp"
#include "biatsp/metrics.hpp"

namespace biatsp {

void MogaConfig::validate() const {
    if (population_size < 4)
        throw std::invalid_argument("population_size must be >= 4 (seeding needs 4 heuristic tours)");
    if (tournament_size < 2 || tournament_size > population_size)
        throw std::invalid_argument("tournament_size must lie in [2, population_size]");
    if (mutation_probability < 0.0 || mutation_probability > 1.0)
        throw std::invalid_argument("mutation_probability must lie in [0, 1]");
    if (iterations < 0) throw std::invalid_argument("iterations must be >= 0");
}

namespace {

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<char> visited(n, 0);
    std::vector<std::vector<int>> cycles;
    for (int v = 0; v < n; ++v) {
        if (visited[v]) continue;
        std::vector<int> cycle;
        int u = v;
        while (!visited[u]) {
            visited[u] = 1;
            cycle.push_back(u);
            u = perm[u];
        }
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

// Cost change of deleting (a, perm[a]) and (b, perm[b]) and crossing the
// circuits with (a, perm[b]) and (b, perm[a]).
std::int64_t patch_delta(const WeightMatrix& w, const std::vector<int>& perm, int a, int b) {
    return w(a, perm[b]) + w(b, perm[a]) - w(a, perm[a]) - w(b, perm[b]);
}

void merge_cheapest(const WeightMatrix& w, std::vector<int>& perm, std::vector<int>& into,
                    const std::vector<int>& from) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    int best_a = -1, best_b = -1;
    for (int a : into) {
        for (int b : from) {
            const std::int64_t d = patch_delta(w, perm, a, b);
            if (d < best) {
                best = d;
                best_a = a;
                best_b = b;
            }
        }
    }
    std::swap(perm[best_a], perm[best_b]);
    into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

Tour assignment_patch(const Instance& inst, int criterion, PatchStrategy strategy) {
    const WeightMatrix& w = inst.weights(criterion);
    std::vector<int> perm = solve_assignment(w);
    std::vector<std::vector<int>> cycles = permutation_cycles(perm);

    if (strategy == PatchStrategy::kCheapestPair) {
        while (cycles.size() > 1) {
            std::int64_t best = std::numeric_limits<std::int64_t>::max();
            std::size_t best_i = 0, best_j = 1;
            int best_a = -1, best_b = -1;
            for (std::size_t i = 0; i < cycles.size(); ++i) {
                for (std::size_t j = i + 1; j < cycles.size(); ++j) {
                    for (int a : cycles[i]) {
                        for (int b : cycles[j]) {
                            const std::int64_t d = patch_delta(w, perm, a, b);
                            if (d < best) {
                                best = d;
                                best_i = i;
                                best_j = j;
                                best_a = a;
                                best_b = b;
                            }
                        }
                    }
                }
            }
            std::swap(perm[best_a], perm[best_b]);
            cycles[best_i].insert(cycles[best_i].end(), cycles[best_j].begin(),
                                  cycles[best_j].end());
            cycles.erase(cycles.begin() + static_cast<std::ptrdiff_t>(best_j));
        }
    } else {
        std::stable_sort(cycles.begin(), cycles.end(),
                         [](const std::vector<int>& a, const std::vector<int>& b) {
                             if (a.size() != b.size()) return a.size() > b.size();
                             return *std::min_element(a.begin(), a.end()) <
                                    *std::min_element(b.begin(), b.end());
                         });
        for (std::size_t k = 1; k < cycles.size(); ++k)
            merge_cheapest(w, perm, cycles[0], cycles[k]);
    }

    Tour t;
    t.succ = std::move(perm);
    if (!t.valid()) throw std::logic_error("assignment_patch produced an invalid tour");
    return t;
}

std::vector<Tour> seed_population(const Instance& inst, int count, Rng& rng) {
    if (count < 4) throw std::invalid_argument("seed_population: need room for 4 heuristic tours");
    std::vector<Tour> tours;
    tours.reserve(count);
    tours.push_back(assignment_patch(inst, 1, PatchStrategy::kCheapestPair));
    tours.push_back(assignment_patch(inst, 1, PatchStrategy::kSizeOrdered));
    tours.push_back(assignment_patch(inst, 2, PatchStrategy::kCheapestPair));
    tours.push_back(assignment_patch(inst, 2, PatchStrategy::kSizeOrdered));

    std::vector<int> order(inst.n);
    std::iota(order.begin(), order.end(), 0);
    while (static_cast<int>(tours.size()) < count) {
        rng.shuffle(order.begin() + 1, order.end());  // vertex 0 stays the start
        tours.push_back(Tour::from_order(order));
    }
    return tours;
}

const RankedMember& tournament_select(const RankedPopulation& pop, int s, Rng& rng) {
    if (pop.members.empty()) throw std::invalid_argument("tournament on empty population");
    const RankedMember* best = &pop.members[rng.uniform_index(pop.members.size())];
    for (int k = 1; k < s; ++k) {
        const RankedMember& cand = pop.members[rng.uniform_index(pop.members.size())];
        if (ranked_better(cand, *best)) best = &cand;
    }
    return *best;
}

namespace {

// Uniform choice among the candidates whose arc weight (w1, w2) out of `u`
// is not Pareto-dominated within the candidate set.
int pick_arc(const Instance& inst, int u, const std::vector<int>& candidates, Rng& rng) {
    std::vector<int> front;
    for (int h : candidates) {
        const ObjectiveVector wh{inst.w1(u, h), inst.w2(u, h)};
        bool dominated = false;
        for (int g : candidates) {
            if (g == h) continue;
            if (dominates({inst.w1(u, g), inst.w2(u, g)}, wh)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) front.push_back(h);
    }
    return front[rng.uniform_index(front.size())];
}

// Shared skeleton of both crossovers. Common arcs are fixed first; the open
// fragments are then chained together starting from the fragment holding
// vertex 0. `prefer_parent_arcs` selects which arc pool is tried first.
Tour pareto_reconnect(const Tour& p1, const Tour& p2, const Instance& inst,
                      bool prefer_parent_arcs, Rng& rng) {
    const int n = p1.size();
    std::vector<int> next(n, -1);
    std::vector<char> has_pred(n, 0);
    int common = 0;
    for (int v = 0; v < n; ++v) {
        if (p1.succ[v] == p2.succ[v]) {
            next[v] = p1.succ[v];
            has_pred[next[v]] = 1;
            ++common;
        }
    }
    if (common == n) return p1;  // identical parents: nothing to reconnect

    std::vector<int> tail_of(n, -1);
    std::vector<int> pred(n, -1);
    for (int v = 0; v < n; ++v)
        if (next[v] != -1) pred[next[v]] = v;
    int fragments = 0;
    for (int h = 0; h < n; ++h) {
        if (has_pred[h]) continue;
        ++fragments;
        int t = h;
        while (next[t] != -1) t = next[t];
        tail_of[h] = t;
    }
    int cur_head = 0;
    while (pred[cur_head] != -1) cur_head = pred[cur_head];
    int cur_tail = tail_of[cur_head];

    std::vector<int> usable, primary;
    while (fragments > 1) {
        const int u = cur_tail;
        usable.clear();
        for (int h = 0; h < n; ++h)
            if (!has_pred[h] && h != cur_head) usable.push_back(h);
        primary.clear();
        for (int h : usable) {
            const bool in_parents = p1.succ[u] == h || p2.succ[u] == h;
            if (in_parents == prefer_parent_arcs) primary.push_back(h);
        }
        int chosen;
        if (!primary.empty()) {
            chosen = pick_arc(inst, u, primary, rng);
        } else if (prefer_parent_arcs) {
            chosen = pick_arc(inst, u, usable, rng);
        } else {
            chosen = usable[rng.uniform_index(usable.size())];
        }
        next[u] = chosen;
        has_pred[chosen] = 1;
        cur_tail = tail_of[chosen];
        --fragments;
    }
    next[cur_tail] = cur_head;

    Tour child;
    child.succ = std::move(next);
    return child;
}

}  // namespace

Tour dec_pr_crossover(const Tour& p1, const Tour& p2, const Instance& inst, Rng& rng) {
    return pareto_reconnect(p1, p2, inst, /*prefer_parent_arcs=*/true, rng);
}

Tour dpx_pr_crossover(const Tour& p1, const Tour& p2, const Instance& inst, Rng& rng) {
    return pareto_reconnect(p1, p2, inst, /*prefer_parent_arcs=*/false, rng);
}

Tour recombine(const Tour& p1, const Tour& p2, const Instance& inst, Crossover crossover,
               Rng& rng) {
    Tour child = crossover == Crossover::kDec ? dec_pr_crossover(p1, p2, inst, rng)
                                              : dpx_pr_crossover(p1, p2, inst, rng);
    if (child == p1 || child == p2) {
        const Tour& base = rng.uniform_index(2) == 0 ? p1 : p2;
        return shift_mutation(base, rng);
    }
    return child;
}

Tour shift_move(const Tour& t, int vertex, int insert_after) {
    if (vertex == insert_after)
        throw std::invalid_argument("shift_move: insertion position equals the moved vertex");
    int pred = -1;
    for (int v = 0; v < t.size(); ++v)
        if (t.succ[v] == vertex) pred = v;
    if (insert_after == pred) return t;  // reinsertion at the original position
    Tour out = t;
    out.succ[pred] = out.succ[vertex];
    out.succ[vertex] = out.succ[insert_after];
    out.succ[insert_after] = vertex;
    return out;
}

Tour shift_mutation(const Tour& t, Rng& rng) {
    const int n = t.size();
    if (n < 4) return t;
    const int vertex = static_cast<int>(rng.uniform_index(n));
    int after = static_cast<int>(rng.uniform_index(n - 1));
    if (after >= vertex) ++after;
    return shift_move(t, vertex, after);
}

namespace {

struct ThreeOptMove {
    int a, d, e, b, c, f;  // cut arcs (a,b), (c,d), (e,f); add a->d, e->b, c->f
};

ThreeOptMove sample_move(const std::vector<int>& order, Rng& rng) {
    const int n = static_cast<int>(order.size());
    int i = static_cast<int>(rng.uniform_index(n));
    int j = static_cast<int>(rng.uniform_index(n));
    while (j == i) j = static_cast<int>(rng.uniform_index(n));
    int k = static_cast<int>(rng.uniform_index(n));
    while (k == i || k == j) k = static_cast<int>(rng.uniform_index(n));
    if (i > j) std::swap(i, j);
    if (j > k) std::swap(j, k);
    if (i > j) std::swap(i, j);
    ThreeOptMove m;
    m.a = order[i];
    m.b = order[i + 1];
    m.c = order[j];
    m.d = order[j + 1];
    m.e = order[k];
    m.f = order[(k + 1) % n];
    return m;
}

}  // namespace

Tour three_opt_jump_objective(const Tour& t, const Instance& inst, int criterion, Rng& rng,
                              bool* improved) {
    const WeightMatrix& w = inst.weights(criterion);
    const std::vector<int> order = t.order();
    const int budget = t.size();

    auto apply = [&t](const ThreeOptMove& m) {
        Tour out = t;
        out.succ[m.a] = m.d;
        out.succ[m.e] = m.b;
        out.succ[m.c] = m.f;
        return out;
    };

    ThreeOptMove last{};
    for (int trial = 0; trial < budget; ++trial) {
        const ThreeOptMove m = sample_move(order, rng);
        const std::int64_t delta = w(m.a, m.d) + w(m.e, m.b) + w(m.c, m.f) - w(m.a, m.b) -
                                   w(m.c, m.d) - w(m.e, m.f);
        if (delta < 0) {
            if (improved) *improved = true;
            return apply(m);
        }
        last = m;
    }
    if (improved) *improved = false;
    return apply(last);
}

Tour three_opt_jump(const Tour& t, const Instance& inst, Rng& rng) {
    const int criterion = rng.uniform_index(2) == 0 ? 1 : 2;
    return three_opt_jump_objective(t, inst, criterion, rng);
}

namespace {

RankedPopulation select_from_ranked(const RankedPopulation& combined, int keep) {
    std::vector<std::size_t> idx(combined.members.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});

    int max_rank = 0;
    for (const auto& m : combined.members) max_rank = std::max(max_rank, m.rank);

    RankedPopulation out;
    out.members.reserve(keep);
    for (int rank = 1; rank <= max_rank && static_cast<int>(out.members.size()) < keep; ++rank) {
        std::vector<std::size_t> level;
        for (std::size_t i : idx)
            if (combined.members[i].rank == rank) level.push_back(i);
        const int room = keep - static_cast<int>(out.members.size());
        if (static_cast<int>(level.size()) > room) {
            std::stable_sort(level.begin(), level.end(), [&](std::size_t a, std::size_t b) {
                return combined.members[a].crowding > combined.members[b].crowding;
            });
            level.resize(room);
        }
        for (std::size_t i : level) out.members.push_back(combined.members[i]);
    }
    return out;
}

Front population_front(const std::vector<std::pair<Tour, ObjectiveVector>>& pop,
                       bool with_tours) {
    std::vector<FrontEntry> entries;
    entries.reserve(pop.size());
    for (const auto& [tour, value] : pop)
        entries.push_back({value, with_tours ? std::optional<Tour>(tour) : std::nullopt});
    return pareto_filter(entries);
}

}  // namespace

RankedPopulation environmental_select(
    const std::vector<std::pair<Tour, ObjectiveVector>>& merged, int keep) {
    return select_from_ranked(nondominated_sort(merged), keep);
}

RunReport run(const Instance& inst, const MogaConfig& cfg, const Front* reference,
              const IterationObserver& observer) {
    cfg.validate();
    inst.check();
    if (!inst.has_second_criterion())
        throw std::invalid_argument("run: instance has no second criterion");

    const auto t_start = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    const int N = cfg.population_size;

    std::vector<std::pair<Tour, ObjectiveVector>> pop;
    pop.reserve(N);
    for (Tour& t : seed_population(inst, N, rng)) {
        ObjectiveVector value = evaluate(inst, t);
        pop.emplace_back(std::move(t), value);
    }
    RankedPopulation ranked = nondominated_sort(pop);

    RunReport report;
    report.config = cfg;
    report.instance_name = inst.name;
    report.iterations = cfg.iterations;
    report.initial_front_size = population_front(pop, false).size();

    auto record_trace = [&]() {
        if (!reference) return;
        const Front f = population_front(pop, false);
        report.gd_trace.push_back(gd(f, *reference));
        report.igd_trace.push_back(igd(f, *reference));
    };
    record_trace();

    std::vector<std::pair<Tour, ObjectiveVector>> merged;
    for (int iter = 1; iter <= cfg.iterations; ++iter) {
        merged = pop;
        merged.reserve(2 * static_cast<std::size_t>(N));
        for (int k = 0; k < N; ++k) {
            Tour a = tournament_select(ranked, cfg.tournament_size, rng).tour;
            Tour b = tournament_select(ranked, cfg.tournament_size, rng).tour;
            if (rng.bernoulli(cfg.mutation_probability)) a = three_opt_jump(a, inst, rng);
            if (rng.bernoulli(cfg.mutation_probability)) b = three_opt_jump(b, inst, rng);
            if (!a.valid() || !b.valid())
                throw std::logic_error("mutation produced an invalid tour");
            Tour child = recombine(a, b, inst, cfg.crossover, rng);
            if (!child.valid()) throw std::logic_error("recombination produced an invalid tour");
            ObjectiveVector value = evaluate(inst, child);
            merged.emplace_back(std::move(child), value);
        }
        RankedPopulation combined = nondominated_sort(merged);
        RankedPopulation selected = select_from_ranked(combined, N);
        pop.clear();
        for (const auto& m : selected.members) pop.emplace_back(m.tour, m.value);
        ranked = std::move(selected);
        record_trace();
        if (observer) observer(iter, combined, ranked);
    }

    report.front = population_front(pop, true);
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t_start)
                         .count();
    return report;
}

}  // namespace biatsp
