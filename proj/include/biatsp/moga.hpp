#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "biatsp/dominance.hpp"
#include "biatsp/instance.hpp"
#include "biatsp/rng.hpp"
#include "biatsp/types.hpp"

namespace biatsp {

enum class Crossover { kDec, kDpx };

struct MogaConfig {
    int population_size = 50;
    int iterations = 1000;
    int tournament_size = 10;
    double mutation_probability = 0.1;
    Crossover crossover = Crossover::kDec;
    std::uint64_t seed = 1;

    void validate() const;
};

struct RunReport {
    MogaConfig config;
    std::string instance_name;
    Front front;                    // non-dominated set of the final population
    std::size_t initial_front_size = 0;
    std::vector<double> gd_trace;   // per iteration, index 0 = initial population
    std::vector<double> igd_trace;  // filled only when a reference front is given
    double wall_ms = 0.0;
    int iterations = 0;
};

enum class PatchStrategy {
    kCheapestPair,  // repeatedly merge the two circuits with the cheapest patch
    kSizeOrdered,   // grow the largest circuit, absorbing the rest by size
};

// Assignment relaxation on one criterion, then circuit patching into a tour.
Tour assignment_patch(const Instance& inst, int criterion, PatchStrategy strategy);

// Four heuristic individuals (both patch strategies on each criterion), the
// rest uniform random circuits.
std::vector<Tour> seed_population(const Instance& inst, int count, Rng& rng);

// Best of s draws with replacement under (rank asc, crowding desc).
const RankedMember& tournament_select(const RankedPopulation& pop, int s, Rng& rng);

// Respectful crossover: common arcs are copied, fragments are reconnected
// greedily preferring parent arcs, choosing uniformly among candidates that
// are non-dominated in arc weights.
Tour dec_pr_crossover(const Tour& p1, const Tour& p2, const Instance& inst, Rng& rng);

// Respectful crossover biased the other way: reconnection prefers arcs absent
// from both parents.
Tour dpx_pr_crossover(const Tour& p1, const Tour& p2, const Instance& inst, Rng& rng);

// Runs the configured crossover and applies the clone guard: an offspring
// equal to a parent is replaced by a shift mutation of one parent chosen
// with equal probability.
Tour recombine(const Tour& p1, const Tour& p2, const Instance& inst, Crossover crossover,
               Rng& rng);

// Deterministic core of the shift mutation: remove `vertex`, reinsert it
// right after `insert_after`. insert_after == old predecessor is an identity.
Tour shift_move(const Tour& t, int vertex, int insert_after);

// Random single-vertex relocation; tours with fewer than 4 vertices are
// returned unchanged.
Tour shift_mutation(const Tour& t, Rng& rng);

// Random jump in the orientation-preserving 3-opt neighbourhood: samples up
// to n segment relocations, applies the first one improving the given
// criterion, or the last sample when none improves.
Tour three_opt_jump_objective(const Tour& t, const Instance& inst, int criterion, Rng& rng,
                              bool* improved = nullptr);

// Same, with the criterion picked uniformly.
Tour three_opt_jump(const Tour& t, const Instance& inst, Rng& rng);

// Best N of a merged parent+offspring population by (rank, crowding);
// the boundary level is truncated by descending crowding distance.
RankedPopulation environmental_select(
    const std::vector<std::pair<Tour, ObjectiveVector>>& merged, int keep);

// Called after each environmental selection with the ranked union and the
// surviving population; used by diagnostics and tests.
using IterationObserver =
    std::function<void(int iteration, const RankedPopulation& combined,
                       const RankedPopulation& selected)>;

// Generational NSGA-II loop. Deterministic for a fixed (instance, config,
// seed); gd/igd traces are recorded when a reference front is supplied.
RunReport run(const Instance& inst, const MogaConfig& cfg, const Front* reference = nullptr,
              const IterationObserver& observer = {});

}  // namespace biatsp
