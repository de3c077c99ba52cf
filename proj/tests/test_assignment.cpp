#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biatsp/assignment.hpp"
#include "biatsp/moga.hpp"
#include "oracles.hpp"

using namespace biatsp;

TEST_CASE("hungarian equals brute force on small instances") {
    std::uint64_t seed = 40;
    for (int rep = 0; rep < 12; ++rep) {
        const int n = 3 + rep % 5;
        const Instance inst = generate_random(n, 1, 30, 1, 30, ++seed);
        for (int criterion = 1; criterion <= 2; ++criterion) {
            const WeightMatrix& w = inst.weights(criterion);
            const auto perm = solve_assignment(w);
            std::int64_t cost = 0;
            for (int i = 0; i < n; ++i) {
                CHECK(perm[i] != i);  // sentinel keeps self-loops out
                cost += w(i, perm[i]);
            }
            CHECK(cost == oracle::brute_assignment(w).first);
        }
    }
}

namespace {

Instance cyclic_instance(int n) {
    // the cheap arcs form one Hamiltonian circuit, so the assignment optimum
    // is already a tour
    Instance inst;
    inst.n = n;
    inst.name = "cycle";
    inst.w1 = WeightMatrix(n, kDiagonalSentinel);
    inst.w2 = WeightMatrix(n, kDiagonalSentinel);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                inst.w1(u, v) = (v == (u + 1) % n) ? 1 : 10;
                inst.w2(u, v) = 3;
            }
    return inst;
}

// two cheap 2-cycles (0<->1, 2<->3) plus asymmetric crossing arcs
Instance two_cycle_instance() {
    Instance inst;
    inst.n = 4;
    inst.name = "patchme";
    inst.w1 = WeightMatrix(4, kDiagonalSentinel);
    inst.w2 = WeightMatrix(4, kDiagonalSentinel);
    auto set = [&](int u, int v, std::int64_t w) { inst.w1(u, v) = w; };
    set(0, 1, 1);
    set(1, 0, 1);
    set(2, 3, 1);
    set(3, 2, 1);
    set(0, 2, 3);
    set(0, 3, 4);
    set(1, 2, 5);
    set(1, 3, 6);
    set(2, 0, 7);
    set(2, 1, 8);
    set(3, 0, 9);
    set(3, 1, 10);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v)
            if (u != v) inst.w2(u, v) = 2;
    return inst;
}

}  // namespace

TEST_CASE("assignment_patch returns the assignment when it is one circuit") {
    const Instance inst = cyclic_instance(6);
    for (PatchStrategy s : {PatchStrategy::kCheapestPair, PatchStrategy::kSizeOrdered}) {
        const Tour t = assignment_patch(inst, 1, s);
        CHECK(t.valid());
        CHECK(evaluate(inst, t).d1 == 6);  // the assignment optimum itself
    }
}

TEST_CASE("assignment_patch on two 2-cycles picks the cheapest crossing patch") {
    const Instance inst = two_cycle_instance();

    // oracle: try all four (a, b) patches of the optimal assignment by hand
    const std::vector<int> assignment = {1, 0, 3, 2};
    std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
    Tour best_tour;
    for (int a : {0, 1}) {
        for (int b : {2, 3}) {
            std::vector<int> succ = assignment;
            std::swap(succ[a], succ[b]);
            Tour t;
            t.succ = succ;
            REQUIRE(t.valid());
            const std::int64_t cost = evaluate(inst, t).d1;
            if (cost < best_cost) {
                best_cost = cost;
                best_tour = t;
            }
        }
    }

    for (PatchStrategy s : {PatchStrategy::kCheapestPair, PatchStrategy::kSizeOrdered}) {
        const Tour t = assignment_patch(inst, 1, s);
        CHECK(t.valid());
        CHECK(evaluate(inst, t).d1 == best_cost);
        CHECK(t == best_tour);
    }
}

TEST_CASE("assignment_patch always produces valid tours") {
    std::uint64_t seed = 900;
    for (int rep = 0; rep < 10; ++rep) {
        const Instance inst = generate_random(5 + rep, 1, 50, 1, 50, ++seed);
        for (int criterion : {1, 2})
            for (PatchStrategy s :
                 {PatchStrategy::kCheapestPair, PatchStrategy::kSizeOrdered})
                CHECK(assignment_patch(inst, criterion, s).valid());
    }
}
