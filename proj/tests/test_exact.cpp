#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "biatsp/dominance.hpp"
#include "biatsp/errors.hpp"
#include "biatsp/exact.hpp"
#include "oracles.hpp"

using namespace biatsp;

namespace {

Instance uniform_instance(int n, std::int64_t c1, std::int64_t c2) {
    Instance inst;
    inst.n = n;
    inst.name = "uniform";
    inst.w1 = WeightMatrix(n, kDiagonalSentinel);
    inst.w2 = WeightMatrix(n, kDiagonalSentinel);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) {
                inst.w1(u, v) = c1;
                inst.w2(u, v) = c2;
            }
    return inst;
}

}  // namespace

TEST_CASE("n=3 front is the filter of the two circuits") {
    const Instance inst = generate_random(3, 1, 9, 1, 9, 77);
    std::vector<ObjectiveVector> both;
    oracle::for_each_tour(3, [&](const Tour& t) { both.push_back(evaluate(inst, t)); });
    REQUIRE(both.size() == 2);
    const Front f = enumerate_pareto(inst);
    CHECK(oracle::vector_set(f) == oracle::brute_front(both));
    CHECK(oracle::vector_set(dp_pareto(inst)) == oracle::vector_set(f));
}

TEST_CASE("uniform weights collapse the front to a single point") {
    const Instance inst = uniform_instance(7, 3, 5);
    const Front e = enumerate_pareto(inst);
    const Front d = dp_pareto(inst);
    REQUIRE(e.size() == 1);
    CHECK(e.entries[0].value == ObjectiveVector{21, 35});
    CHECK(oracle::vector_set(d) == oracle::vector_set(e));

    // the tie representative is the lexicographically smallest successor
    // array, which on a uniform instance is the identity-order circuit
    std::vector<int> order(7);
    std::iota(order.begin(), order.end(), 0);
    CHECK(e.entries[0].tour == Tour::from_order(order));
}

TEST_CASE("contradicting series front lies on the d1 + d2 = 3n line") {
    const Instance inst = generate_contradicting(10, 3);
    const Front f = enumerate_pareto(inst);
    CHECK(f.size() == 11);
    for (const auto& e : f.entries) {
        CHECK(e.value.d1 + e.value.d2 == 30);
        CHECK(e.value.d1 >= 10);
        CHECK(e.value.d1 <= 20);
    }
    CHECK(oracle::vector_set(dp_pareto(inst)) == oracle::vector_set(f));
}

TEST_CASE("enumeration and labeling DP agree on seeded instances") {
    std::uint64_t seed = 1000;
    for (int rep = 0; rep < 8; ++rep) {
        const int n = 5 + rep % 6;
        const Instance inst = generate_random(n, 1, 12, 1, 12, ++seed);
        const Front e = enumerate_pareto(inst);
        const Front d = dp_pareto(inst);
        CHECK(oracle::vector_set(e) == oracle::vector_set(d));
        CHECK(static_cast<std::int64_t>(e.size()) <= cardinality_bound(inst));

        for (const auto& entry : e.entries) {
            REQUIRE(entry.tour.has_value());
            CHECK(evaluate(inst, *entry.tour) == entry.value);
        }
        for (const auto& entry : d.entries) {
            REQUIRE(entry.tour.has_value());
            CHECK(evaluate(inst, *entry.tour) == entry.value);
        }
    }
}

TEST_CASE("size guards refuse oversized inputs") {
    const Instance big = generate_random(20, 1, 5, 1, 5, 1);
    CHECK_THROWS_AS(enumerate_pareto(big), guard_error);
    CHECK_THROWS_AS(dp_pareto(big), guard_error);
    // a custom limit loosens the enumeration guard
    const Instance mid = generate_random(14, 1, 5, 1, 5, 2);
    CHECK_THROWS_AS(enumerate_pareto(mid), guard_error);
}
