#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "musca/optimizer.hpp"

using namespace musca;

TEST_CASE("simplex enumeration") {
    CHECK(enumerate_simplex({3}, 0.25).size() == 1);
    CHECK(enumerate_simplex({1, 2, 3}, 0.5).size() == 6);   // compositions of 2 into 3 parts
    CHECK(enumerate_simplex({1, 2, 3}, 0.05).size() == 231);
    const auto grid_01 = enumerate_simplex({1, 2, 3}, 0.1);
    CHECK(grid_01.size() == 66);
    const auto target = DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    bool found = false;
    for (const auto& d : grid_01)
        if (d == target) found = true;
    CHECK(found);
    for (const auto& d : grid_01) {
        double sum = 0.0;
        for (const auto& e : d.entries()) sum += e.probability;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS(enumerate_simplex({1, 2, 3}, 0.3)); // does not divide 1
    CHECK_THROWS(enumerate_simplex({}, 0.5));
}

TEST_CASE("degree-1-only search reproduces the slotted-ALOHA peak") {
    SearchSpec spec;
    spec.degrees = {1};
    spec.step = 1.0;
    spec.n_slots = 100;
    spec.trials_per_candidate = 20000;
    spec.g_grid = grid(0.6, 1.4, 0.2);
    spec.master_seed = 3;
    spec.policy.mode = DecodeMode::sa;
    const auto table = collision_channel_table({"turbo_r12"});
    const auto result = optimize(spec, table);
    REQUIRE(result.ranking.size() == 1);
    CHECK(result.best.peak_throughput == doctest::Approx(0.368).epsilon(0.05));
    CHECK(result.best.peak_g == doctest::Approx(1.0));
}

TEST_CASE("ranking covers the grid, sorted by peak throughput") {
    SearchSpec spec;
    spec.degrees = {1, 2, 3};
    spec.step = 0.5;
    spec.n_slots = 40;
    spec.trials_per_candidate = 300;
    spec.g_grid = {0.4, 0.6, 0.8};
    spec.master_seed = 17;
    spec.policy.mode = DecodeMode::irsa;
    const auto table = collision_channel_table({"turbo_r12", "turbo_r14", "turbo_r16"});
    const auto result = optimize(spec, table);
    REQUIRE(result.ranking.size() == 6);
    for (std::size_t i = 1; i < result.ranking.size(); ++i)
        CHECK(result.ranking[i - 1].peak_throughput >= result.ranking[i].peak_throughput);
    CHECK(result.best.peak_throughput == result.ranking.front().peak_throughput);
    for (const auto& cand : result.ranking) {
        REQUIRE(cand.probabilities.size() == 3);
        CHECK(cand.probabilities[0] + cand.probabilities[1] + cand.probabilities[2] ==
              doctest::Approx(1.0));
    }
    // Pure repetition beats pure SA on a collision channel with SIC.
    const auto& last = result.ranking.back();
    CHECK(last.probabilities[0] == doctest::Approx(1.0));
}

TEST_CASE("optimization is deterministic for a fixed master seed") {
    SearchSpec spec;
    spec.degrees = {2, 3};
    spec.step = 0.5;
    spec.n_slots = 30;
    spec.trials_per_candidate = 200;
    spec.g_grid = {0.5, 0.7};
    spec.master_seed = 29;
    spec.policy.mode = DecodeMode::irsa;
    const auto table = collision_channel_table({"turbo_r14", "turbo_r16"});
    const auto a = optimize(spec, table);
    const auto b = optimize(spec, table);
    REQUIRE(a.ranking.size() == b.ranking.size());
    for (std::size_t i = 0; i < a.ranking.size(); ++i) {
        CHECK(a.ranking[i].peak_throughput == b.ranking[i].peak_throughput);
        CHECK(a.ranking[i].peak_g == b.ranking[i].peak_g);
        CHECK(a.ranking[i].probabilities == b.ranking[i].probabilities);
    }
}
