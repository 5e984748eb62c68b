#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "musca/frame.hpp"

using namespace musca;

TEST_CASE("degree distribution validation") {
    CHECK_THROWS(DegreeDistribution({{1, 0.5}, {2, 0.4}}));          // sum != 1
    CHECK_THROWS(DegreeDistribution({{1, 0.5}, {1, 0.5}}));          // duplicate degree
    CHECK_THROWS(DegreeDistribution({{0, 1.0}}));                    // degree < 1
    CHECK_THROWS(DegreeDistribution({{1, -0.1}, {2, 1.1}}));         // negative probability
    CHECK_THROWS(DegreeDistribution({}));
    const auto d = DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    CHECK(d.mean_degree() == doctest::Approx(2.5));
    CHECK(d.max_degree() == 3);
    CHECK(DegreeDistribution::parse("1:0.1,2:0.3,3:0.6") == d);
}

TEST_CASE("degenerate distributions sample deterministically") {
    Rng rng(7);
    const auto d3 = DegreeDistribution::single(3);
    const auto d1 = DegreeDistribution::parse("1:1.0");
    for (int i = 0; i < 100; ++i) {
        CHECK(d3.sample(rng) == 3);
        CHECK(d1.sample(rng) == 1);
    }
}

TEST_CASE("sampling matches the mass function") {
    const auto dist = DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    Rng rng(42);
    const int n = 1000000;
    std::map<int, long> counts;
    for (int i = 0; i < n; ++i) ++counts[dist.sample(rng)];
    // Empirical frequencies within +-0.005.
    CHECK(std::abs(counts[1] / double(n) - 0.1) < 0.005);
    CHECK(std::abs(counts[2] / double(n) - 0.3) < 0.005);
    CHECK(std::abs(counts[3] / double(n) - 0.6) < 0.005);
    // Chi-square goodness of fit, df = 2, significance 0.001.
    double chi2 = 0.0;
    for (const auto& e : dist.entries()) {
        const double expected = e.probability * n;
        const double diff = counts[e.degree] - expected;
        chi2 += diff * diff / expected;
    }
    CHECK(chi2 < 13.816);
}

TEST_CASE("interference config canonicalization and ordering") {
    CHECK(InterferenceConfig({2, 1, 3}) == InterferenceConfig({1, 2, 3}));
    CHECK_THROWS(InterferenceConfig({}));
    CHECK_THROWS(InterferenceConfig({-1}));
    const auto erased = InterferenceConfig({1, 5}).with_erasures(2);
    CHECK(erased == InterferenceConfig({1, InterferenceConfig::kErased}));
    CHECK(erased.to_string() == "[1 e]");
    CHECK(InterferenceConfig({2, 2}).dominates(InterferenceConfig({1, 2})));
    CHECK_FALSE(InterferenceConfig({0, 3}).dominates(InterferenceConfig({1, 2})));
    CHECK(InterferenceConfig({1, 1}).strictly_improves_on(InterferenceConfig({1, 2})));
    CHECK_FALSE(InterferenceConfig({1, 2}).strictly_improves_on(InterferenceConfig({1, 2})));
}

TEST_CASE("signalling field sizing") {
    CHECK(signalling_length_bits(100, 3, 14.0 / 64.0) == 64);
    CHECK(signalling_length_bits(100, 1, 1.0) == 0);
    CHECK(signalling_length_bits(512, 2, 0.5) == 18);
    CHECK_THROWS(signalling_length_bits(0, 2, 0.5));
    CHECK_THROWS(signalling_length_bits(100, 2, 0.0));
}

TEST_CASE("default code profile family") {
    const auto profiles = default_profiles();
    for (const auto& [degree, p] : profiles) {
        CHECK(p.data_rate * degree == doctest::Approx(0.5));
        CHECK(p.data_field_symbols() == 456); // same burst size for every degree
    }
    CHECK(profiles.at(3).code_id == "turbo_r16");
    CHECK(profiles.at(1).signalling_code_id.empty());
}

TEST_CASE("empty frame") {
    Rng rng(1);
    const auto frame = build_frame(0, 5, DegreeDistribution::single(2), default_profiles(), rng);
    CHECK(frame.users.empty());
    for (int s = 0; s < 5; ++s) {
        CHECK(frame.state.occupancy(s, Layer::data) == 0);
        CHECK(frame.state.occupancy(s, Layer::signalling) == 0);
    }
}

TEST_CASE("degree exceeding the frame is a construction error") {
    Rng rng(1);
    CHECK_THROWS(build_frame(1, 2, DegreeDistribution::single(3), default_profiles(), rng));
}

TEST_CASE("burst conservation and distinct slots") {
    const auto dist = DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    const auto profiles = default_profiles();
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto frame = build_frame(20, 8, dist, profiles, rng);
        long total_degree = 0, slot_mass = 0;
        for (const auto& u : frame.users) {
            total_degree += u.degree;
            for (std::size_t i = 1; i < u.slots.size(); ++i)
                CHECK(u.slots[i] != u.slots[i - 1]); // sorted and distinct
        }
        for (int s = 0; s < 8; ++s) slot_mass += frame.state.occupancy(s, Layer::data);
        CHECK(slot_mass == total_degree);
    }
}

TEST_CASE("mean burst count matches the distribution expectation") {
    // Brute-force averaging oracle: 140 users at mean degree 2.5 offer 350
    // bursts per frame on average.
    const auto dist = DegreeDistribution({{1, 0.1}, {2, 0.3}, {3, 0.6}});
    const auto profiles = default_profiles();
    Rng rng(2024);
    const int frames = 20000;
    long total = 0;
    for (int t = 0; t < frames; ++t) {
        const auto frame = build_frame(140, 100, dist, profiles, rng);
        for (const auto& u : frame.users) total += u.degree;
    }
    CHECK(total / double(frames) == doctest::Approx(350.0).epsilon(0.002));
}

TEST_CASE("config_of counts others and is placement-order independent") {
    Frame frame{FrameState(3), {}};
    UserTransmission solo;
    solo.user_id = 0;
    solo.degree = 2;
    solo.slots = {0, 2};
    frame.state.place(0, 0, Layer::data);
    frame.state.place(0, 2, Layer::data);
    CHECK(config_of(solo, frame.state, Layer::data) == InterferenceConfig({0, 0}));

    frame.state.place(1, 2, Layer::data);
    frame.state.place(2, 2, Layer::data);
    CHECK(config_of(solo, frame.state, Layer::data) == InterferenceConfig({0, 2}));
}

TEST_CASE("frame state subtraction guards") {
    FrameState state(2);
    UserTransmission user;
    user.user_id = 5;
    user.slots = {0, 1};
    state.place(5, 0, Layer::data);
    state.place(5, 1, Layer::data);
    state.subtract(user, Layer::data);
    CHECK(state.occupancy(0, Layer::data) == 0);
    CHECK_THROWS_AS(state.subtract(user, Layer::data), std::logic_error);
    CHECK_THROWS_AS(state.place(5, 5, Layer::data), std::out_of_range);
}
