#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "musca/montecarlo.hpp"
#include "musca/per_table.hpp"

using namespace musca;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        path = std::filesystem::temp_directory_path() / ("per_test_" + std::to_string(std::rand()) + ".per");
        std::ofstream(path) << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("builtin anchors are retrievable bit-exactly") {
    const auto t = builtin_anchor_table();
    CHECK(t.lookup("rm14_64", 5.0, InterferenceConfig({1})) == 0.109);
    CHECK(t.lookup("rm14_64", 5.0, InterferenceConfig({0})) == 1e-4);
    CHECK(t.lookup("turbo_r16", 5.0, InterferenceConfig({1, 2, 3})) == 0.02);
    CHECK(t.lookup("turbo_r14", 5.0, InterferenceConfig({0, 2})) == 1e-4);
    CHECK(t.lookup("turbo_r14", 5.0, InterferenceConfig({1, 1})) == 1e-4);
    // Stored keys never carry a raw component above the erasure threshold.
    for (const auto& row : t.rows())
        for (int c : row.config)
            CHECK((c <= 2 || c == InterferenceConfig::kErased));
}

TEST_CASE("ideal table answers zero for any query") {
    const auto t = PerTable::ideal();
    CHECK(t.lookup("anything", -3.0, InterferenceConfig({4, 4, 4})) == 0.0);
    CHECK(t.has_code("whatever"));
}

TEST_CASE("collision channel") {
    const auto t = collision_channel_table({"c"});
    CHECK(t.lookup("c", 5.0, InterferenceConfig({0, 0})) == 0.0);
    CHECK(t.lookup("c", 5.0, InterferenceConfig({0, 1})) == 1.0);
    CHECK(t.lookup("c", 5.0, InterferenceConfig({0, 0, 0})) == 0.0);
    CHECK_THROWS(t.lookup("unknown", 5.0, InterferenceConfig({0})));
}

TEST_CASE("erasure substitution in lookups") {
    const auto t = builtin_anchor_table();
    const auto direct = t.lookup("turbo_r16", 5.0,
                                 InterferenceConfig({1, 2, InterferenceConfig::kErased}));
    CHECK(t.lookup("turbo_r16", 5.0, InterferenceConfig({1, 2, 5})) == direct);
    CHECK(t.lookup("turbo_r16", 5.0, InterferenceConfig({1, 2, 37})) == direct);
}

TEST_CASE("log-linear SNR interpolation") {
    PerTable t;
    t.insert("c", 0.0, InterferenceConfig({0}), 1e-1);
    t.insert("c", 10.0, InterferenceConfig({0}), 1e-3);
    t.validate();
    // Exact at stored points.
    CHECK(t.lookup("c", 0.0, InterferenceConfig({0})) == 1e-1);
    CHECK(t.lookup("c", 10.0, InterferenceConfig({0})) == 1e-3);
    // Hand-computed midpoint: log10 halfway between -1 and -3.
    CHECK(t.lookup("c", 5.0, InterferenceConfig({0})) == doctest::Approx(1e-2).epsilon(1e-12));
    // Clamped outside the stored range.
    CHECK(t.lookup("c", -20.0, InterferenceConfig({0})) == 1e-1);
    CHECK(t.lookup("c", 40.0, InterferenceConfig({0})) == 1e-3);
    // Monotone between stored points.
    double prev = 1.0;
    for (double snr = 0.0; snr <= 10.0; snr += 0.5) {
        const double per = t.lookup("c", snr, InterferenceConfig({0}));
        CHECK(per <= prev);
        prev = per;
    }
}

TEST_CASE("unknown config falls back to the tightest dominating entry") {
    PerTable t;
    t.insert("c", 5.0, InterferenceConfig({2, 2}), 0.5);
    t.insert("c", 5.0, InterferenceConfig({1, 2}), 0.2);
    t.validate();
    CHECK(t.lookup("c", 5.0, InterferenceConfig({1, 1})) == 0.2);  // [1 2] dominates, tighter
    CHECK(t.lookup("c", 5.0, InterferenceConfig({0, 2})) == 0.2);
    CHECK(t.lookup("c", 5.0, InterferenceConfig({2, InterferenceConfig::kErased})) == 1.0); // none dominates
    CHECK(t.lookup("c", 5.0, InterferenceConfig({1})) == 1.0); // no same-length entry
}

TEST_CASE("load-time validation") {
    SUBCASE("well-formed file") {
        TempFile f("# comment\n"
                   "turbo_r16,5.0,1|2|3,0.02\n"
                   "turbo_r16,8.0,1|2|e,0.001\n");
        const auto t = load_per_table(f.path);
        CHECK(t.lookup("turbo_r16", 5.0, InterferenceConfig({1, 2, 3})) == 0.02);
        CHECK(t.lookup("turbo_r16", 8.0, InterferenceConfig({1, 2, 9})) == 0.001);
    }
    SUBCASE("range violation") {
        TempFile f("c,5.0,1,1.5\n");
        CHECK_THROWS_WITH_AS(load_per_table(f.path), doctest::Contains(":1:"), std::invalid_argument);
    }
    SUBCASE("duplicate key, erasure-canonical") {
        TempFile f("c,5.0,1|3,0.1\nc,5.0,1|4,0.1\n");
        CHECK_THROWS_WITH_AS(load_per_table(f.path), doctest::Contains(":2:"), std::invalid_argument);
    }
    SUBCASE("SNR monotonicity violation") {
        TempFile f("c,5.0,1,0.1\nc,8.0,1,0.2\n");
        CHECK_THROWS(load_per_table(f.path));
    }
    SUBCASE("dominance violation") {
        TempFile f("c,5.0,1|1,0.3\nc,5.0,1|2,0.1\n");
        CHECK_THROWS(load_per_table(f.path));
    }
    SUBCASE("missing file") {
        CHECK_THROWS(load_per_table("/nonexistent/table.per"));
    }
}

TEST_CASE("save and reload round-trips") {
    const auto t = make_parametric_table({2.0, 5.0, 8.0});
    TempFile f("");
    save_per_table(t, f.path, "test table");
    const auto reloaded = load_per_table(f.path);
    for (const auto& row : t.rows())
        CHECK(reloaded.lookup(row.code_id, row.snr_db, InterferenceConfig(row.config)) ==
              doctest::Approx(row.per).epsilon(1e-12));
}

TEST_CASE("parametric model reproduces its calibration anchors") {
    const auto codes = default_parametric_codes();
    CHECK(parametric_per(codes[0], 5.0, {1}) == doctest::Approx(0.109).epsilon(1e-9));
    CHECK(parametric_per(codes[0], 5.0, {0}) == doctest::Approx(1e-4).epsilon(1e-9));
    CHECK(parametric_per(codes[3], 5.0, {1, 2, InterferenceConfig::kErased}) ==
          doctest::Approx(0.02).epsilon(1e-9));
    CHECK(parametric_per(codes[2], 5.0, {1, 1}) == doctest::Approx(1e-4).epsilon(1e-9));
    // A fully erased codeword never decodes.
    CHECK(parametric_per(codes[3], 20.0,
                         {InterferenceConfig::kErased, InterferenceConfig::kErased,
                          InterferenceConfig::kErased}) == 1.0);
}

TEST_CASE("parametric table passes its own validation and stays in range") {
    const auto t = make_parametric_table(musca::grid(-2.0, 12.0, 1.0));
    for (const auto& row : t.rows()) {
        CHECK(row.per >= 0.0);
        CHECK(row.per <= 1.0);
    }
}
