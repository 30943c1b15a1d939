#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "pushline/bench.hpp"

using namespace pushline;

TEST_CASE("scaling_experiment verifies and records phases") {
    auto recs = scaling_experiment("dl-partitioning", {16, 25, 36}, {0});
    REQUIRE(recs.size() == 3);
    CHECK(recs[0].steps == 72);
    CHECK(recs[1].steps == 140);
    CHECK(recs[2].steps == 240);
    for (auto& r : recs) {
        std::size_t total = 0;
        for (auto& [label, c] : r.phases) total += c;
        CHECK(total == r.steps);
    }
    CHECK_THROWS_AS(scaling_experiment("no-such", {4}, {0}), std::invalid_argument);
}

TEST_CASE("fit_exponent recovers 1.5 for the partitioning data") {
    std::vector<int> sizes;
    for (int s = 4; s * s <= 1600; s += 2) sizes.push_back(s * s);
    auto recs = scaling_experiment("dl-partitioning", sizes, {0});
    auto fit = fit_exponent(recs);
    CHECK(fit.exponent > 1.45);
    CHECK(fit.exponent < 1.55);
    CHECK_FALSE(fit.prefers_nlogn);
    for (const auto& r : recs) {
        long rt = isqrt_floor(r.n);
        CHECK(r.steps == static_cast<std::size_t>(static_cast<long>(r.n) * rt + r.n - 2 * rt));
    }
}

TEST_CASE("partitioning closed form holds at n = 10000") {
    auto recs = scaling_experiment("dl-partitioning", {10000}, {0});
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].steps == 1000000u + 10000 - 200);
}

TEST_CASE("fit_exponent flags n log n for the doubling data") {
    std::vector<int> sizes;
    for (int e = 7; e <= 14; ++e) sizes.push_back(1 << e);
    auto recs = scaling_experiment("dl-doubling", sizes, {0});
    auto fit = fit_exponent(recs);
    CHECK(fit.exponent <= 1.15);
    CHECK(fit.prefers_nlogn);
}

TEST_CASE("fit_exponent rejects insufficient data") {
    auto recs = scaling_experiment("dl-partitioning", {16, 25, 36}, {0});
    CHECK_THROWS_AS(fit_exponent(recs), std::invalid_argument);
}

TEST_CASE("csv layout") {
    auto recs = scaling_experiment("dl-partitioning", {16}, {0});
    std::ostringstream out;
    write_bench_csv(out, recs);
    std::string text = out.str();
    CHECK(text.rfind("strategy,n,seed,steps,phase,phase_steps,wall_ms\n", 0) == 0);
    CHECK(text.find("dl-partitioning,16,0,72,1,") != std::string::npos);
    CHECK(text.find(",total,72,") != std::string::npos);
}

TEST_CASE("svg scaling plot emits points") {
    auto recs = scaling_experiment("dl-recursion", {16, 32, 64, 128}, {0});
    FitResult fit{1.1, true, 0.0, 0.0};
    std::ostringstream out;
    write_scaling_svg(out, recs, fit, "dl-recursion");
    CHECK(out.str().find("<svg") != std::string::npos);
    CHECK(out.str().find("circle") != std::string::npos);
}

TEST_CASE("sqrt strategies scale like n^1.5: steps(4n)/steps(n) near 8") {
    for (const char* name : {"dl-partitioning", "dlc-folding", "dlc-extending"}) {
        auto recs = scaling_experiment(name, {1024, 4096}, {0});
        REQUIRE(recs.size() == 2);
        double ratio = static_cast<double>(recs[1].steps) / static_cast<double>(recs[0].steps);
        CHECK(std::abs(ratio - 8.0) / 8.0 < 0.15);
    }
}
