#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pushline/nice.hpp"

using namespace pushline;
using test_util::column;
using test_util::row;

TEST_CASE("plus sign is nice with the horizontal central line") {
    Shape plus{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {1, -1}};
    auto w = is_nice(plus);
    REQUIRE(w.has_value());
    CHECK(w->line.orientation == Orientation::Horizontal);
    CHECK(w->line.anchor == Cell{0, 0});
    CHECK(w->line.length == 3);
    CHECK(w->perpendicular_runs.size() == 2);
}

TEST_CASE("diagonals are never nice") {
    for (int k = 2; k <= 8; ++k) {
        Shape d;
        for (int i = 0; i < k; ++i) d.add({i, i});
        CHECK_FALSE(is_nice(d).has_value());
    }
}

TEST_CASE("straight lines are nice") {
    Shape h = row(4, -2, 6);
    auto w = is_nice(h);
    REQUIRE(w.has_value());
    CHECK(w->line.length == 6);
    CHECK(w->perpendicular_runs.empty());

    // Vertical lines are nice too (the scan may pick a shorter witness).
    CHECK(is_nice(column(0, 0, 5)).has_value());
    CHECK(is_nice(Shape{{3, 3}}).has_value());
}

TEST_CASE("witness covers every off-line node") {
    // Comb: base row of 5 with three teeth of height 2.
    Shape comb = row(0, 0, 5);
    for (int x : {0, 2, 4}) {
        comb.add({x, 1});
        comb.add({x, 2});
    }
    auto w = is_nice(comb);
    REQUIRE(w.has_value());
    CHECK(w->line.length == 5);
    std::size_t covered = w->line.length;
    for (const auto& run : w->perpendicular_runs) covered += run.length;
    CHECK(covered == comb.order());
}

TEST_CASE("hole prevents niceness") {
    Shape ring = test_util::rect(0, 0, 3, 3);
    ring.remove({1, 1});
    CHECK_FALSE(is_nice(ring).has_value());
}

TEST_CASE("nice check rejects disconnected input") {
    CHECK_THROWS_AS(is_nice(Shape{{0, 0}, {9, 9}}), std::invalid_argument);
}
