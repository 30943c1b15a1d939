#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pushline/diagonal.hpp"

using namespace pushline;

namespace {

// Closed form n*sqrt(n) + n - 2*sqrt(n), valid for perfect squares.
long partition_steps(int n) {
    long s = isqrt_floor(n);
    return static_cast<long>(n) * s + n - 2 * s;
}

bool is_spanning_row(const Shape& s) {
    auto l = as_line(s);
    return l && l->orientation == Orientation::Horizontal &&
           l->length == static_cast<int>(s.order());
}

}  // namespace

TEST_CASE("make_diagonal") {
    CHECK(make_diagonal(1) == Shape{{0, 0}});
    CHECK(make_diagonal(3) == Shape{{0, 0}, {1, 1}, {2, 2}});
    for (int n : {1, 2, 5, 17}) CHECK(is_connected(make_diagonal(n)));
    CHECK_THROWS_AS(make_diagonal(0), std::invalid_argument);
}

TEST_CASE("partition plan tiles the diagonal") {
    auto p = plan_partitioning(25);
    CHECK(p.segment_count == 5);
    CHECK(p.segment_length == 5);
    CHECK(p.offsets == std::vector<int>{20, 15, 10, 5, 0});
    CHECK(p.collection_row == 0);

    auto q = plan_partitioning(10);
    CHECK(q.segment_length == 3);
    CHECK(q.offsets == std::vector<int>{7, 4, 1, 0});  // remainder of 1 at the bottom

    auto r = plan_partitioning(99);  // 11 full segments of 9
    CHECK(r.segment_count == 11);
    CHECK(r.segment_length == 9);
}

TEST_CASE("dl_partitioning exact counts on perfect squares") {
    CHECK(partition_steps(25) == 140);
    for (int n : {4, 9, 16, 25, 36, 49}) {
        Trace t = dl_partitioning(n);
        CHECK(t.step_count() == static_cast<std::size_t>(partition_steps(n)));
        auto r = replay(t);
        CHECK(is_spanning_row(r.final));
    }
    CHECK(dl_partitioning(1).step_count() == 0);
}

TEST_CASE("dl_partitioning phase-2 cost matches the transfer distances") {
    Trace t = dl_partitioning(16);
    std::size_t phase2 = 0;
    for (std::size_t i = 0; i < t.moves.size(); ++i)
        if (t.labels[i] == "2") ++phase2;
    CHECK(phase2 == 24);  // n(sqrt(n)-1)/2 at n=16
}

TEST_CASE("dl_partitioning works on non-squares") {
    for (int n : {2, 3, 5, 10, 12, 50, 99}) {
        Trace t = dl_partitioning(n);
        auto r = replay(t);
        CHECK(is_spanning_row(r.final));
        CHECK(r.final.order() == static_cast<std::size_t>(n));
    }
}

TEST_CASE("dl_partitioning phases are labeled 1/2/3") {
    Trace t = dl_partitioning(9);
    auto pb = t.phase_breakdown();
    REQUIRE(pb.size() == 3);
    CHECK(pb[0].first == "1");
    CHECK(pb[1].first == "2");
    CHECK(pb[2].first == "3");
    CHECK(pb[2].second == 2u * (9 - 3));
}
