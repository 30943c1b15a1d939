#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pushline/io.hpp"

using namespace pushline;
using test_util::row;

TEST_CASE("shape format round-trip and validation") {
    Shape s{{2, -1}, {0, 0}, {1, 0}};
    std::string text = shape_to_string(s);
    CHECK(text == "2 -1\n0 0\n1 0\n");
    CHECK(shape_from_string(text) == s);
    CHECK(shape_from_string("# header\n 1 2 \n\n3 4 # trailing\n").order() == 2);

    CHECK_THROWS_AS(shape_from_string("1 2\n1 2\n"), ParseError);
    CHECK_THROWS_AS(shape_from_string("1\n"), ParseError);
    CHECK_THROWS_AS(shape_from_string("a b\n"), ParseError);
    CHECK_THROWS_AS(shape_from_string("1 2 3\n"), ParseError);
    CHECK_THROWS_AS(shape_from_string("# nothing\n"), ParseError);
}

TEST_CASE("trace format round-trip is bit-exact") {
    Trace t;
    t.initial = row(0, 0, 3);
    t.moves = {{{0, 0}, Dir::Right}, {{3, 0}, Dir::Up}, {{3, 1}, Dir::Left}};
    t.labels = {"1", "", "2"};
    std::string text = trace_to_string(t);
    CHECK(text ==
          "trace v1 n=3\n"
          "0 0\n1 0\n2 0\n"
          "---\n"
          "0 0 R #1\n"
          "3 0 U\n"
          "3 1 L #2\n");
    Trace back = trace_from_string(text);
    CHECK(back.initial == t.initial);
    CHECK(back.moves == t.moves);
    CHECK(back.labels == t.labels);
    CHECK(trace_to_string(back) == text);
}

TEST_CASE("trace parser rejects malformed input") {
    CHECK_THROWS_AS(trace_from_string(""), ParseError);
    CHECK_THROWS_AS(trace_from_string("nonsense\n"), ParseError);
    CHECK_THROWS_AS(trace_from_string("trace v1 n=1\n0 0\n"), ParseError);  // missing ---
    CHECK_THROWS_AS(trace_from_string("trace v1 n=1\n0 0\n---\n0 0 X\n"), ParseError);
    CHECK_THROWS_AS(trace_from_string("trace v1 n=1\n0 0\n---\n0 0\n"), ParseError);
    CHECK_THROWS_AS(trace_from_string("trace v2 n=1\n0 0\n---\n"), ParseError);
}

TEST_CASE("trace transforms preserve replayability") {
    Trace t;
    t.initial = row(0, 0, 3);
    t.moves = {{{0, 0}, Dir::Right}, {{3, 0}, Dir::Up}};
    t.labels = {"a", "b"};

    Trace moved = translated(t, 5, -2);
    CHECK(moved.initial == t.initial.translated(5, -2));
    CHECK(replay(moved).final == replay(t).final.translated(5, -2));

    Trace rot = rotated_cw(t);
    CHECK(replay(rot).final == replay(t).final.rotated_cw());
    CHECK(rot.labels == t.labels);
}
