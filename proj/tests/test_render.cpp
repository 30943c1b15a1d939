#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"
#include "pushline/render.hpp"

using namespace pushline;

TEST_CASE("ascii rendering crops to the bounding box with margin one") {
    Trace t;
    t.initial = Shape{{0, 0}, {1, 0}};
    t.moves = {{{0, 0}, Dir::Right}};
    t.labels = {""};
    std::ostringstream out;
    render_ascii(out, t, 1);
    std::string text = out.str();
    CHECK(text.rfind("step 0\n", 0) == 0);
    CHECK(text.find("....\n.##.\n....\n") != std::string::npos);
    CHECK(text.find("step 1") != std::string::npos);
}

TEST_CASE("every-k sampling still renders the last frame") {
    Trace t;
    t.initial = Shape{{0, 0}};
    for (int i = 0; i < 5; ++i) {
        t.moves.push_back({{i, 0}, Dir::Right});
        t.labels.push_back("");
    }
    std::ostringstream out;
    render_ascii(out, t, 10);
    CHECK(out.str().find("step 5") != std::string::npos);
    CHECK(out.str().find("step 3") == std::string::npos);
}

TEST_CASE("svg animation has one group per sampled frame") {
    Trace t;
    t.initial = Shape{{0, 0}, {0, 1}};
    t.moves = {{{0, 0}, Dir::Right}, {{0, 1}, Dir::Down}};
    t.labels = {"", ""};
    std::ostringstream out;
    render_svg(out, t, 1);
    std::string text = out.str();
    std::size_t groups = 0;
    for (std::size_t p = text.find("<g "); p != std::string::npos; p = text.find("<g ", p + 1))
        ++groups;
    CHECK(groups == 3);
    CHECK(text.find("<svg") == 0);
}
