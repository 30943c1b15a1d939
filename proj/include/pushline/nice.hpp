#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pushline/shape.hpp"

namespace pushline {

/// Evidence that a shape is nice: a central line plus, for every off-line
/// node, the perpendicular occupied run that connects it to the line.
struct CentralLineWitness {
    LineSegment line;
    std::vector<LineSegment> perpendicular_runs;
};

namespace detail {

// Checks one maximal run as central-line candidate. Every node off the
// run must sit on a perpendicular run through one of the line's cells.
inline std::optional<CentralLineWitness> check_central(const Shape& s, const LineSegment& line) {
    std::size_t covered = static_cast<std::size_t>(line.length);
    std::vector<LineSegment> runs;
    bool horizontal = line.orientation == Orientation::Horizontal;
    Dir fwd = horizontal ? Dir::Up : Dir::Right;
    Dir bwd = horizontal ? Dir::Down : Dir::Left;
    for (int i = 0; i < line.length; ++i) {
        Cell base = line.at(i);
        for (Dir d : {fwd, bwd}) {
            Cell c = base + step(d);
            int len = 0;
            while (s.contains(c)) {
                ++len;
                c = c + step(d);
            }
            if (len > 0) {
                Cell first = base + step(d);
                Cell last = first + Cell{step(d).x * (len - 1), step(d).y * (len - 1)};
                runs.push_back({std::min(first, last),
                                horizontal ? Orientation::Vertical : Orientation::Horizontal, len});
                covered += static_cast<std::size_t>(len);
            }
        }
    }
    if (covered != s.order()) return std::nullopt;
    return CentralLineWitness{line, std::move(runs)};
}

}  // namespace detail

/// Searches horizontal candidates by ascending row, then vertical ones by
/// ascending column, and returns the first central line found.
inline std::optional<CentralLineWitness> is_nice(const Shape& s) {
    if (!is_connected(s)) throw std::invalid_argument("nice check on disconnected shape");
    auto cells = s.sorted_cells();
    for (Cell c : cells) {  // (y,x) ascending
        if (s.contains({c.x - 1, c.y})) continue;  // not a run start
        auto run = maximal_run(s, c, Dir::Right);
        if (auto w = detail::check_central(s, run)) return w;
    }
    std::sort(cells.begin(), cells.end(), [](Cell a, Cell b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    for (Cell c : cells) {
        if (s.contains({c.x, c.y - 1})) continue;
        auto run = maximal_run(s, c, Dir::Up);
        if (run.length < 2) continue;  // degenerate verticals duplicate the horizontal scan
        if (auto w = detail::check_central(s, run)) return w;
    }
    return std::nullopt;
}

}  // namespace pushline
