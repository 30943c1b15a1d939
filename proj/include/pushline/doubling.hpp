#pragma once

#include <optional>

#include "pushline/diagonal.hpp"

namespace pushline {

enum class LineRole { Free, Stationary };

/// The doubling strategy's configuration between phases: vertical lines
/// on a staircase, alternating free/stationary from the top-right.
struct DoublingState {
    int phase = 0;
    std::vector<LineSegment> lines;  // bottom-left to top-right
    std::vector<LineRole> roles;
};

/// Decomposes a shape into maximal vertical lines and assigns roles.
/// Returns nothing unless the lines are disjoint in both axes and ordered
/// bottom-left to top-right.
inline std::optional<DoublingState> doubling_state(const Shape& s, int phase) {
    std::vector<LineSegment> lines;
    for (Cell c : s.sorted_cells()) {
        if (s.contains({c.x, c.y - 1})) continue;
        lines.push_back(maximal_run(s, c, Dir::Up));
    }
    std::sort(lines.begin(), lines.end(),
              [](const LineSegment& a, const LineSegment& b) { return a.anchor.x < b.anchor.x; });
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].anchor.x <= lines[i - 1].anchor.x) return std::nullopt;
        if (lines[i].anchor.y <= lines[i - 1].back().y) return std::nullopt;
    }
    DoublingState d;
    d.phase = phase;
    d.lines = std::move(lines);
    for (std::size_t i = 0; i < d.lines.size(); ++i) {
        // label 1 is the top-right line and labels alternate from there
        std::size_t from_top = d.lines.size() - i;
        d.roles.push_back(from_top % 2 == 1 ? LineRole::Free : LineRole::Stationary);
    }
    return d;
}

namespace detail {

/// A vertical line on the staircase.
struct VLine {
    int col = 0;
    int bottom = 0;
    int len = 0;
};

/// Merges the free line (up-right) onto the stationary one below-left:
/// swing horizontal at the free line's base row, travel to the stationary
/// column, swing vertical, drop onto the stack. Costs 4k-3 when both
/// lines have length k at staircase distance k.
inline void merge_lines(TraceBuilder& b, const VLine& free, const VLine& stat) {
    LineSegment fl{{free.col, free.bottom}, Orientation::Vertical, free.len};
    turn_line_moves(b, fl, fl.anchor, Dir::Left);
    // now horizontal: row free.bottom, cols [free.col-len+1, free.col]
    int left = free.col - free.len + 1;
    if (left > stat.col)
        b.push_line({free.col, free.bottom}, Dir::Left, left - stat.col);
    else if (left < stat.col)
        b.push_line({left, free.bottom}, Dir::Right, stat.col - left);
    // now row free.bottom, cols [stat.col, stat.col+len-1]
    LineSegment hl{{stat.col, free.bottom}, Orientation::Horizontal, free.len};
    turn_line_moves(b, hl, hl.anchor, Dir::Up);
    // now column stat.col, rows [free.bottom, free.bottom+len-1]
    int drop = free.bottom - (stat.bottom + stat.len);
    if (drop > 0) b.push_line({stat.col, free.bottom + free.len - 1}, Dir::Down, drop);
}

}  // namespace detail

/// Diagonal-to-line by successive doubling: lines pair up and merge along
/// shortest paths, halving the line count each phase. Connectivity may
/// break. For powers of two the step count is exactly 2n*log2(n) - 3n + 3.
inline Trace dl_doubling(int n) {
    Shape diag = make_diagonal(n);
    TraceBuilder b(diag);
    if (n == 1) return std::move(b).take();
    std::vector<detail::VLine> lines;  // bottom-left to top-right
    for (int i = 0; i < n; ++i) lines.push_back({i, i, 1});

    for (int phase = 1; lines.size() > 1; ++phase) {
        b.set_phase(std::to_string(phase));
        std::vector<detail::VLine> next;
        // pair from the top-right; an odd leftover at the bottom-left is
        // carried into the next phase unchanged
        std::size_t m = lines.size();
        for (std::size_t i = m; i >= 2; i -= 2) {
            detail::VLine free = lines[i - 1];
            detail::VLine stat = lines[i - 2];
            detail::merge_lines(b, free, stat);
            next.push_back({stat.col, stat.bottom, stat.len + free.len});
            if (i == 3) {
                next.push_back(lines[0]);
                break;
            }
            if (i == 2) break;
        }
        std::reverse(next.begin(), next.end());
        lines = std::move(next);
    }
    return std::move(b).take();
}

}  // namespace pushline
