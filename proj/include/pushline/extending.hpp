#pragma once

#include <optional>

#include "pushline/diagonal.hpp"

namespace pushline {

/// Phase-boundary decomposition of the extending strategy: the remaining
/// diagonal plus one straight line, meeting at the diagonal's top node.
struct TShapeDecomposition {
    Cell base_point;
    std::vector<Cell> diagonal_part;  // includes the base point
    std::vector<Cell> line_part;      // includes the base point
    int phase = 0;                    // absorbed segment count
};

inline std::optional<TShapeDecomposition> tshape_decomposition(const Shape& s) {
    if (!s.contains({0, 0})) return std::nullopt;
    int t = 0;
    while (s.contains({t + 1, t + 1})) ++t;
    TShapeDecomposition d;
    d.base_point = {t, t};
    for (int i = 0; i <= t; ++i) d.diagonal_part.push_back({i, i});
    Shape rest;
    rest.add(d.base_point);
    for (Cell c : s.sorted_cells())
        if (c != d.base_point && !(c.y == c.x && c.x < t)) rest.add(c);
    auto line = as_line(rest);
    if (!line) return std::nullopt;
    for (int i = 0; i < line->length; ++i) d.line_part.push_back(line->at(i));
    return d;
}

/// Diagonal-to-line with connectivity preserved, by growing one straight
/// line: each phase advances the line alongside the next segment, turns
/// that segment flat, and re-orients the line onto it. The line alternates
/// between vertical and horizontal as it grows.
inline Trace dlc_extending(int n) {
    Shape diag = make_diagonal(n);
    TraceBuilder b(diag);
    if (n == 1) return std::move(b).take();
    auto segs = detail::diagonal_segments(n);

    // Phase 1: the topmost segment becomes a vertical line on its own
    // leftmost column, nodes sliding left in interleaved rounds.
    b.set_phase("p1.turn");
    {
        auto seg = segs.front();
        std::vector<detail::RunShift> shifts;
        for (int j = seg.length - 1; j >= 1; --j)
            shifts.push_back({{seg.base + j, seg.base + j}, Dir::Left, j});
        detail::wavefront(b, std::move(shifts));
    }
    bool vertical = true;
    int line_len = segs.front().length;
    // vertical: column `col`, rows [lo, lo+line_len-1];
    // horizontal: row `row`, cols [lo, lo+line_len-1]
    int col = segs.front().base, row = 0, lo = segs.front().base;

    for (std::size_t k = 1; k < segs.size(); ++k) {
        const auto seg = segs[k];
        std::string tag = "p" + std::to_string(k + 1);

        b.set_phase(tag + ".push");
        if (vertical) {
            b.push_line({col, lo + line_len - 1}, Dir::Down, seg.length);
            lo -= seg.length;
        } else {
            b.push_line({lo + line_len - 1, row}, Dir::Left, seg.length);
            lo -= seg.length;
        }

        b.set_phase(tag + ".turn");
        std::vector<detail::RunShift> shifts;
        if (vertical) {
            // segment drops onto its base row, sheltered by the line column
            for (int j = seg.length - 1; j >= 1; --j)
                shifts.push_back({{seg.base + j, seg.base + j}, Dir::Down, j});
        } else {
            for (int j = seg.length - 1; j >= 1; --j)
                shifts.push_back({{seg.base + j, seg.base + j}, Dir::Left, j});
        }
        detail::wavefront(b, std::move(shifts));

        b.set_phase(tag + ".extend");
        if (vertical) {
            // line column sits one right of the flattened segment; swing it
            // onto the segment's row, then the shape is one horizontal line
            LineSegment line{{col, lo}, Orientation::Vertical, line_len};
            detail::turn_line_moves(b, line, line.anchor, Dir::Right);
            vertical = false;
            row = seg.base;
            lo = seg.base;
        } else {
            LineSegment line{{lo, row}, Orientation::Horizontal, line_len};
            detail::turn_line_moves(b, line, line.anchor, Dir::Up);
            vertical = true;
            col = seg.base;
            lo = seg.base;
        }
        line_len += seg.length;
    }
    return std::move(b).take();
}

}  // namespace pushline
