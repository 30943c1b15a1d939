#pragma once

#include <optional>

#include "pushline/diagonal.hpp"
#include "pushline/nice_to_line.hpp"

namespace pushline {

/// Phase-boundary decomposition of the folding strategy: a diagonal part
/// joined at `base_point` to a parallelogram of stacked diagonal segments.
struct LadleDecomposition {
    Cell base_point;
    std::vector<Cell> diagonal_part;       // includes the base point
    std::vector<Cell> parallelogram_part;  // includes the base point
    int phase = 0;                         // stacked segment count
};

/// Recognises the ladle structure of a shape whose diagonal starts at the
/// origin. Returns nothing if the shape is not diagonal-plus-stack.
inline std::optional<LadleDecomposition> ladle_decomposition(const Shape& s) {
    if (!s.contains({0, 0})) return std::nullopt;
    int t = 0;
    while (s.contains({t + 1, t + 1}) && !s.contains({t, t + 1})) ++t;
    LadleDecomposition d;
    d.base_point = {t, t};
    for (int i = 0; i <= t; ++i) d.diagonal_part.push_back({i, i});
    int height = 1;
    for (Cell c : s.sorted_cells()) {
        if (c.x < t && c.y == c.x) continue;  // plain diagonal part
        if (c.x < t || c.y < c.x) return std::nullopt;
        if (c.y > c.x && !s.contains({c.x, c.y - 1})) return std::nullopt;
        d.parallelogram_part.push_back(c);
        height = std::max(height, c.y - c.x + 1);
    }
    if (d.diagonal_part.size() + d.parallelogram_part.size() != s.order() + 1) return std::nullopt;
    d.phase = height;
    return d;
}

/// Diagonal-to-line with connectivity preserved, by folding segments on
/// top of each other: each phase turns the stacked parallelogram into a
/// rectangle, pushes it over the next segment and staggers it back down.
/// The result after the last fold is a nice shape, which then straightens
/// in linear time.
inline Trace dlc_folding(int n) {
    Shape diag = make_diagonal(n);
    TraceBuilder b(diag);
    if (n == 1) return std::move(b).take();
    auto segs = detail::diagonal_segments(n);
    int w = segs.front().length;  // parallelogram width; the top segment is full

    // Parallelogram state: columns [base, base+w-1], column x spanning
    // rows [x, x+height-1]. Initially the topmost segment itself.
    int base = segs.front().base;
    int height = 1;
    for (std::size_t k = 1; k < segs.size(); ++k) {
        b.set_phase(std::to_string(k));
        const auto target = segs[k];

        // turn: drop the staggered columns into a rectangle on the base row
        std::vector<detail::RunShift> drops;
        for (int x = base + w - 1; x >= base; --x)
            drops.push_back({{x, x + height - 1}, Dir::Down, x - base});
        detail::wavefront(b, std::move(drops));

        // push: slide the rectangle rows over the next segment, top first
        for (int t = height - 1; t >= 0; --t)
            b.push_line({base + w - 1, base + t}, Dir::Left, target.length);

        // turn: stagger columns back down, one cell above the next
        // segment's nodes; columns beyond a short final segment stay put
        int nbase = base - target.length;
        std::vector<detail::RunShift> stagger;
        for (int x = nbase; x < nbase + w; ++x) {
            int descent = std::max(0, base - x - 1);
            stagger.push_back({{x, base + height - 1}, Dir::Down, descent});
        }
        detail::wavefront(b, std::move(stagger));

        base = nbase;
        height += 1;
    }

    b.set_phase("nice");
    Trace fold = std::move(b).take();
    Trace tail = nice_to_line(replay(fold).final);
    for (auto& l : tail.labels) l = "nice";
    append(fold, tail);
    return fold;
}

}  // namespace pushline
