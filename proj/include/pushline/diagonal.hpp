#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "pushline/builder.hpp"
#include "pushline/turns.hpp"

namespace pushline {

/// Cells {(i,i) : 0 <= i < n}; connected under the eight-neighbour rule.
inline Shape make_diagonal(int n) {
    if (n < 1) throw std::invalid_argument("diagonal order must be positive");
    Shape s;
    for (int i = 0; i < n; ++i) s.add({i, i});
    return s;
}

inline int isqrt_floor(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace detail {

/// A diagonal segment: cells (base..base+length-1, base..base+length-1).
struct Segment {
    int base = 0;
    int length = 0;
};

/// Top-to-bottom segment list: full segments of floor(sqrt n), with the
/// remainder (if any) as the bottom-left segment, processed last.
inline std::vector<Segment> diagonal_segments(int n) {
    int s = isqrt_floor(n);
    int q = n / s, r = n % s;
    std::vector<Segment> segs;
    for (int k = 1; k <= q; ++k) segs.push_back({n - k * s, s});
    if (r > 0) segs.push_back({0, r});
    return segs;
}

/// One run translated along its axis, one cell per participating round.
struct RunShift {
    Cell pusher;  // trailing end of the run (the cell that vacates first)
    Dir dir;
    int distance;
};

/// Interleaved translation: every run with remaining distance advances one
/// cell per round, in the given order. Keeps the staggering between
/// neighbouring runs at one cell, which is what preserves connectivity in
/// the folding/extending schedules. Callers order runs by descending
/// distance.
inline void wavefront(TraceBuilder& b, std::vector<RunShift> runs) {
    bool moved = true;
    for (int round = 1; moved; ++round) {
        moved = false;
        for (auto& r : runs) {
            if (r.distance < round) continue;
            b.push(r.pusher, r.dir);
            r.pusher = r.pusher + step(r.dir);
            moved = true;
        }
    }
}

}  // namespace detail

/// The uniform-partitioning plan: segment sizes and per-segment offsets
/// h_k (distance from each segment's base to the collection row).
struct PhasePlan {
    int segment_count = 0;
    int segment_length = 0;       // full-segment length, floor(sqrt n)
    std::vector<int> offsets;     // segment base rows, top to bottom
    int collection_row = 0;
};

inline PhasePlan plan_partitioning(int n) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    PhasePlan p;
    p.segment_length = isqrt_floor(n);
    p.collection_row = 0;
    for (auto seg : detail::diagonal_segments(n)) p.offsets.push_back(seg.base);
    p.segment_count = static_cast<int>(p.offsets.size());
    return p;
}

/// Diagonal-to-line via uniform partitioning. Per-segment line formation,
/// transfer to the bottom row, then one turn per segment. For square n the
/// step count is exactly n*sqrt(n) + n - 2*sqrt(n). Connectivity may break.
inline Trace dl_partitioning(int n) {
    Shape diag = make_diagonal(n);
    TraceBuilder b(diag);
    if (n == 1) return std::move(b).take();
    auto segs = detail::diagonal_segments(n);

    // Phase 1: within each segment, move every node to the segment's
    // leftmost column, topmost node first, one cell at a time.
    b.set_phase("1");
    for (auto seg : segs)
        for (int j = seg.length - 1; j >= 1; --j)
            b.slide_times({seg.base + j, seg.base + j}, Dir::Left, j);

    // Phase 2: push each vertical segment down to the collection row.
    b.set_phase("2");
    for (auto seg : segs)
        if (seg.base > 0)
            b.push_line({seg.base, seg.base + seg.length - 1}, Dir::Down, seg.base);

    // Phase 3: turn every segment into the collection row.
    b.set_phase("3");
    for (auto seg : segs) {
        LineSegment line{{seg.base, 0}, Orientation::Vertical, seg.length};
        detail::turn_line_moves(b, line, line.anchor, Dir::Right);
    }
    return std::move(b).take();
}

}  // namespace pushline
