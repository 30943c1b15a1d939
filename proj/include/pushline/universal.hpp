#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "pushline/builder.hpp"
#include "pushline/congruence.hpp"
#include "pushline/turns.hpp"

namespace pushline {

/// A uniform tiling of the shape's enclosing box into d x d sub-boxes,
/// anchored at the bounding-box origin, with per-tile node counts.
struct BoxPartition {
    Cell origin;
    int box_side = 0;
    int sub_side = 0;
    std::map<std::pair<int, int>, int> occupancy;  // tile index -> nodes
};

inline BoxPartition box_partition(const Shape& s, int box_side, int d) {
    if (d < 1) throw std::invalid_argument("sub-box side must be positive");
    Bounds b = s.bounds();
    BoxPartition p;
    p.origin = {b.min_x, b.min_y};
    p.box_side = box_side;
    p.sub_side = d;
    for (Cell c : s.cells()) ++p.occupancy[{(c.x - b.min_x) / d, (c.y - b.min_y) / d}];
    return p;
}

inline int count_occupied_subboxes(const Shape& s, int d) {
    return static_cast<int>(box_partition(s, 0, d).occupancy.size());
}

/// True iff the occupied d x d tiles form a connected tile graph under
/// eight-adjacency.
inline bool occupied_superstructure_connected(const Shape& s, int d) {
    auto p = box_partition(s, 0, d);
    if (p.occupancy.empty()) return false;
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{p.occupancy.begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                std::pair<int, int> t{x + dx, y + dy};
                if (p.occupancy.count(t) && seen.insert(t).second) stack.push_back(t);
            }
    }
    return seen.size() == p.occupancy.size();
}

/// The aligned occupancy pattern every sub-box settles into between
/// doubling phases: complete rows (or columns) plus at most one partial
/// run aligned to the same corner.
struct SubBoxFill {
    int complete = 0;
    int partial_run = 0;
};

/// Checks one tile's cells against the fill pattern. `axis` Horizontal
/// means bottom-aligned rows with a left-aligned partial; Vertical means
/// left-aligned columns with a bottom-aligned partial.
inline std::optional<SubBoxFill> subbox_fill(const std::vector<Cell>& cells, Cell box_origin,
                                             int d, Orientation axis) {
    if (cells.empty()) return SubBoxFill{};
    int k = static_cast<int>(cells.size());
    int complete = k / d, partial = k % d;
    std::set<Cell> want;
    for (int i = 0; i < k; ++i) {
        int major = i / d, minor = i % d;
        if (axis == Orientation::Horizontal)
            want.insert({box_origin.x + minor, box_origin.y + major});
        else
            want.insert({box_origin.x + major, box_origin.y + minor});
    }
    std::set<Cell> got(cells.begin(), cells.end());
    if (want != got) return std::nullopt;
    return SubBoxFill{complete, partial};
}

namespace detail {

inline Cell swap_xy(Cell c) { return {c.y, c.x}; }

inline Dir swap_xy(Dir d) {
    switch (d) {
        case Dir::Up: return Dir::Right;
        case Dir::Right: return Dir::Up;
        case Dir::Down: return Dir::Left;
        case Dir::Left: return Dir::Down;
    }
    std::abort();
}

inline Shape swap_xy(const Shape& s) {
    Shape out;
    for (Cell c : s.cells()) out.add(swap_xy(c));
    return out;
}

inline int ceil_sqrt(int n) {
    int r = 1;
    while (r * r < n) ++r;
    return r;
}

/// Contiguous horizontal fragments of the current shape inside one box
/// row, left to right.
inline std::vector<std::pair<int, int>> row_fragments(const Shape& s, int y, int x0, int x1) {
    std::vector<std::pair<int, int>> frags;  // [start, end] inclusive
    int x = x0;
    while (x <= x1) {
        if (!s.contains({x, y})) {
            ++x;
            continue;
        }
        int start = x;
        while (x <= x1 && s.contains({x, y})) ++x;
        frags.push_back({start, x - 1});
    }
    return frags;
}

/// Packs every row of the box flush against its left edge.
inline void pack_rows_left(TraceBuilder& b, Cell box, int d) {
    for (int y = box.y; y < box.y + d; ++y) {
        int next = box.x;
        for (auto [x0, x1] : row_fragments(b.shape(), y, box.x, box.x + d - 1)) {
            if (x0 > next) b.push_line({x1, y}, Dir::Left, x0 - next);
            next += x1 - x0 + 1;
        }
    }
}

/// Fills the leftmost columns of the box from its left-anchored rows:
/// each column takes one junction cell per row plus lifted cells, two
/// moves per lifted node, then compacts to the box floor. Lifts that
/// would spill over the box top are preceded by a gap-filling down-push,
/// so no move ever leaves the box.
inline void fill_columns_left(TraceBuilder& b, Cell box, int d) {
    // remaining row runs, top to bottom: (y, length), all anchored at col
    std::vector<std::pair<int, int>> rows;
    long total = 0;
    for (int y = box.y + d - 1; y >= box.y; --y) {
        int len = 0;
        while (len < d && b.shape().contains({box.x + len, y})) ++len;
        if (len > 0) {
            rows.push_back({y, len});
            total += len;
        }
    }
    int top_y = box.y + d - 1;
    for (int col = box.x; total > 0; ++col) {
        int quota = static_cast<int>(std::min<long>(d, total));
        int anchors = static_cast<int>(rows.size());
        int lifts = quota - anchors;
        auto run_top = [&](int from_y) {
            int y = from_y;
            while (y < top_y && b.shape().contains({col, y + 1})) ++y;
            return y;
        };
        for (auto& [y, len] : rows) {
            int donate = std::min(len - 1, lifts);
            for (int g = 0; g < donate; ++g) {
                // lift upward while there is headroom, otherwise drop the
                // junction into a gap below; either way (col, y) vacates
                b.push({col, y}, run_top(y) == top_y ? Dir::Down : Dir::Up);
                MoveEffect e = b.push({col + len - 1 - g, y}, Dir::Left);
                if (e.filled != Cell{col, y})
                    throw std::logic_error("column fill lost its junction");
            }
            len -= donate;
            lifts -= donate;
        }
        if (lifts != 0) throw std::logic_error("column fill quota not met");
        // compact this column onto the box floor
        int count = quota;
        auto column_packed = [&] {
            for (int y = box.y; y < box.y + count; ++y)
                if (!b.shape().contains({col, y})) return false;
            return true;
        };
        while (!column_packed()) {
            int t = box.y + d - 1;
            while (!b.shape().contains({col, t})) --t;
            b.push({col, t}, Dir::Down);
        }
        // rows shed their junction cell and advance to the next column
        std::vector<std::pair<int, int>> next_rows;
        for (auto [y, len] : rows)
            if (len - 1 > 0) next_rows.push_back({y, len - 1});
        rows = std::move(next_rows);
        total -= quota;
    }
}

/// Absorbs left-anchored rows (given top to bottom) into the column at
/// `coord`: the stack of already-gathered cells rides the junction pushes
/// upward and is pushed down over any row gap first. Ends as one
/// contiguous vertical run starting at the lowest row.
inline void gather_rows_into_column(TraceBuilder& b, int coord,
                                    const std::vector<std::pair<int, int>>& rows) {
    bool have_stack = false;
    long count = 0;
    int stack_lo = 0, stack_hi = 0;
    for (auto [y, len] : rows) {
        if (have_stack && stack_lo > y + len) {
            int gap = stack_lo - (y + len);
            b.push_line({coord, stack_hi}, Dir::Down, gap);
            stack_lo -= gap;
            stack_hi -= gap;
        }
        absorb_feeder(b, {coord, y}, Dir::Up, {coord + len - 1, y}, Dir::Left, len - 1);
        count += len;
        stack_lo = y;
        stack_hi = y + static_cast<int>(count) - 1;
        have_stack = true;
    }
}

/// One doubling phase in the "columns" orientation over every occupied
/// D x D box of the grid anchored at `anchor`.
inline void doubling_phase_left(TraceBuilder& b, Cell anchor, int box_grid, int D) {
    (void)box_grid;
    std::set<std::pair<int, int>> occupied;
    for (Cell c : b.shape().cells())
        occupied.insert({(c.y - anchor.y) / D, (c.x - anchor.x) / D});
    for (auto [by, bx] : occupied) {
        Cell box{anchor.x + bx * D, anchor.y + by * D};
        pack_rows_left(b, box, D);
        fill_columns_left(b, box, D);
    }
}

}  // namespace detail

/// Any connected shape into a spanning line via a single sqrt-sized
/// partitioning: gather each sub-box onto its bottom rows, slide the rows
/// to the left boundary, then fold everything into one vertical line.
inline Trace u_box_partitioning(const Shape& shape) {
    if (!is_connected(shape)) throw std::invalid_argument("input shape must be connected");
    TraceBuilder b(shape);
    if (as_line(shape)) return std::move(b).take();  // already a line
    int n = static_cast<int>(shape.order());
    Bounds bb = shape.bounds();
    int d = detail::ceil_sqrt(n);
    int grid = (std::max(bb.width(), bb.height()) + d - 1) / d;

    b.set_phase("A");
    for (int by = 0; by < grid; ++by)
        for (int bx = 0; bx < grid; ++bx) {
            Cell box{bb.min_x + bx * d, bb.min_y + by * d};
            std::set<Cell> unplaced;
            for (int y = box.y; y < box.y + d; ++y)
                for (int x = box.x; x < box.x + d; ++x)
                    if (b.shape().contains({x, y})) unplaced.insert({x, y});
            int k = static_cast<int>(unplaced.size());
            for (int j = 0; j < k; ++j) {
                Cell t{box.x + j % d, box.y + j / d};
                // prefer the lowest node already in the target column
                std::optional<Cell> src;
                for (Cell c : unplaced)
                    if (c.x == t.x && c.y >= t.y) {
                        src = c;
                        break;
                    }
                if (src) {
                    unplaced.erase(*src);
                    b.slide_times(*src, Dir::Down, src->y - t.y);
                    continue;
                }
                // otherwise the lowest node, nearest column first
                Cell best{0, 0};
                bool have = false;
                for (Cell c : unplaced) {
                    if (!have || std::make_tuple(c.y, std::abs(c.x - t.x), c.x) <
                                     std::make_tuple(best.y, std::abs(best.x - t.x), best.x)) {
                        best = c;
                        have = true;
                    }
                }
                unplaced.erase(best);
                Dir h = best.x < t.x ? Dir::Right : Dir::Left;
                b.slide_times(best, h, std::abs(best.x - t.x));
                b.slide_times({t.x, best.y}, Dir::Down, best.y - t.y);
            }
        }

    b.set_phase("B");
    Bounds cur = b.shape().bounds();
    for (int y = cur.min_y; y <= cur.max_y; ++y) {
        int next = bb.min_x;
        for (auto [x0, x1] : detail::row_fragments(b.shape(), y, bb.min_x, cur.max_x)) {
            if (x0 > next) b.push_line({x1, y}, Dir::Left, x0 - next);
            next += x1 - x0 + 1;
        }
    }

    b.set_phase("C");
    {
        std::vector<std::pair<int, int>> rows;  // (y, len), top first
        Bounds rb = b.shape().bounds();
        for (int y = rb.max_y; y >= rb.min_y; --y) {
            int len = 0;
            while (b.shape().contains({bb.min_x + len, y})) ++len;
            if (len > 0) rows.push_back({y, len});
        }
        detail::gather_rows_into_column(b, bb.min_x, rows);
    }
    return std::move(b).take();
}

/// Any connected shape into a spanning line in log-many phases of
/// doubling sub-box side, alternating column and row alignment.
inline Trace u_box_doubling(const Shape& shape) {
    if (!is_connected(shape)) throw std::invalid_argument("input shape must be connected");
    TraceBuilder b(shape);
    if (as_line(shape)) return std::move(b).take();
    int n = static_cast<int>(shape.order());
    int N = 1;
    while (N < n) N *= 2;
    Bounds bb = shape.bounds();
    Cell anchor{bb.min_x, bb.min_y};
    int phases = 0;
    while ((1 << phases) < N) ++phases;

    for (int i = 1; i <= phases; ++i) {
        b.set_phase(std::to_string(i));
        int D = 1 << i;
        int grid = N / D;
        if (i % 2 == 1) {
            detail::doubling_phase_left(b, anchor, grid, D);
        } else {
            // transpose, run the same phase, and mirror the moves back
            TraceBuilder tb(detail::swap_xy(b.shape()));
            detail::doubling_phase_left(tb, detail::swap_xy(anchor), grid, D);
            for (const Move& m : tb.trace().moves)
                b.push(detail::swap_xy(m.pusher), detail::swap_xy(m.dir));
        }
    }
    return std::move(b).take();
}

enum class UniversalStrategy { BoxPartitioning, BoxDoubling };

/// Source to (a congruent placement of) target: straighten the source,
/// then run the target's straightening backwards, rotated and translated
/// so the two intermediate lines coincide.
inline Trace transform_shapes(const Shape& source, const Shape& target, UniversalStrategy strat) {
    if (source.order() != target.order())
        throw std::invalid_argument("source and target must have equal order");
    auto to_line = [&](const Shape& s) {
        return strat == UniversalStrategy::BoxPartitioning ? u_box_partitioning(s)
                                                           : u_box_doubling(s);
    };
    Trace ts = to_line(source);
    Trace tt = to_line(target);
    Shape ls = replay(ts).final;
    Trace back = reverse_trace(tt);
    for (auto& l : back.labels) l = "rev." + l;
    auto lsl = as_line(ls);
    auto btl = as_line(back.initial);
    if (!lsl || !btl) throw std::logic_error("straightening did not produce a line");
    if (lsl->orientation != btl->orientation) {
        back = rotated_cw(back);
        btl = as_line(back.initial);
    }
    Cell delta = lsl->anchor - btl->anchor;
    back = translated(back, delta.x, delta.y);
    Trace whole = std::move(ts);
    append(whole, back);
    return whole;
}

/// Straightens lines perpendicular to a boundary column or row into the
/// spanning line on that boundary. Two moves per node off the boundary;
/// stacking gaps additionally cost one move per empty cell crossed.
inline Trace gather_perpendicular_lines(const Shape& shape, Orientation boundary_orientation,
                                        int boundary_coord) {
    // canonical form: vertical boundary column, lines extending right
    int rot = 0;  // clockwise quarter turns applied to reach canonical form
    Shape work = shape;
    int coord = boundary_coord;
    if (boundary_orientation == Orientation::Horizontal) {
        // row y=c maps to column x=c under one clockwise turn
        work = work.rotated_cw();
        rot = 1;
    }
    {
        Bounds wb = work.bounds();
        if (wb.min_x != coord && wb.max_x == coord) {
            work = work.rotated_cw().rotated_cw();
            rot += 2;
            coord = -coord;
        }
    }
    Bounds wb = work.bounds();
    if (wb.min_x != coord)
        throw std::invalid_argument("shape does not touch the boundary from one side");
    TraceBuilder b(work);
    if (!as_line(work)) {
        std::vector<std::pair<int, int>> rows;
        for (int y = wb.max_y; y >= wb.min_y; --y) {
            int len = 0;
            while (b.shape().contains({coord + len, y})) ++len;
            int width = 0;
            for (int x = coord; x <= wb.max_x; ++x)
                if (b.shape().contains({x, y})) ++width;
            if (width != len) throw std::invalid_argument("row not anchored at the boundary");
            if (len > 0) rows.push_back({y, len});
        }
        detail::gather_rows_into_column(b, coord, rows);
    }
    Trace t = std::move(b).take();
    for (; rot % 4 != 0; ++rot) t = rotated_cw(t);
    return t;
}

}  // namespace pushline
