#pragma once

#include <stdexcept>

#include "pushline/builder.hpp"

namespace pushline {

namespace detail {

/// The two-moves-per-node re-orientation schedule. The line swings around
/// `pivot` (one of its endpoints) into the perpendicular direction
/// `extend`; the pivot cell is occupied again when the turn completes.
/// Emits exactly 2*length - 2 moves.
inline void turn_line_moves(TraceBuilder& b, const LineSegment& line, Cell pivot, Dir extend) {
    int k = line.length;
    if (k <= 1) return;
    bool pivot_at_anchor = pivot == line.anchor;
    if (!pivot_at_anchor && pivot != line.back())
        throw std::invalid_argument("pivot is not a line endpoint");
    Cell along = pivot_at_anchor ? (line.at(1) - line.anchor) : (line.at(k - 2) - line.back());
    Dir toward_pivot;
    if (along == Cell{0, 1}) toward_pivot = Dir::Down;
    else if (along == Cell{0, -1}) toward_pivot = Dir::Up;
    else if (along == Cell{1, 0}) toward_pivot = Dir::Left;
    else toward_pivot = Dir::Right;
    bool vertical_line = line.orientation == Orientation::Vertical;
    if (vertical_line != (extend == Dir::Left || extend == Dir::Right))
        throw std::invalid_argument("turn must extend perpendicular to the line");

    for (int i = 1; i < k; ++i) {
        Cell target = pivot + Cell{step(extend).x * i, step(extend).y * i};
        if (b.shape().contains(target))
            throw std::invalid_argument("turn target region obstructed at " + to_string(target));
    }
    for (int j = 1; j < k; ++j) {
        b.push(pivot, extend);
        Cell far = pivot + Cell{along.x * (k - j), along.y * (k - j)};
        b.push(far, toward_pivot);
    }
}

/// One feed step moves one node of a perpendicular feeder into the main
/// line: vacate the junction by pushing the main line along itself, then
/// let the feeder close the gap. `junction` is the main-line cell the
/// feeder attaches to; `feeder_far` its far endpoint.
inline void absorb_feeder(TraceBuilder& b, Cell junction, Dir main_dir, Cell feeder_far,
                          Dir feeder_dir, int count) {
    for (int i = 0; i < count; ++i) {
        b.push(junction, main_dir);
        MoveEffect e = b.push(feeder_far, feeder_dir);
        if (e.filled != junction)
            throw std::logic_error("feeder did not close the junction gap at " +
                                   to_string(junction));
        feeder_far = feeder_far + step(feeder_dir);
    }
}

}  // namespace detail

/// Re-orients `line` into `target`, anchored at the line's minimum
/// endpoint, extending toward positive coordinates. Exactly 2k-2 moves.
inline Trace turn_line(const Shape& shape, const LineSegment& line, Orientation target) {
    for (int i = 0; i < line.length; ++i)
        if (!shape.contains(line.at(i)))
            throw std::invalid_argument("line not contained in shape");
    TraceBuilder b(shape);
    if (line.orientation == target) return std::move(b).take();
    Dir extend = line.orientation == Orientation::Vertical ? Dir::Right : Dir::Up;
    detail::turn_line_moves(b, line, line.anchor, extend);
    return std::move(b).take();
}

/// Sliding-model emulation: one push of a single node into an empty cell.
inline Trace emulate_slide(const Shape& shape, Cell node, Dir dir) {
    if (!shape.contains(node)) throw PusherEmpty(node);
    if (shape.contains(node + step(dir)))
        throw std::invalid_argument("slide target occupied at " + to_string(node + step(dir)));
    TraceBuilder b(shape);
    b.slide(node, dir);
    return std::move(b).take();
}

/// Rotation-model emulation: a quarter-turn of `node` around the
/// orthogonally-adjacent `pivot`, done as two slides through the corner
/// cell. Both the corner and the destination must be empty.
inline Trace emulate_rotate(const Shape& shape, Cell node, Cell pivot, bool clockwise = true) {
    if (!shape.contains(node)) throw PusherEmpty(node);
    if (!shape.contains(pivot)) throw std::invalid_argument("pivot unoccupied " + to_string(pivot));
    Cell rel = node - pivot;
    if (std::abs(rel.x) + std::abs(rel.y) != 1)
        throw std::invalid_argument("node not orthogonally adjacent to pivot");
    Cell rel2 = clockwise ? Cell{rel.y, -rel.x} : Cell{-rel.y, rel.x};
    Cell corner = pivot + rel + rel2;
    Cell target = pivot + rel2;
    if (shape.contains(corner) || shape.contains(target))
        throw std::invalid_argument("rotation cells occupied");
    TraceBuilder b(shape);
    b.slide(node, rel2 == Cell{0, 1}    ? Dir::Up
                  : rel2 == Cell{0, -1} ? Dir::Down
                  : rel2 == Cell{1, 0}  ? Dir::Right
                                        : Dir::Left);
    Cell back = target - corner;
    b.slide(corner, back == Cell{0, 1}    ? Dir::Up
                    : back == Cell{0, -1} ? Dir::Down
                    : back == Cell{1, 0}  ? Dir::Right
                                          : Dir::Left);
    return std::move(b).take();
}

}  // namespace pushline
