#pragma once

#include <stdexcept>

#include "pushline/shape.hpp"

namespace pushline {

/// One step: the chosen node and the direction it pushes. The moved line
/// is always the maximal contiguous run ahead of the pusher.
struct Move {
    Cell pusher;
    Dir dir = Dir::Up;
    friend bool operator==(const Move&, const Move&) = default;
};

/// Net occupancy change of a move: the pusher's cell empties and the
/// first empty cell beyond the run fills. Cells in between stay occupied.
struct MoveEffect {
    Cell vacated;
    Cell filled;
    int pushed_length = 1;
    friend bool operator==(const MoveEffect&, const MoveEffect&) = default;
};

struct PusherEmpty : std::invalid_argument {
    explicit PusherEmpty(Cell c) : std::invalid_argument("pusher unoccupied " + to_string(c)) {}
};

/// On the unbounded grid every occupied pusher yields a valid effect.
inline MoveEffect validate_move(const Shape& s, Move m) {
    if (!s.contains(m.pusher)) throw PusherEmpty(m.pusher);
    Cell d = step(m.dir);
    Cell end = m.pusher;
    int len = 1;
    while (s.contains(end + d)) {
        end = end + d;
        ++len;
    }
    return {m.pusher, end + d, len};
}

inline Shape apply_move(const Shape& s, Move m) {
    MoveEffect e = validate_move(s, m);
    Shape out = s;
    out.move_cell(e.vacated, e.filled);
    return out;
}

/// The move that undoes `m` from the post-move configuration.
inline Move reverse_move(const Shape& after, Move m, const MoveEffect& e) {
    if (!after.contains(e.filled) || after.contains(e.vacated))
        throw std::invalid_argument("effect inconsistent with post-move shape");
    return {e.filled, opposite(m.dir)};
}

}  // namespace pushline
