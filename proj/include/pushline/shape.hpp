#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "pushline/cell.hpp"

namespace pushline {

struct Bounds {
    int min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    int width() const { return max_x - min_x + 1; }
    int height() const { return max_y - min_y + 1; }
    bool contains(Cell c) const {
        return c.x >= min_x && c.x <= max_x && c.y >= min_y && c.y <= max_y;
    }
};

enum class Orientation { Horizontal, Vertical };

/// A maximal or explicit straight run of cells. `anchor` is the
/// minimum-coordinate endpoint and `length` counts the covered cells.
struct LineSegment {
    Cell anchor;
    Orientation orientation = Orientation::Horizontal;
    int length = 1;

    Cell at(int i) const {
        return orientation == Orientation::Horizontal ? Cell{anchor.x + i, anchor.y}
                                                      : Cell{anchor.x, anchor.y + i};
    }
    Cell back() const { return at(length - 1); }
    friend bool operator==(const LineSegment&, const LineSegment&) = default;
};

/// A finite set of occupied cells. The configuration state of the whole
/// system; everything else in the library is a function of these.
class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<Cell> cells) {
        for (Cell c : cells) add(c);
    }
    Shape(std::initializer_list<Cell> cells) {
        for (Cell c : cells) add(c);
    }

    std::size_t order() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    bool contains(Cell c) const { return cells_.count(c) != 0; }

    void add(Cell c) {
        if (!cells_.insert(c).second)
            throw std::invalid_argument("duplicate cell " + to_string(c));
    }
    void remove(Cell c) {
        if (cells_.erase(c) == 0)
            throw std::invalid_argument("cell not present " + to_string(c));
    }
    /// One line-move's net effect on occupancy.
    void move_cell(Cell from, Cell to) {
        remove(from);
        add(to);
    }

    const std::unordered_set<Cell, CellHash>& cells() const { return cells_; }

    /// Cells in (y, x) ascending order; the stable iteration order used by
    /// writers and anything else that must be deterministic.
    std::vector<Cell> sorted_cells() const {
        std::vector<Cell> v(cells_.begin(), cells_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

    Bounds bounds() const {
        if (cells_.empty()) throw std::logic_error("bounds of empty shape");
        Bounds b{cells_.begin()->x, cells_.begin()->y, cells_.begin()->x, cells_.begin()->y};
        for (Cell c : cells_) {
            b.min_x = std::min(b.min_x, c.x);
            b.min_y = std::min(b.min_y, c.y);
            b.max_x = std::max(b.max_x, c.x);
            b.max_y = std::max(b.max_y, c.y);
        }
        return b;
    }

    Shape translated(int dx, int dy) const {
        Shape s;
        for (Cell c : cells_) s.cells_.insert({c.x + dx, c.y + dy});
        return s;
    }

    /// Quarter-turn clockwise about the origin.
    Shape rotated_cw() const {
        Shape s;
        for (Cell c : cells_) s.cells_.insert(rotate_cw(c));
        return s;
    }

    /// Translation-normalized copy: min x = min y = 0.
    Shape normalized() const {
        Bounds b = bounds();
        return translated(-b.min_x, -b.min_y);
    }

    friend bool operator==(const Shape& a, const Shape& b) { return a.cells_ == b.cells_; }

private:
    std::unordered_set<Cell, CellHash> cells_;
};

/// Neighbourhood connectivity: nodes touching by edge or corner count as
/// adjacent. Hole detection deliberately uses the stricter 4-neighbour
/// rule instead (see topology.hpp).
inline bool is_connected(const Shape& s) {
    if (s.empty()) return false;
    if (s.order() == 1) return true;
    std::unordered_set<Cell, CellHash> seen;
    std::vector<Cell> stack{*s.cells().begin()};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                if (dx == 0 && dy == 0) continue;
                Cell n{c.x + dx, c.y + dy};
                if (s.contains(n) && seen.insert(n).second) stack.push_back(n);
            }
    }
    return seen.size() == s.order();
}

/// The contiguous occupied run starting at `from` and extending in `dir`,
/// up to (excluding) the first empty cell.
inline LineSegment maximal_run(const Shape& s, Cell from, Dir dir) {
    if (!s.contains(from)) throw std::invalid_argument("run start unoccupied " + to_string(from));
    Cell d = step(dir);
    Cell end = from;
    while (s.contains(end + d)) end = end + d;
    Cell anchor = std::min(from, end);
    Orientation o = (dir == Dir::Left || dir == Dir::Right) ? Orientation::Horizontal
                                                            : Orientation::Vertical;
    int len = std::abs(end.x - from.x) + std::abs(end.y - from.y) + 1;
    return {anchor, o, len};
}

/// Present iff the shape is one straight horizontal or vertical run.
/// A single cell reports as horizontal.
inline std::optional<LineSegment> as_line(const Shape& s) {
    if (s.empty()) return std::nullopt;
    auto cells = s.sorted_cells();
    Cell a = cells.front();
    if (s.order() == 1) return LineSegment{a, Orientation::Horizontal, 1};
    bool horiz = cells[1].y == a.y;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        Cell want = horiz ? Cell{a.x + static_cast<int>(i), a.y}
                          : Cell{a.x, a.y + static_cast<int>(i)};
        if (cells[i] != want) return std::nullopt;
    }
    return LineSegment{a, horiz ? Orientation::Horizontal : Orientation::Vertical,
                       static_cast<int>(s.order())};
}

}  // namespace pushline
