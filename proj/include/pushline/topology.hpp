#pragma once

#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pushline/shape.hpp"

namespace pushline {

namespace detail {

/// Empty cells inside the bounding box (inflated by one) that can reach
/// the outside moving only vertically/horizontally. Everything empty and
/// not exterior is enclosed.
inline std::unordered_set<Cell, CellHash> exterior_cells(const Shape& s) {
    Bounds b = s.bounds();
    Bounds frame{b.min_x - 1, b.min_y - 1, b.max_x + 1, b.max_y + 1};
    std::unordered_set<Cell, CellHash> seen;
    std::vector<Cell> stack{{frame.min_x, frame.min_y}};
    seen.insert(stack.back());
    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        for (Dir d : all_dirs) {
            Cell n = c + step(d);
            if (!frame.contains(n) || s.contains(n)) continue;
            if (seen.insert(n).second) stack.push_back(n);
        }
    }
    return seen;
}

}  // namespace detail

/// Maximal orthogonally-connected pockets of empty cells with no
/// orthogonal escape to infinity.
inline std::vector<std::vector<Cell>> find_holes(const Shape& s) {
    if (s.empty()) return {};
    auto exterior = detail::exterior_cells(s);
    Bounds b = s.bounds();
    std::unordered_set<Cell, CellHash> assigned;
    std::vector<std::vector<Cell>> holes;
    for (int y = b.min_y; y <= b.max_y; ++y)
        for (int x = b.min_x; x <= b.max_x; ++x) {
            Cell c{x, y};
            if (s.contains(c) || exterior.count(c) || assigned.count(c)) continue;
            std::vector<Cell> hole;
            std::vector<Cell> stack{c};
            assigned.insert(c);
            while (!stack.empty()) {
                Cell h = stack.back();
                stack.pop_back();
                hole.push_back(h);
                for (Dir d : all_dirs) {
                    Cell n = h + step(d);
                    if (s.contains(n) || exterior.count(n) || assigned.count(n)) continue;
                    assigned.insert(n);
                    stack.push_back(n);
                }
            }
            std::sort(hole.begin(), hole.end());
            holes.push_back(std::move(hole));
        }
    return holes;
}

/// The shape with every hole filled in.
inline Shape compact(const Shape& s) {
    Shape out = s;
    for (const auto& hole : find_holes(s))
        for (Cell c : hole) out.add(c);
    return out;
}

/// One unit edge of the perimeter polygon, given by its two lattice
/// endpoints. Cell (x,y) spans corners (x,y)..(x+1,y+1).
struct PerimeterWalk {
    std::size_t edge_count = 0;
    std::vector<Cell> vertices;  // closed walk; front() == back()
};

/// The outer boundary polygon of compact(s), as an edge count plus an
/// ordered vertex walk. Not a first-class domain type; tests use it to
/// pin down what "perimeter" means.
inline PerimeterWalk perimeter_walk(const Shape& s) {
    if (!is_connected(s)) throw std::invalid_argument("perimeter of disconnected shape");
    Shape solid = compact(s);
    auto exterior = detail::exterior_cells(solid);
    auto outside = [&](Cell c) { return !solid.contains(c); };

    // Directed boundary edges, walked with the solid on the right.
    std::map<Cell, Cell> next;  // from corner -> to corner
    std::size_t edges = 0;
    for (Cell c : solid.sorted_cells()) {
        (void)exterior;
        if (outside({c.x, c.y - 1})) {  // bottom edge, walk +x
            next[{c.x, c.y}] = {c.x + 1, c.y};
            ++edges;
        }
        if (outside({c.x + 1, c.y})) {  // right edge, walk +y
            next[{c.x + 1, c.y}] = {c.x + 1, c.y + 1};
            ++edges;
        }
        if (outside({c.x, c.y + 1})) {  // top edge, walk -x
            next[{c.x + 1, c.y + 1}] = {c.x, c.y + 1};
            ++edges;
        }
        if (outside({c.x - 1, c.y})) {  // left edge, walk -y
            next[{c.x, c.y + 1}] = {c.x, c.y};
            ++edges;
        }
    }
    PerimeterWalk w;
    w.edge_count = edges;
    if (next.empty()) return w;
    Cell start = next.begin()->first;
    Cell cur = start;
    do {
        w.vertices.push_back(cur);
        auto it = next.find(cur);
        if (it == next.end()) throw std::logic_error("broken perimeter walk");
        cur = it->second;
    } while (cur != start);
    w.vertices.push_back(start);
    return w;
}

/// Empty cells touching the perimeter polygon by an edge or a corner.
inline Shape surrounded_layer(const Shape& s) {
    if (!is_connected(s)) throw std::invalid_argument("surrounded layer of disconnected shape");
    Shape solid = compact(s);
    Shape layer;
    std::unordered_set<Cell, CellHash> seen;
    for (Cell c : solid.cells())
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                Cell n{c.x + dx, c.y + dy};
                if (!solid.contains(n) && seen.insert(n).second) layer.add(n);
            }
    return layer;
}

/// Cells of the shape with at least one side on the perimeter polygon.
inline Shape external_surface(const Shape& s) {
    if (!is_connected(s)) throw std::invalid_argument("external surface of disconnected shape");
    Shape solid = compact(s);
    Shape surf;
    for (Cell c : s.cells())
        for (Dir d : all_dirs)
            if (!solid.contains(c + step(d))) {
                surf.add(c);
                break;
            }
    return surf;
}

}  // namespace pushline
