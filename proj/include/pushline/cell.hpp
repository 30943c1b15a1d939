#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace pushline {

/// A lattice cell. x is the column, y the row; the grid is unbounded in
/// all four directions, so coordinates are signed.
struct Cell {
    int x = 0;
    int y = 0;

    friend constexpr bool operator==(Cell a, Cell b) = default;
    // Ordered by (y, x); this is also the canonical writer order.
    friend constexpr auto operator<=>(Cell a, Cell b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        return a.x <=> b.x;
    }

    constexpr Cell operator+(Cell d) const { return {x + d.x, y + d.y}; }
    constexpr Cell operator-(Cell d) const { return {x - d.x, y - d.y}; }
};

enum class Dir : std::uint8_t { Up, Down, Left, Right };

constexpr std::array<Dir, 4> all_dirs{Dir::Up, Dir::Down, Dir::Left, Dir::Right};

constexpr Cell step(Dir d) {
    switch (d) {
        case Dir::Up: return {0, 1};
        case Dir::Down: return {0, -1};
        case Dir::Left: return {-1, 0};
        case Dir::Right: return {1, 0};
    }
    std::abort();
}

constexpr Dir opposite(Dir d) {
    switch (d) {
        case Dir::Up: return Dir::Down;
        case Dir::Down: return Dir::Up;
        case Dir::Left: return Dir::Right;
        case Dir::Right: return Dir::Left;
    }
    std::abort();
}

constexpr char dir_char(Dir d) {
    switch (d) {
        case Dir::Up: return 'U';
        case Dir::Down: return 'D';
        case Dir::Left: return 'L';
        case Dir::Right: return 'R';
    }
    std::abort();
}

/// Quarter-turn clockwise: (x,y) -> (y,-x).
constexpr Cell rotate_cw(Cell c) { return {c.y, -c.x}; }

constexpr Dir rotate_cw(Dir d) {
    switch (d) {
        case Dir::Up: return Dir::Right;
        case Dir::Right: return Dir::Down;
        case Dir::Down: return Dir::Left;
        case Dir::Left: return Dir::Up;
    }
    std::abort();
}

struct CellHash {
    std::size_t operator()(Cell c) const {
        std::uint64_t v = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                          static_cast<std::uint32_t>(c.y);
        v ^= v >> 33;
        v *= 0xff51afd7ed558ccdULL;
        v ^= v >> 33;
        v *= 0xc4ceb9fe1a85ec53ULL;
        v ^= v >> 33;
        return static_cast<std::size_t>(v);
    }
};

inline std::string to_string(Cell c) {
    return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

}  // namespace pushline
