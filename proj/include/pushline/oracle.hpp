#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "pushline/move.hpp"

namespace pushline {

/// Translation-normalized configuration; two configurations compare equal
/// iff they are identical up to translation.
struct CanonicalConfig {
    std::vector<Cell> cells;  // normalized to min x = min y = 0, sorted

    static CanonicalConfig of(const Shape& s) { return {s.normalized().sorted_cells()}; }
    Shape shape() const { return Shape(cells); }
    friend bool operator==(const CanonicalConfig&, const CanonicalConfig&) = default;
};

struct CanonicalConfigHash {
    std::size_t operator()(const CanonicalConfig& c) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        CellHash ch;
        for (Cell cell : c.cells) h = (h ^ ch(cell)) * 0x100000001b3ULL;
        return h;
    }
};

namespace detail {

inline std::vector<CanonicalConfig> successors(const CanonicalConfig& c) {
    Shape s = c.shape();
    std::vector<CanonicalConfig> out;
    out.reserve(c.cells.size() * 4);
    for (Cell cell : c.cells)
        for (Dir d : all_dirs) {
            MoveEffect e = validate_move(s, {cell, d});
            Shape next = s;
            next.move_cell(e.vacated, e.filled);
            out.push_back(CanonicalConfig::of(next));
        }
    return out;
}

}  // namespace detail

/// Level-synchronous breadth-first search over the configuration space,
/// states identified up to translation. Returns the length of the
/// shortest move sequence into a configuration satisfying `goal`, or
/// nothing once the cap is exhausted.
inline std::optional<int> bfs_min_moves(const Shape& source,
                                        const std::function<bool(const Shape&)>& goal,
                                        int move_cap) {
    CanonicalConfig start = CanonicalConfig::of(source);
    if (goal(start.shape())) return 0;
    std::unordered_set<CanonicalConfig, CanonicalConfigHash> seen{start};
    std::vector<CanonicalConfig> frontier{start};
    for (int depth = 1; depth <= move_cap; ++depth) {
        std::vector<CanonicalConfig> next;
        for (const auto& c : frontier)
            for (auto& succ : detail::successors(c)) {
                if (!seen.insert(succ).second) continue;
                if (goal(succ.shape())) return depth;
                next.push_back(std::move(succ));
            }
        if (next.empty()) return std::nullopt;
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Bidirectional variant for a concrete goal configuration. Every move is
/// reversible, so a backward level is just a forward level from the goal;
/// the searches meet in the middle, which keeps the k=5 orientation-change
/// instances comfortably small.
inline std::optional<int> bfs_min_moves_to(const Shape& source, const Shape& goal, int move_cap) {
    using Map = std::unordered_map<CanonicalConfig, int, CanonicalConfigHash>;
    CanonicalConfig a = CanonicalConfig::of(source);
    CanonicalConfig z = CanonicalConfig::of(goal);
    if (a == z) return 0;
    Map dist_a{{a, 0}}, dist_z{{z, 0}};
    std::vector<CanonicalConfig> fa{a}, fz{z};
    int depth_a = 0, depth_z = 0;
    while (!fa.empty() && !fz.empty() && depth_a + depth_z < move_cap) {
        bool expand_a = fa.size() <= fz.size();
        auto& frontier = expand_a ? fa : fz;
        auto& mine = expand_a ? dist_a : dist_z;
        auto& other = expand_a ? dist_z : dist_a;
        int depth = (expand_a ? ++depth_a : ++depth_z);
        std::optional<int> best;
        std::vector<CanonicalConfig> next;
        for (const auto& c : frontier)
            for (auto& succ : detail::successors(c)) {
                auto hit = other.find(succ);
                if (hit != other.end()) {
                    int total = depth + hit->second;
                    if (!best || total < *best) best = total;
                }
                if (mine.emplace(succ, depth).second) next.push_back(std::move(succ));
            }
        if (best && *best <= move_cap) return best;
        if (best) return std::nullopt;
        frontier = std::move(next);
    }
    return std::nullopt;
}

/// Goal helpers for the common line targets.
inline bool is_any_line(const Shape& s) { return as_line(s).has_value(); }
inline bool is_horizontal_line(const Shape& s) {
    auto l = as_line(s);
    return l && (l->orientation == Orientation::Horizontal || l->length == 1);
}
inline bool is_vertical_line(const Shape& s) {
    auto l = as_line(s);
    return l && (l->orientation == Orientation::Vertical || l->length == 1);
}

}  // namespace pushline
