#pragma once

#include <random>
#include <set>

#include "pushline/shape.hpp"

namespace pushline {

/// Deterministic seeded growth: start from one cell and repeatedly attach
/// a uniformly random empty cell eight-adjacent to the current shape.
/// The modulo draw is biased but identical on every platform, which is
/// what reproducibility of the randomized suites needs.
inline Shape random_connected_shape(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("order must be positive");
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    Shape s{{0, 0}};
    std::set<Cell> frontier;
    auto extend = [&](Cell c) {
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                Cell f{c.x + dx, c.y + dy};
                if (!s.contains(f)) frontier.insert(f);
            }
    };
    extend({0, 0});
    while (static_cast<int>(s.order()) < n) {
        auto it = frontier.begin();
        std::advance(it, rng() % frontier.size());
        Cell c = *it;
        frontier.erase(it);
        s.add(c);
        extend(c);
    }
    return s;
}

}  // namespace pushline
