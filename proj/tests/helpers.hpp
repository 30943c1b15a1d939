#pragma once

#include <set>
#include <vector>

#include "pushline/shape.hpp"

namespace test_util {

using pushline::Cell;
using pushline::Shape;

inline Shape row(int x0, int y, int len) {
    Shape s;
    for (int i = 0; i < len; ++i) s.add({x0 + i, y});
    return s;
}

inline Shape column(int x, int y0, int len) {
    Shape s;
    for (int i = 0; i < len; ++i) s.add({x, y0 + i});
    return s;
}

inline Shape rect(int x0, int y0, int w, int h) {
    Shape s;
    for (int x = x0; x < x0 + w; ++x)
        for (int y = y0; y < y0 + h; ++y) s.add({x, y});
    return s;
}

inline std::set<Cell> cell_set(const Shape& s) {
    auto v = s.sorted_cells();
    return {v.begin(), v.end()};
}

}  // namespace test_util
