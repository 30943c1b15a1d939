#pragma once

#include "pushline/shape.hpp"

namespace pushline {

/// True iff b equals a under a translation composed with a quarter-turn
/// rotation. Reflections do not count.
inline bool congruent(const Shape& a, const Shape& b) {
    if (a.order() != b.order()) return false;
    Shape na = a.normalized();
    Shape r = b;
    for (int k = 0; k < 4; ++k) {
        if (na == r.normalized()) return true;
        r = r.rotated_cw();
    }
    return false;
}

}  // namespace pushline
