#pragma once

#include "pushline/builder.hpp"
#include "pushline/nice.hpp"
#include "pushline/turns.hpp"

namespace pushline {

struct NotNice : std::invalid_argument {
    NotNice() : std::invalid_argument("shape has no central line") {}
};

namespace detail {

// Feeds every perpendicular run into the central line, extending it past
// its right (or top) end. Two moves per absorbed node; connectivity is
// kept because the run itself bridges the transient gap at its column.
inline void absorb_into_central_line(TraceBuilder& b, const CentralLineWitness& w) {
    bool horizontal = w.line.orientation == Orientation::Horizontal;
    Dir grow = horizontal ? Dir::Right : Dir::Up;
    for (int i = 0; i < w.line.length; ++i) {
        Cell base = w.line.at(i);
        for (Dir side : horizontal ? std::array{Dir::Up, Dir::Down}
                                   : std::array{Dir::Right, Dir::Left}) {
            Cell probe = base + step(side);
            int len = 0;
            while (b.shape().contains(probe)) {
                ++len;
                probe = probe + step(side);
            }
            if (len == 0) continue;
            Cell far = base + Cell{step(side).x * len, step(side).y * len};
            absorb_feeder(b, base, grow, far, opposite(side), len);
        }
    }
}

}  // namespace detail

/// Straightens a nice shape: every off-line node joins the central line in
/// exactly two moves, so the fragment length is 2*(n - k) for a witness
/// line of k nodes. Preserves connectivity throughout.
inline Trace nice_to_line(const Shape& shape) {
    TraceBuilder probe(shape);
    if (as_line(shape)) return std::move(probe).take();
    auto w = is_nice(shape);
    if (!w) throw NotNice{};
    TraceBuilder b(shape);
    detail::absorb_into_central_line(b, *w);
    if (!as_line(b.shape())) throw std::logic_error("central-line absorption left a bend");
    return std::move(b).take();
}

}  // namespace pushline
