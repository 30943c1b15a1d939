#pragma once

#include <ostream>

#include "pushline/trace.hpp"

namespace pushline {

namespace detail {

inline void ascii_frame(std::ostream& out, const Shape& s) {
    Bounds b = s.bounds();
    for (int y = b.max_y + 1; y >= b.min_y - 1; --y) {
        for (int x = b.min_x - 1; x <= b.max_x + 1; ++x) out << (s.contains({x, y}) ? '#' : '.');
        out << '\n';
    }
}

}  // namespace detail

/// One cropped grid per sampled step, `#` occupied, `.` empty, margin 1.
inline void render_ascii(std::ostream& out, const Trace& t, int every = 1) {
    if (every < 1) every = 1;
    Shape s = t.initial;
    out << "step 0\n";
    detail::ascii_frame(out, s);
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        MoveEffect e = validate_move(s, t.moves[i]);
        s.move_cell(e.vacated, e.filled);
        if ((i + 1) % static_cast<std::size_t>(every) == 0 || i + 1 == t.moves.size()) {
            out << "\nstep " << i + 1 << '\n';
            detail::ascii_frame(out, s);
        }
    }
}

/// A self-contained SVG animation: one group per sampled frame, made
/// visible for its time slot.
inline void render_svg(std::ostream& out, const Trace& t, int every = 1,
                       double seconds_per_frame = 0.2) {
    if (every < 1) every = 1;
    std::vector<Shape> frames;
    Shape s = t.initial;
    frames.push_back(s);
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        MoveEffect e = validate_move(s, t.moves[i]);
        s.move_cell(e.vacated, e.filled);
        if ((i + 1) % static_cast<std::size_t>(every) == 0 || i + 1 == t.moves.size())
            frames.push_back(s);
    }
    Bounds b = frames.front().bounds();
    for (const Shape& f : frames) {
        Bounds fb = f.bounds();
        b.min_x = std::min(b.min_x, fb.min_x);
        b.min_y = std::min(b.min_y, fb.min_y);
        b.max_x = std::max(b.max_x, fb.max_x);
        b.max_y = std::max(b.max_y, fb.max_y);
    }
    const int cell = 12, margin = cell;
    int w = (b.width() + 2) * cell, h = (b.height() + 2) * cell;
    out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n";
    out << "<rect width='100%' height='100%' fill='white'/>\n";
    double total = seconds_per_frame * static_cast<double>(frames.size());
    for (std::size_t i = 0; i < frames.size(); ++i) {
        out << "<g display='" << (i == 0 ? "inline" : "none") << "'>\n";
        if (frames.size() > 1) {
            out << "  <set attributeName='display' to='inline' begin='" << seconds_per_frame * i
                << "s' dur='" << seconds_per_frame << "s'/>\n";
            if (i == 0)
                out << "  <set attributeName='display' to='none' begin='" << seconds_per_frame
                    << "s' dur='" << (total - seconds_per_frame) << "s'/>\n";
        }
        for (Cell c : frames[i].sorted_cells()) {
            int x = margin + (c.x - b.min_x) * cell;
            int y = margin + (b.max_y - c.y) * cell;
            out << "  <rect x='" << x << "' y='" << y << "' width='" << cell - 1 << "' height='"
                << cell - 1 << "' fill='black'/>\n";
        }
        out << "</g>\n";
    }
    out << "</svg>\n";
}

}  // namespace pushline
