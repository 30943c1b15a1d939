#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "pushline/trace.hpp"

namespace pushline {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool parse_int(const std::string& tok, int& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        long v = std::stol(tok, &pos);
        if (pos != tok.size()) return false;
        out = static_cast<int>(v);
        return true;
    } catch (...) {
        return false;
    }
}

}  // namespace detail

/// Shape text format: `#` starts a comment, every other non-empty line is
/// `x y`. Duplicate cells are rejected.
inline Shape read_shape(std::istream& in) {
    Shape s;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs)) continue;  // blank
        int x, y;
        if (!(ls >> ys) || (ls >> extra) || !detail::parse_int(xs, x) || !detail::parse_int(ys, y))
            throw ParseError("shape line " + std::to_string(lineno) + ": expected `x y`");
        if (s.contains({x, y}))
            throw ParseError("shape line " + std::to_string(lineno) + ": duplicate cell");
        s.add({x, y});
    }
    if (s.empty()) throw ParseError("shape file contains no cells");
    return s;
}

/// Cells sorted by (y, x) ascending.
inline void write_shape(std::ostream& out, const Shape& s) {
    for (Cell c : s.sorted_cells()) out << c.x << ' ' << c.y << '\n';
}

inline Shape shape_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_shape(in);
}

inline std::string shape_to_string(const Shape& s) {
    std::ostringstream out;
    write_shape(out, s);
    return out.str();
}

/// Trace text format:
///   trace v1 n=<order>
///   <shape block>
///   ---
///   x y <U|D|L|R> [#label]
inline Trace read_trace(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty trace file");
    int declared_order = 0;
    {
        std::istringstream hs(line);
        std::string magic, version, nfield;
        hs >> magic >> version >> nfield;
        if (magic != "trace" || version != "v1" || nfield.rfind("n=", 0) != 0 ||
            !detail::parse_int(nfield.substr(2), declared_order))
            throw ParseError("bad trace header: " + line);
    }
    std::string shape_block;
    bool terminated = false;
    while (std::getline(in, line)) {
        if (line == "---") {
            terminated = true;
            break;
        }
        shape_block += line;
        shape_block += '\n';
    }
    if (!terminated) throw ParseError("missing `---` after initial shape");
    Trace t;
    t.initial = shape_from_string(shape_block);
    if (t.initial.order() != static_cast<std::size_t>(declared_order))
        throw ParseError("header order n=" + std::to_string(declared_order) +
                         " does not match the shape block");

    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string label;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            label = line.substr(hash + 1);
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string xs, ys, ds;
        if (!(ls >> xs)) {
            if (!label.empty()) throw ParseError("label without move");
            continue;
        }
        int x, y;
        std::string extra;
        if (!(ls >> ys >> ds) || (ls >> extra) || !detail::parse_int(xs, x) ||
            !detail::parse_int(ys, y) || ds.size() != 1)
            throw ParseError("move line " + std::to_string(lineno) + ": expected `x y D`");
        Dir d;
        switch (ds[0]) {
            case 'U': d = Dir::Up; break;
            case 'D': d = Dir::Down; break;
            case 'L': d = Dir::Left; break;
            case 'R': d = Dir::Right; break;
            default: throw ParseError("move line " + std::to_string(lineno) + ": bad direction");
        }
        t.moves.push_back({{x, y}, d});
        t.labels.push_back(label);
    }
    return t;
}

inline void write_trace(std::ostream& out, const Trace& t) {
    out << "trace v1 n=" << t.initial.order() << '\n';
    write_shape(out, t.initial);
    out << "---\n";
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        const Move& m = t.moves[i];
        out << m.pusher.x << ' ' << m.pusher.y << ' ' << dir_char(m.dir);
        if (i < t.labels.size() && !t.labels[i].empty()) out << " #" << t.labels[i];
        out << '\n';
    }
}

inline Trace trace_from_string(const std::string& text) {
    std::istringstream in(text);
    return read_trace(in);
}

inline std::string trace_to_string(const Trace& t) {
    std::ostringstream out;
    write_trace(out, t);
    return out.str();
}

}  // namespace pushline
