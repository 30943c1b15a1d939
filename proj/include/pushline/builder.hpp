#pragma once

#include <string>
#include <utility>

#include "pushline/trace.hpp"

namespace pushline {

/// Incrementally builds a trace, validating each move against the evolving
/// configuration. Strategy generators only ever emit moves through this,
/// so a generator bug surfaces as a throw at generation time rather than a
/// corrupt trace.
class TraceBuilder {
public:
    explicit TraceBuilder(Shape initial) : shape_(initial) { trace_.initial = std::move(initial); }

    const Shape& shape() const { return shape_; }
    Trace take() && { return std::move(trace_); }
    const Trace& trace() const { return trace_; }
    std::size_t step_count() const { return trace_.moves.size(); }

    void set_phase(std::string label) { label_ = std::move(label); }
    const std::string& phase() const { return label_; }

    MoveEffect push(Cell pusher, Dir d) {
        MoveEffect e = validate_move(shape_, {pusher, d});
        shape_.move_cell(e.vacated, e.filled);
        trace_.moves.push_back({pusher, d});
        trace_.labels.push_back(label_);
        return e;
    }

    /// Translates the whole run at `pusher` by `times` cells; the pusher
    /// cell advances with it.
    void push_line(Cell pusher, Dir d, int times) {
        for (int i = 0; i < times; ++i) {
            push(pusher, d);
            pusher = pusher + step(d);
        }
    }

    /// Unit move of a single node (the cell ahead must be empty).
    void slide(Cell node, Dir d) {
        MoveEffect e = push(node, d);
        if (e.pushed_length != 1)
            throw std::logic_error("slide of " + to_string(node) + " pushed a longer line");
    }

    void slide_times(Cell node, Dir d, int times) {
        for (int i = 0; i < times; ++i) {
            slide(node, d);
            node = node + step(d);
        }
    }

private:
    Shape shape_;
    Trace trace_;
    std::string label_;
};

}  // namespace pushline
