#pragma once

#include "pushline/doubling.hpp"

namespace pushline {

namespace detail {

/// Turns diagonal cells [lo, lo+size) into a vertical line at column lo,
/// rows [lo, lo+size): halve, recurse on both halves, then the top-right
/// line merges down onto the bottom-left one.
inline void recurse_to_line(TraceBuilder& b, int lo, int size, int depth) {
    if (size <= 1) return;
    int bottom = (size + 1) / 2;
    int top = size - bottom;
    recurse_to_line(b, lo, bottom, depth + 1);
    recurse_to_line(b, lo + bottom, top, depth + 1);
    b.set_phase("merge" + std::to_string(size));
    (void)depth;
    merge_lines(b, {lo + bottom, lo + bottom, top}, {lo, lo, bottom});
}

}  // namespace detail

/// Diagonal-to-line by full uniform halving: each half becomes a line
/// recursively, then the halves merge. Same merge primitive as doubling,
/// so for powers of two the total is again 2n*log2(n) - 3n + 3, within
/// the n + 2n*log2(n) budget.
inline Trace dl_recursion(int n) {
    Shape diag = make_diagonal(n);
    TraceBuilder b(diag);
    if (n == 1) return std::move(b).take();
    detail::recurse_to_line(b, 0, n, 0);
    return std::move(b).take();
}

}  // namespace pushline
