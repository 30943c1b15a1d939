#pragma once

#include <map>
#include <string>
#include <vector>

#include "pushline/move.hpp"
#include "pushline/shape.hpp"

namespace pushline {

struct InvalidMoveAt : std::runtime_error {
    std::size_t index;
    InvalidMoveAt(std::size_t i, const std::string& why)
        : std::runtime_error("invalid move at step " + std::to_string(i) + ": " + why), index(i) {}
};

/// An initial configuration plus an ordered, replayable move list.
/// labels[i] tags move i with a free-text phase name ("" = untagged).
struct Trace {
    Shape initial;
    std::vector<Move> moves;
    std::vector<std::string> labels;

    std::size_t step_count() const { return moves.size(); }

    /// Moves per distinct label, in first-appearance order.
    std::vector<std::pair<std::string, std::size_t>> phase_breakdown() const {
        std::vector<std::pair<std::string, std::size_t>> out;
        std::map<std::string, std::size_t> idx;
        for (const auto& l : labels) {
            auto it = idx.find(l);
            if (it == idx.end()) {
                idx.emplace(l, out.size());
                out.emplace_back(l, 1);
            } else {
                ++out[it->second].second;
            }
        }
        return out;
    }
};

struct ReplayResult {
    Shape final;
    std::vector<MoveEffect> effects;
    /// Filled only when connectivity monitoring was requested: one flag
    /// per move, true iff the shape was connected after that move.
    std::vector<bool> connectivity;
};

/// Applies the trace in order, failing fast with the offending index.
inline ReplayResult replay(const Trace& t, bool monitor_connectivity = false) {
    ReplayResult r;
    r.final = t.initial;
    r.effects.reserve(t.moves.size());
    for (std::size_t i = 0; i < t.moves.size(); ++i) {
        MoveEffect e;
        try {
            e = validate_move(r.final, t.moves[i]);
        } catch (const std::exception& ex) {
            throw InvalidMoveAt(i, ex.what());
        }
        r.final.move_cell(e.vacated, e.filled);
        r.effects.push_back(e);
        if (monitor_connectivity) r.connectivity.push_back(is_connected(r.final));
    }
    return r;
}

/// The step-for-step undo: starts at the trace's final configuration and
/// ends at its initial one, with the same step count.
inline Trace reverse_trace(const Trace& t) {
    ReplayResult r = replay(t);
    Trace rev;
    rev.initial = r.final;
    rev.moves.reserve(t.moves.size());
    rev.labels.reserve(t.moves.size());
    for (std::size_t i = t.moves.size(); i-- > 0;) {
        rev.moves.push_back({r.effects[i].filled, opposite(t.moves[i].dir)});
        rev.labels.push_back(i < t.labels.size() ? t.labels[i] : std::string{});
    }
    return rev;
}

inline Trace translated(const Trace& t, int dx, int dy) {
    Trace out;
    out.initial = t.initial.translated(dx, dy);
    out.moves.reserve(t.moves.size());
    for (Move m : t.moves) out.moves.push_back({{m.pusher.x + dx, m.pusher.y + dy}, m.dir});
    out.labels = t.labels;
    return out;
}

/// Rotates every cell and direction a quarter-turn clockwise.
inline Trace rotated_cw(const Trace& t) {
    Trace out;
    out.initial = t.initial.rotated_cw();
    out.moves.reserve(t.moves.size());
    for (Move m : t.moves) out.moves.push_back({rotate_cw(m.pusher), rotate_cw(m.dir)});
    out.labels = t.labels;
    return out;
}

/// Appends `tail` (which must start where `head` ends) onto `head`.
inline void append(Trace& head, const Trace& tail) {
    head.moves.insert(head.moves.end(), tail.moves.begin(), tail.moves.end());
    head.labels.resize(head.moves.size() - tail.labels.size(), "");
    head.labels.insert(head.labels.end(), tail.labels.begin(), tail.labels.end());
}

}  // namespace pushline
