#pragma once

#include <string>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

/// One parallel recoloring step: (vertex, new color) pairs, sorted by vertex.
using Step = std::vector<std::pair<Vertex, int>>;

/// Recoloring schedule over palette [0, k) plus extra colors [k, k+extra).
/// Extra colors may appear in intermediate colorings only.
struct Schedule {
    int palette_k = 0;
    int extra = 0;
    std::vector<Step> steps;

    int total_palette() const { return palette_k + extra; }
    int length() const { return static_cast<int>(steps.size()); }
    void push(Step s);
    /// Appends another schedule's steps (palette fields must agree).
    void append(const Schedule& other);
};

struct ValidationReport {
    bool ok = true;
    int step = -1;
    std::vector<Vertex> vertices;
    std::string reason;
};

/// Replays the schedule and checks every schedule invariant: colors in range,
/// no vertex listed twice or recolored to its current color, recolored sets
/// independent, coloring proper after every step, and final coloring equal to
/// `target` when given. The report pinpoints the first violating step.
ValidationReport validate(const Adjacency& adj, const Coloring& start, const Schedule& sched,
                          const Coloring* target = nullptr);

/// Replay without validation; throws on out-of-range vertices or colors.
Coloring apply_schedule(const Coloring& start, const Schedule& sched);

/// Schedule undoing `sched`: each reversed step restores the pre-step colors,
/// in reverse order.
Schedule reverse_schedule(const Coloring& start, const Schedule& sched);

/// s1 transforms alpha to some canonical coloring, s2 transforms beta to the
/// same one; the result transforms alpha to beta. Endpoint mismatch throws.
Schedule compose_via_canonical(const Coloring& alpha, const Schedule& s1, const Coloring& beta,
                               const Schedule& s2);

/// Step-wise union of schedules whose recolored vertex sets live in pairwise
/// non-adjacent regions; shorter schedules are padded with empty steps.
Schedule merge_parallel(const std::vector<Schedule>& parts);

std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_json(const std::string& text);

}  // namespace recol
