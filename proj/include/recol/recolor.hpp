#pragma once

#include <string>

#include "recol/boxes.hpp"
#include "recol/color.hpp"
#include "recol/schedule.hpp"

namespace recol {

/// Induced interval subgraph keeping the interval representation.
struct IntervalSubgraph {
    IntervalGraph graph;
    std::vector<Vertex> to_global;
    std::vector<int> to_local;  // -1 outside
};
IntervalSubgraph interval_subgraph(const IntervalGraph& g, const std::vector<Vertex>& members);

/// Peeling order of `window` treating everything else as frozen: repeatedly
/// remove the vertex minimizing (remaining degree, interval length, id).
/// max_back_degree reports the largest degree seen at removal time.
std::vector<Vertex> anchored_order(const IntervalGraph& g, const std::vector<Vertex>& window,
                                   int* max_back_degree = nullptr);

/// Recolors the window so every vertex ends below color 2*omega-1 (0-based
/// indices <= 2*omega-2), never touching anything outside the window.
/// Single-vertex steps; the recursive construction has worst-case length
/// 2^|window|-1. `fast` switches the dodge-color heuristic used when k is
/// ample (it does not change the contract).
Schedule reduce_window(const IntervalGraph& g, const std::vector<Vertex>& window,
                       const Coloring& alpha, int k, bool fast = false);

/// Recolors the window to exactly `target` (target must agree with the
/// current coloring outside the window). Requires budget >= anchored
/// degeneracy + 2; throws ContractError otherwise.
Schedule retarget_window(const IntervalGraph& g, const std::vector<Vertex>& window,
                         const Coloring& cur, const Coloring& target, int budget);

/// Distributed color reduction: drives every color below 2*omega-1 using the
/// distance labels of a 6-spaced box set; phase 1 recolors strictly between
/// consecutive spaced boxes (never touching them), phase 2 finishes the
/// spaced boxes and their flanks.
Schedule reduce_to_2omega(const IntervalGraph& g, const Coloring& alpha, int k,
                          const Config& cfg = {}, RoundLedger* ledger = nullptr,
                          uint64_t id_seed = 0);

/// Same computation with the two phases, the spaced set and the decomposition
/// exposed (phase structure is what the invariants quantify over).
struct Reduce2Result {
    Schedule phase1;
    Schedule phase2;
    std::vector<int> spaced;
    BoxDecomposition bd;
    std::vector<std::vector<Vertex>> phase1_windows;
};
Reduce2Result reduce_to_2omega_detailed(const IntervalGraph& g, const Coloring& alpha, int k,
                                        const Config& cfg = {}, RoundLedger* ledger = nullptr,
                                        uint64_t id_seed = 0);

/// Full alpha -> beta transformation for k >= 4*omega: reduce both sides,
/// rotate through the upper half of the palette in <= 4*omega steps, undo the
/// beta reduction.
Schedule recolor_4omega(const IntervalGraph& g, const Coloring& alpha, const Coloring& beta,
                        int k, const Config& cfg = {}, RoundLedger* ledger = nullptr,
                        uint64_t id_seed = 0);

// ---------------------------------------------------------------------------

struct KempeChange {
    Vertex anchor;
    int from;
    int to;
};
using KempePlan = std::vector<KempeChange>;

/// At most |S| Kempe changes, in interval starting order, whose central
/// replay recolors S to beta_S; earlier-fixed vertices are never recolored by
/// later changes.
KempePlan kempe_plan(const IntervalGraph& g, const std::vector<Vertex>& S, const Coloring& alpha,
                     const Coloring& beta_S);

/// Replays a plan centrally (whole-graph Kempe swaps); test oracle.
Coloring kempe_replay(const IntervalGraph& g, const Coloring& alpha, const KempePlan& plan);

/// Simulates each Kempe change with the three-step cut using the extra color
/// c0: schedule of length <= 3*|plan| that never recolors `border` and leaves
/// S at its planned colors. Requires dist(S, border) >= 3*|plan|.
Schedule kempe_cut(const IntervalGraph& g, const std::vector<Vertex>& S, const KempePlan& plan,
                   const Coloring& alpha, int c0, const std::vector<Vertex>& border);

// ---------------------------------------------------------------------------

struct SeedResult {
    Schedule schedule;
    Coloring seeded;
    // Seeded runs in axis order: consecutive nice-path positions now at beta.
    std::vector<std::vector<Vertex>> runs;
    bool fell_back = false;  // whole-graph centralized window
};

/// Recolors, around every seed of a spaced box set, the box plus N vertices
/// before and after to their target colors, through cut Kempe changes on
/// pairwise non-adjacent working regions. c0 must be absent from alpha and
/// beta.
SeedResult seed_targets(const IntervalGraph& g, const BoxDecomposition& bd, const Coloring& alpha,
                        const Coloring& beta, long long N, int c0, RoundLedger* ledger = nullptr,
                        uint64_t id_seed = 0);

// ---------------------------------------------------------------------------

struct WindowResult {
    bool ok = false;
    Schedule schedule;
    std::string strategy;
    std::string reason;
};

/// Recolors exactly the interior vertices from gamma to beta (both proper;
/// beta extended by gamma outside the interior must be proper). Strategies:
/// exact search for tiny interiors, degeneracy retargeting when the budget
/// covers the anchored degeneracy, and the sliding frontier otherwise.
/// Failures are explicit, never silent.
WindowResult window_recolor(const IntervalGraph& g, const std::vector<Vertex>& interior,
                            const Coloring& gamma, const Coloring& beta, int budget,
                            const std::string& force_strategy = "");

// ---------------------------------------------------------------------------

/// Top-level interval recoloring dispatcher. Branches on (k, extra):
/// k <= omega+2 with extra = omega-k+4, k >= omega+3 with extra = 1,
/// k >= 2*omega with extra = 0, k >= 4*omega fast with extra = 0.
Schedule interval_recolor(const IntervalGraph& g, const Coloring& alpha, const Coloring& beta,
                          int k, int extra, const Config& cfg = {}, RoundLedger* ledger = nullptr,
                          uint64_t id_seed = 0);

/// Extra budget the branch table allows for a given k and omega.
int branch_extra_budget(int k, int omega);

}  // namespace recol
