#pragma once

#include "recol/boxes.hpp"
#include "recol/graph.hpp"
#include "recol/sim.hpp"

namespace recol {

/// Colors a box or any induced interval subgraph greedily in left-endpoint
/// order; never needs more colors than the subgraph's clique number. Entries
/// of `partial` that are >= 0 are kept; the rest are filled. Throws when the
/// palette is exhausted.
Coloring greedy_extend(const IntervalGraph& g, const std::vector<Vertex>& members,
                       Coloring partial, int palette, bool rightward);

/// The permuting construction between two boxes at virtual-path distance 3:
/// returns a (k+1)-coloring equal to alpha on box_a's box and to
/// alpha-with-x,y-swapped on box_b's box. The extra color is alpha's palette
/// index k and survives only in the middle boxes.
Coloring switch_bridge(const IntervalGraph& g, const BoxDecomposition& bd, int box_a, int box_b,
                       const Coloring& alpha, int x, int y);

/// Stage s of switch_bridge in isolation (1, 2 or 3), for replay tests;
/// last_box bounds the affected region (-1 = to the end of the path).
Coloring switch_bridge_stage(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                             const Coloring& base, int x, int y, int stage, int last_box = -1);

/// Glues two arbitrary proper k-colorings of the subgraph between box_a and
/// box_b into one (k+1)-coloring that equals alpha on box_a's box and beta on
/// box_b's box, by decomposing the clique permutation at box_b into
/// transpositions and chaining switch_bridge every three boxes. Requires
/// enough separating boxes; the error names the required count.
Coloring border_interpolate(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                            int box_b, const Coloring& alpha, const Coloring& beta);

/// Number of transpositions border_interpolate would chain for these
/// colorings (the permutation decomposition size).
int interpolation_transpositions(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                                 int box_b, const Coloring& alpha, const Coloring& beta);

/// Distributed (omega+1)-coloring of a connected interval graph: box
/// decomposition, a spaced set of boxes colored by leaders, gaps filled with
/// border_interpolate.
Coloring interval_color(const IntervalGraph& g, const Config& cfg = {},
                        RoundLedger* ledger = nullptr, uint64_t id_seed = 0);

}  // namespace recol
