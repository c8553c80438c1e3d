#pragma once

#include "recol/chordal.hpp"
#include "recol/schedule.hpp"

namespace recol {

/// Recolors a connected chordal graph from alpha to beta over its interval
/// decomposition. Layers are added back one at a time: the deeper schedule is
/// replayed while the new layer's components dodge incoming colors, pending
/// components by anchored retargeting and separator components through the
/// interval machinery. The emitted schedule is aligned: every vertex
/// recolored at step j takes color j mod (k + extra).
Schedule chordal_recolor(const ChordalGraph& g, const IntervalDecomposition& dec,
                         const Coloring& alpha, const Coloring& beta, int k, int extra,
                         const Config& cfg = {}, RoundLedger* ledger = nullptr,
                         uint64_t id_seed = 0);

/// Re-emits a schedule so that step j only assigns color j mod modulus,
/// padding with empty steps; lengths grow by at most a factor of modulus.
Schedule align_schedule(const Schedule& sched, int modulus);

}  // namespace recol
