#pragma once

#include <cstdint>

#include "recol/graph.hpp"

namespace recol {

/// (omega-1)-th power of a path on n vertices: vertex i gets the interval
/// [4i+1, 4(i+omega-1)+3], so i ~ j iff |i-j| <= omega-1.
IntervalGraph gen_power_path(int n, int omega);

/// Seeded random interval graph; spread controls gap/length scale. Same seed,
/// same graph. Vertex ids are shuffled so they carry no positional hint.
IntervalGraph gen_random_interval(int n, uint64_t seed, int spread = 6);

/// Seeded random chordal graph: random host tree plus random connected
/// subtrees. omega_cap > 0 bounds the clique number by capping bag loads.
ChordalGraph gen_random_chordal(int n, uint64_t seed, int omega_cap = 0);

/// Proper coloring sampled uniformly-greedily with k colors; throws if some
/// vertex has all k colors blocked (k > Delta always succeeds).
Coloring gen_random_coloring(const Adjacency& adj, int k, uint64_t seed);

/// The i mod k coloring in left-endpoint order (the frozen-instance pattern).
Coloring mod_coloring(const IntervalGraph& g, int k);

}  // namespace recol
