#pragma once

#include <string>
#include <vector>

#include "recol/clique.hpp"
#include "recol/graph.hpp"
#include "recol/sim.hpp"

namespace recol {

/// Ruling-set boxes and interboxes of a connected interval graph, ordered
/// along the interval axis. Boxes are closed neighborhoods of the ruling
/// vertices; interboxes are the connected remainders. Regions alternate:
/// [interbox?] box interbox box ... box [interbox?].
struct BoxDecomposition {
    std::vector<Vertex> ruling;              // virtual-path order (by left endpoint)
    std::vector<std::vector<Vertex>> boxes;  // boxes[i] = closed neighborhood of ruling[i]
    std::vector<std::vector<Vertex>> interboxes;
    std::vector<int> interbox_left;   // ruling index left of interbox i, -1 at the front
    std::vector<int> interbox_right;  // ruling index right of interbox i, -1 at the back

    std::vector<int> box_of;       // per vertex: ruling index or -1
    std::vector<int> interbox_of;  // per vertex: interbox index or -1
    std::vector<int> region_rank;  // per vertex: 2*i+1 for box i, even ranks for interboxes

    int box_count() const { return static_cast<int>(ruling.size()); }

    /// Vertices with region rank strictly between box i and box j (their
    /// boxes excluded); i < j in virtual-path order, i or j may be -1 /
    /// box_count() to reach the graph ends.
    std::vector<Vertex> between_exclusive(int i, int j) const;
    /// Same but including the two boxes (the subgraph "between x and y").
    std::vector<Vertex> between_inclusive(int i, int j) const;
};

/// Distributed (4,5)-ruling set: inclusion-maximal intervals, an MIS on that
/// proper-interval subgraph, then an MIS on the distance-<=3 conflict graph
/// of the survivors ordered along the axis. Components of diameter < 24 fall
/// back to a leader sweep.
std::vector<Vertex> ruling_set_4_5(const IntervalGraph& g, RoundLedger* ledger = nullptr,
                                   uint64_t id_seed = 0);

BoxDecomposition box_decomposition(const IntervalGraph& g, const std::vector<Vertex>& ruling,
                                   RoundLedger* ledger = nullptr);

/// Maximal subset of the ruling set with pairwise ruling-path distance >= d,
/// as sorted ruling indices. Runs the Linial+sweep MIS on the (d-1)-th power
/// of the ruling path; falls back to a leader sweep when the power graph is
/// denser than the path is long.
std::vector<int> spaced_independent_set(const IntervalGraph& g, const BoxDecomposition& bd, int d,
                                        RoundLedger* ledger = nullptr, uint64_t id_seed = 0);

/// Ruling-path distance labels (distance to the given spaced subset).
std::vector<int> ruling_path_labels(const BoxDecomposition& bd, const std::vector<int>& spaced);

struct CheckReport {
    bool ok = true;
    std::string reason;
};

CheckReport validate_ruling_set_4_5(const IntervalGraph& g, const std::vector<Vertex>& S);
CheckReport validate_box_decomposition(const IntervalGraph& g, const BoxDecomposition& bd);

/// Vertices of the inclusion-maximal intervals (no other interval strictly
/// contains them; duplicates all kept).
std::vector<Vertex> inclusion_maximal_intervals(const IntervalGraph& g);

}  // namespace recol
