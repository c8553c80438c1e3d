#pragma once

#include <optional>

#include "recol/boxes.hpp"
#include "recol/clique.hpp"
#include "recol/graph.hpp"
#include "recol/sim.hpp"

namespace recol {

/// Layered partition of a connected chordal graph. Every component of a layer
/// is an interval graph of diameter <= 3*width; in the graph formed by the
/// layer and everything deeper it is either pending (border inside one end
/// clique) or a separator of diameter >= width.
struct IntervalDecomposition {
    long long width = 0;
    std::vector<std::vector<Vertex>> layers;  // layers[0] = V_1 = removed last
    std::vector<int> layer_of;                // per vertex, 0-based layer index

    int depth() const { return static_cast<int>(layers.size()); }
};

/// Rake-and-compress on the clique tree: repeatedly remove vertex sets living
/// on degree-<=2 tree chains that form short pending pieces or long interval
/// pieces, splitting long pieces into end pieces / spaced boxes / segments.
IntervalDecomposition interval_decomposition(const ChordalGraph& g, long long width,
                                             RoundLedger* ledger = nullptr);

struct ComponentClass {
    bool pending = false;
    std::vector<Vertex> border;  // component members with deeper-or-same-layer
                                 // outside neighbors
    CliquePath path;             // clique path of the component (local ids)
    std::vector<Vertex> members;
};

/// Classification of one component of layers[i] within G[layers 0..i];
/// throws when the component is neither pending nor a wide-enough separator.
ComponentClass classify_component(const ChordalGraph& g, const IntervalDecomposition& dec,
                                  int layer_index, const std::vector<Vertex>& component);

CheckReport validate_interval_decomposition(const ChordalGraph& g,
                                            const IntervalDecomposition& dec);

/// Connected components of G[layers[i]].
std::vector<std::vector<Vertex>> layer_components(const ChordalGraph& g,
                                                  const IntervalDecomposition& dec,
                                                  int layer_index);

/// Interval model of a connected interval subgraph of g, built from clique
/// path runs; to_global maps model ids back.
struct IntervalModel {
    IntervalGraph graph;
    std::vector<Vertex> to_global;
    std::vector<int> to_local;  // -1 for vertices outside the model
};

IntervalModel interval_model_of_subset(const ChordalGraph& g, const std::vector<Vertex>& members);

/// Distributed (omega+1)-coloring of a connected chordal graph over its
/// interval decomposition: layers colored in order, pending components by
/// permuted greedy extension, separator components through the interval
/// gluing machinery.
Coloring chordal_color(const ChordalGraph& g, const IntervalDecomposition& dec,
                       const Config& cfg = {}, RoundLedger* ledger = nullptr);

/// Decomposition width adequate for chordal_color / chordal recoloring at a
/// given clique number (covers the boxes the gluing needs).
long long color_width_for(int omega);

}  // namespace recol
