#pragma once

#include <optional>
#include <vector>

#include "recol/graph.hpp"

namespace recol {

/// Ordered maximal cliques of a connected interval graph. Bags follow the
/// left-to-right sweep over endpoint events; the bags containing any fixed
/// vertex form one contiguous run.
struct CliquePath {
    std::vector<std::vector<Vertex>> bags;

    int size() const { return static_cast<int>(bags.size()); }
    /// First and last bag index containing v.
    std::pair<int, int> run_of(Vertex v) const;
};

/// Clique tree of a chordal graph: tree on bag ids, one bag per maximal clique.
struct CliqueTree {
    std::vector<std::vector<Vertex>> bags;
    std::vector<std::pair<int, int>> edges;  // tree on bag ids

    int size() const { return static_cast<int>(bags.size()); }
    std::vector<std::vector<int>> tree_adj() const;
};

/// Path decomposition refining a clique path so each bag introduces exactly
/// one new vertex. intro[i] is the vertex introduced by bag i; position[v]
/// inverts it.
struct NicePath {
    std::vector<std::vector<Vertex>> bags;
    std::vector<Vertex> intro;
    std::vector<int> position;

    int size() const { return static_cast<int>(bags.size()); }
};

CliquePath clique_path(const IntervalGraph& g);
CliqueTree clique_tree(const ChordalGraph& g);

/// Clique tree of an arbitrary connected induced subgraph of a chordal graph,
/// built from the restricted subtree representation. Vertex ids in the result
/// are positions into `members`.
CliqueTree clique_tree_of_subset(const ChordalGraph& g, const std::vector<Vertex>& members);

/// If the clique tree is a path, returns its bags in path order.
std::optional<CliquePath> clique_tree_as_path(const CliqueTree& t);

NicePath nice_path(const CliquePath& cp);

int max_clique_size(const IntervalGraph& g);
int max_clique_size(const ChordalGraph& g);

/// A vertex set is consecutive when the first-appearance bags of its members
/// form one contiguous run of the nice path and the set has no gaps in
/// introduction order.
bool is_consecutive(const NicePath& np, const std::vector<Vertex>& set);

/// Members of `set` with at least one neighbor outside `set`.
std::vector<Vertex> border_of_set(const Adjacency& adj, const std::vector<Vertex>& set);

/// Border restricted to consecutive sets; rejects non-consecutive input.
std::vector<Vertex> border(const IntervalGraph& g, const std::vector<Vertex>& consecutive_set);

/// True when `set` can be covered by at most two cliques of g.
bool coverable_by_two_cliques(const Adjacency& adj, const std::vector<Vertex>& set);

/// Peeling order of window\border with the min-degree / min-length / min-id
/// selection; each vertex has at most 2*omega-2 neighbors among the not yet
/// peeled vertices plus the rest of the window graph.
std::vector<Vertex> degeneracy_order_excluding_border(const IntervalGraph& g,
                                                      const std::vector<Vertex>& window,
                                                      const std::vector<Vertex>& border);

/// Global min-degree elimination ordering; witnesses (omega-1)-degeneracy.
std::vector<Vertex> global_degeneracy_order(const Adjacency& adj);

/// Max over the order of the degree into the not-yet-eliminated suffix.
int degeneracy_of_order(const Adjacency& adj, const std::vector<Vertex>& order);

}  // namespace recol
