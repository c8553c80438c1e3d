#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace recol {

using Vertex = int;
using Adjacency = std::vector<std::vector<Vertex>>;

/// Base class for all contract violations raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Precondition or representation violation (bad input shape, wrong budget, ...).
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

/// A resource budget (rounds, states) was exhausted before completion.
struct BudgetError : Error {
    std::vector<Vertex> pending;
    explicit BudgetError(const std::string& msg, std::vector<Vertex> pend = {})
        : Error(msg), pending(std::move(pend)) {}
};

// ---------------------------------------------------------------------------
// Adjacency helpers shared by both graph classes.

bool adjacency_has_edge(const Adjacency& adj, Vertex u, Vertex v);
int max_degree(const Adjacency& adj);
std::vector<int> bfs_distances(const Adjacency& adj, const std::vector<Vertex>& sources,
                               int cap = -1);
int diameter(const Adjacency& adj);
std::vector<int> connected_component_ids(const Adjacency& adj);

// ---------------------------------------------------------------------------

/// Intersection graph of closed integer intervals. Touching endpoints count
/// as an intersection, so [0,2] and [2,5] are adjacent.
class IntervalGraph {
  public:
    explicit IntervalGraph(std::vector<std::pair<long long, long long>> intervals);

    int n() const { return static_cast<int>(intervals_.size()); }
    long long left(Vertex v) const { return intervals_[v].first; }
    long long right(Vertex v) const { return intervals_[v].second; }
    const std::vector<std::pair<long long, long long>>& intervals() const { return intervals_; }

    const Adjacency& adj() const { return adj_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool connected() const;

    /// Vertices sorted by (left endpoint, id).
    const std::vector<Vertex>& left_order() const { return left_order_; }

  private:
    std::vector<std::pair<long long, long long>> intervals_;
    Adjacency adj_;
    std::vector<Vertex> left_order_;
};

/// Intersection graph of subtrees of a host tree. Each vertex owns a nonempty
/// connected set of host-tree nodes; two vertices are adjacent iff their node
/// sets share a tree node.
class ChordalGraph {
  public:
    ChordalGraph(int tree_n, std::vector<std::pair<int, int>> tree_edges,
                 std::vector<std::vector<int>> subtrees);

    int n() const { return static_cast<int>(subtrees_.size()); }
    int tree_n() const { return tree_n_; }
    const std::vector<std::pair<int, int>>& tree_edges() const { return tree_edges_; }
    const std::vector<std::vector<int>>& subtrees() const { return subtrees_; }
    const std::vector<int>& subtree(Vertex v) const { return subtrees_[v]; }

    /// Vertices whose subtree contains the given host-tree node.
    const std::vector<Vertex>& bag_of_node(int node) const { return node_bags_[node]; }

    const Adjacency& adj() const { return adj_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool adjacent(Vertex u, Vertex v) const;
    int max_degree() const;
    bool connected() const;

  private:
    int tree_n_;
    std::vector<std::pair<int, int>> tree_edges_;
    std::vector<std::vector<int>> subtrees_;
    std::vector<std::vector<Vertex>> node_bags_;
    Adjacency adj_;
};

// ---------------------------------------------------------------------------

/// Total color assignment over vertex ids 0..n-1 with a declared palette bound.
struct Coloring {
    std::vector<int> colors;
    int palette = 0;

    Coloring() = default;
    Coloring(std::vector<int> c, int k) : colors(std::move(c)), palette(k) {}

    int n() const { return static_cast<int>(colors.size()); }
    int operator[](Vertex v) const { return colors[v]; }
    int& operator[](Vertex v) { return colors[v]; }

    bool in_palette() const;
    bool proper(const Adjacency& adj) const;
    /// Returns an offending edge when the coloring is improper.
    bool find_conflict(const Adjacency& adj, Vertex& u, Vertex& v) const;
};

// ---------------------------------------------------------------------------

/// Derived numeric parameters shared by the recoloring constructions.
struct Params {
    int omega = 0;
    int delta = 0;
    long long n = 0;
    int k = 0;
    int extra = 0;

    long long N = 0;
    long long N_prime = 0;
    long long N_second = 0;
    long long D = 0;
    long long ell = 0;

    static Params derive(int omega, int delta, long long n, int k, int extra);
};

/// Algorithm-wide configuration. Faithful mode pins every multiplicative
/// constant to its derived value; scaled mode lets tests shrink the window
/// constants while validators keep the correctness contracts enforced.
struct Config {
    enum class Mode { Faithful, Scaled };
    Mode mode = Mode::Faithful;

    // Scaled-mode overrides (<= 0 means "use the derived value").
    long long seed_run_length = -1;     // N
    long long decomposition_width = -1; // D
    int box_spacing = -1;               // selected-box spacing for coloring

    bool faithful() const { return mode == Mode::Faithful; }
    static Config scaled(long long N_override, long long D_override = -1,
                         int spacing_override = -1);
};

// ---------------------------------------------------------------------------
// Connected-component splitting. All algorithms assume connected inputs; the
// CLI and the high-level wrappers split and reassemble through these.

struct IntervalComponent {
    IntervalGraph graph;
    std::vector<Vertex> to_global;
};

struct ChordalComponent {
    ChordalGraph graph;
    std::vector<Vertex> to_global;
};

std::vector<IntervalComponent> split_components(const IntervalGraph& g);
std::vector<ChordalComponent> split_components(const ChordalGraph& g);

}  // namespace recol
