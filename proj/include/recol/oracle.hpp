#pragma once

#include <optional>

#include "recol/graph.hpp"
#include "recol/schedule.hpp"

namespace recol {

enum class StepModel { SingleVertex, IndependentSet };

struct ReachResult {
    bool reachable = false;
    Schedule witness;  // empty when unreachable
    long long states_explored = 0;
};

/// Exact BFS over proper colorings with k colors. Vertices in `frozen` keep
/// their start color. Since an independent-set step splits into single-vertex
/// steps through proper intermediate colorings, reachability coincides for
/// both models; the witness uses single-vertex steps either way.
/// Exceeding the state budget raises BudgetError, never a guess.
ReachResult bfs_reachability(const Adjacency& adj, const Coloring& alpha, const Coloring& beta,
                             int k, StepModel model = StepModel::IndependentSet,
                             long long state_budget = 10'000'000,
                             const std::vector<Vertex>& frozen = {});

/// Vertices whose every alternative color already appears in the
/// neighborhood.
std::vector<Vertex> frozen_vertices(const Adjacency& adj, const Coloring& alpha, int k);

/// Exact chromatic number by branch and bound; refuses n > 16.
int brute_chromatic(const Adjacency& adj);

}  // namespace recol
