#include "recol/sim.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace recol {

View gather_view(const Adjacency& adj, Vertex v, int radius) {
    if (radius < 0) throw ContractError("gather_view: radius must be >= 0");
    View view;
    view.center = v;
    view.radius = radius;

    std::unordered_map<Vertex, int> dist;
    dist[v] = 0;
    std::queue<Vertex> q;
    q.push(v);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (dist[u] == radius) continue;
        for (Vertex w : adj[u])
            if (!dist.count(w)) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    view.vertices.reserve(dist.size());
    for (const auto& [u, d] : dist) {
        (void)d;
        view.vertices.push_back(u);
    }
    std::sort(view.vertices.begin(), view.vertices.end());
    view.dist.reserve(view.vertices.size());
    for (size_t i = 0; i < view.vertices.size(); ++i) {
        view.local_of[view.vertices[i]] = static_cast<int>(i);
        view.dist.push_back(dist[view.vertices[i]]);
    }
    view.local_adj.assign(view.vertices.size(), {});
    for (size_t i = 0; i < view.vertices.size(); ++i)
        for (Vertex w : adj[view.vertices[i]]) {
            auto it = view.local_of.find(w);
            if (it != view.local_of.end()) view.local_adj[i].push_back(it->second);
        }
    return view;
}

std::vector<int> permuted_ids(int n, uint64_t seed) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(ids.begin(), ids.end(), rng);
    }
    return ids;
}

}  // namespace recol
