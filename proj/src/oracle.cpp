#include "recol/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <unordered_map>

namespace recol {

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ULL;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

}  // namespace

ReachResult bfs_reachability(const Adjacency& adj, const Coloring& alpha, const Coloring& beta,
                             int k, StepModel model, long long state_budget,
                             const std::vector<Vertex>& frozen) {
    (void)model;  // reachability coincides; witnesses are single-vertex steps
    const int n = static_cast<int>(adj.size());
    if (alpha.n() != n || beta.n() != n)
        throw ContractError("bfs_reachability: coloring size mismatch");
    if (!alpha.proper(adj) || !beta.proper(adj))
        throw ContractError("bfs_reachability: input colorings must be proper");
    double est = std::pow(static_cast<double>(k), static_cast<double>(n));
    if (est > static_cast<double>(state_budget))
        throw BudgetError("bfs_reachability: k^n = " + std::to_string(est) +
                          " exceeds the state budget; refusing to guess");

    std::vector<char> is_frozen(n, 0);
    for (Vertex v : frozen) is_frozen[v] = 1;
    for (Vertex v = 0; v < n; ++v)
        if (is_frozen[v] && alpha[v] != beta[v]) return {false, {}, 0};

    ReachResult res;
    if (alpha.colors == beta.colors) {
        res.reachable = true;
        res.witness.palette_k = k;
        return res;
    }

    struct Edge {
        int parent;
        Vertex v;
        int old_color;
    };
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    std::vector<Edge> tree;
    std::vector<std::vector<int>> states;
    states.push_back(alpha.colors);
    tree.push_back({-1, -1, -1});
    seen.emplace(alpha.colors, 0);
    std::queue<int> q;
    q.push(0);

    int goal = -1;
    while (!q.empty() && goal < 0) {
        int cur = q.front();
        q.pop();
        std::vector<int> state = states[cur];
        for (Vertex v = 0; v < n && goal < 0; ++v) {
            if (is_frozen[v]) continue;
            int old = state[v];
            for (int c = 0; c < k; ++c) {
                if (c == old) continue;
                bool clash = false;
                for (Vertex w : adj[v])
                    if (state[w] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
                state[v] = c;
                auto it = seen.find(state);
                if (it == seen.end()) {
                    int id = static_cast<int>(states.size());
                    if (id > state_budget)
                        throw BudgetError("bfs_reachability: state budget exhausted");
                    seen.emplace(state, id);
                    states.push_back(state);
                    tree.push_back({cur, v, old});
                    q.push(id);
                    if (state == beta.colors) {
                        goal = id;
                        break;
                    }
                }
                state[v] = old;
            }
            state[v] = old;
        }
    }
    res.states_explored = static_cast<long long>(states.size());
    if (goal < 0) return res;

    res.reachable = true;
    res.witness.palette_k = k;
    std::vector<Step> steps;
    for (int cur = goal; tree[cur].parent != -1; cur = tree[cur].parent) {
        Vertex v = tree[cur].v;
        steps.push_back({{v, states[cur][v]}});
    }
    std::reverse(steps.begin(), steps.end());
    res.witness.steps = std::move(steps);
    return res;
}

std::vector<Vertex> frozen_vertices(const Adjacency& adj, const Coloring& alpha, int k) {
    const int n = static_cast<int>(adj.size());
    if (!alpha.proper(adj)) throw ContractError("frozen_vertices: coloring must be proper");
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<char> present(k, 0);
        for (Vertex w : adj[v])
            if (alpha[w] < k) present[alpha[w]] = 1;
        bool frozen = true;
        for (int c = 0; c < k && frozen; ++c)
            if (c != alpha[v] && !present[c]) frozen = false;
        if (frozen) out.push_back(v);
    }
    return out;
}

namespace {

bool colorable_with(const Adjacency& adj, int k, std::vector<int>& colors, Vertex v) {
    if (v == static_cast<Vertex>(adj.size())) return true;
    int used_max = 0;
    for (Vertex u = 0; u < v; ++u) used_max = std::max(used_max, colors[u] + 1);
    for (int c = 0; c < std::min(k, used_max + 1); ++c) {  // symmetry: first use of c
        bool clash = false;
        for (Vertex w : adj[v])
            if (w < v && colors[w] == c) {
                clash = true;
                break;
            }
        if (clash) continue;
        colors[v] = c;
        if (colorable_with(adj, k, colors, v + 1)) return true;
    }
    colors[v] = -1;
    return false;
}

}  // namespace

int brute_chromatic(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    if (n > 16) throw BudgetError("brute_chromatic: refusing n > 16");
    if (n == 0) return 0;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> colors(n, -1);
        if (colorable_with(adj, k, colors, 0)) return k;
    }
    return n;
}

}  // namespace recol
