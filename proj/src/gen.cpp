#include "recol/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace recol {

IntervalGraph gen_power_path(int n, int omega) {
    if (n < 1) throw ContractError("gen_power_path: n must be >= 1");
    if (omega < 2) throw ContractError("gen_power_path: omega must be >= 2");
    std::vector<std::pair<long long, long long>> ivs;
    ivs.reserve(n);
    for (int i = 0; i < n; ++i)
        ivs.emplace_back(4LL * i + 1, 4LL * (i + omega - 1) + 3);
    return IntervalGraph(std::move(ivs));
}

IntervalGraph gen_random_interval(int n, uint64_t seed, int spread) {
    if (n < 1) throw ContractError("gen_random_interval: n must be >= 1");
    if (spread < 1) throw ContractError("gen_random_interval: spread must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> gap(0, spread);
    std::uniform_int_distribution<long long> len(1, 4LL * spread);

    std::vector<std::pair<long long, long long>> ivs(n);
    long long cursor = 0;
    for (int i = 0; i < n; ++i) {
        cursor += gap(rng);
        long long l = cursor;
        ivs[i] = {l, l + len(rng)};
    }
    std::shuffle(ivs.begin(), ivs.end(), rng);
    return IntervalGraph(std::move(ivs));
}

ChordalGraph gen_random_chordal(int n, uint64_t seed, int omega_cap) {
    if (n < 1) throw ContractError("gen_random_chordal: n must be >= 1");
    std::mt19937_64 rng(seed);
    int tree_n = std::max(1, n / 2 + 1);
    std::vector<std::pair<int, int>> edges;
    Adjacency tree_adj(tree_n);
    for (int t = 1; t < tree_n; ++t) {
        // Bias toward recent nodes to get long-ish branches rather than stars.
        std::uniform_int_distribution<int> pick(std::max(0, t - 8), t - 1);
        int p = pick(rng);
        edges.emplace_back(p, t);
        tree_adj[p].push_back(t);
        tree_adj[t].push_back(p);
    }

    std::vector<int> load(tree_n, 0);
    std::vector<std::vector<int>> subtrees(n);
    std::uniform_int_distribution<int> size_pick(1, 5);
    for (int v = 0; v < n; ++v) {
        std::uniform_int_distribution<int> node_pick(0, tree_n - 1);
        int start = node_pick(rng);
        if (omega_cap > 0 && load[start] >= omega_cap) {
            for (int tries = 0; tries < 64 && load[start] >= omega_cap; ++tries)
                start = node_pick(rng);
            if (load[start] >= omega_cap) {
                // All sampled nodes are full: extend the host tree with a
                // fresh node so the cap stays hard.
                std::uniform_int_distribution<int> parent_pick(0, tree_n - 1);
                int p = parent_pick(rng);
                edges.emplace_back(p, tree_n);
                tree_adj[p].push_back(tree_n);
                tree_adj.push_back({p});
                load.push_back(0);
                start = tree_n++;
            }
        }
        std::vector<int> nodes = {start};
        std::vector<char> in_sub(tree_n, 0);
        in_sub[start] = 1;
        int want = size_pick(rng);
        std::vector<int> frontier = {start};
        while (static_cast<int>(nodes.size()) < want && !frontier.empty()) {
            std::uniform_int_distribution<size_t> fp(0, frontier.size() - 1);
            size_t fi = fp(rng);
            int u = frontier[fi];
            std::vector<int> options;
            for (int w : tree_adj[u])
                if (!in_sub[w] && (omega_cap <= 0 || load[w] < omega_cap)) options.push_back(w);
            if (options.empty()) {
                frontier.erase(frontier.begin() + fi);
                continue;
            }
            std::uniform_int_distribution<size_t> op(0, options.size() - 1);
            int w = options[op(rng)];
            in_sub[w] = 1;
            nodes.push_back(w);
            frontier.push_back(w);
        }
        for (int t : nodes) ++load[t];
        subtrees[v] = std::move(nodes);
    }
    return ChordalGraph(tree_n, std::move(edges), std::move(subtrees));
}

Coloring gen_random_coloring(const Adjacency& adj, int k, uint64_t seed) {
    std::mt19937_64 rng(seed);
    int n = static_cast<int>(adj.size());
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    Coloring col(std::vector<int>(n, -1), k);
    for (Vertex v : order) {
        std::vector<char> blocked(k, 0);
        for (Vertex w : adj[v])
            if (col[w] >= 0) blocked[col[w]] = 1;
        std::vector<int> free;
        for (int c = 0; c < k; ++c)
            if (!blocked[c]) free.push_back(c);
        if (free.empty())
            throw ContractError("gen_random_coloring: vertex " + std::to_string(v) +
                                " has no free color with k=" + std::to_string(k));
        std::uniform_int_distribution<size_t> pick(0, free.size() - 1);
        col[v] = free[pick(rng)];
    }
    return col;
}

Coloring mod_coloring(const IntervalGraph& g, int k) {
    Coloring col(std::vector<int>(g.n(), 0), k);
    int i = 0;
    for (Vertex v : g.left_order()) col[v] = i++ % k;
    return col;
}

}  // namespace recol
