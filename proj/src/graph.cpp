#include "recol/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace recol {

bool adjacency_has_edge(const Adjacency& adj, Vertex u, Vertex v) {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int max_degree(const Adjacency& adj) {
    size_t d = 0;
    for (const auto& a : adj) d = std::max(d, a.size());
    return static_cast<int>(d);
}

std::vector<int> bfs_distances(const Adjacency& adj, const std::vector<Vertex>& sources, int cap) {
    std::vector<int> dist(adj.size(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        if (dist[s] == -1) {
            dist[s] = 0;
            q.push(s);
        }
    }
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        if (cap >= 0 && dist[u] >= cap) continue;
        for (Vertex w : adj[u]) {
            if (dist[w] == -1) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int diameter(const Adjacency& adj) {
    int best = 0;
    for (Vertex v = 0; v < static_cast<int>(adj.size()); ++v) {
        auto d = bfs_distances(adj, {v});
        for (int x : d) {
            if (x < 0) throw ContractError("diameter: graph is disconnected");
            best = std::max(best, x);
        }
    }
    return best;
}

std::vector<int> connected_component_ids(const Adjacency& adj) {
    std::vector<int> comp(adj.size(), -1);
    int c = 0;
    for (Vertex s = 0; s < static_cast<int>(adj.size()); ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = c;
                    q.push(w);
                }
        }
        ++c;
    }
    return comp;
}

// ---------------------------------------------------------------------------

IntervalGraph::IntervalGraph(std::vector<std::pair<long long, long long>> intervals)
    : intervals_(std::move(intervals)) {
    if (intervals_.empty()) throw ContractError("IntervalGraph: need at least one interval");
    for (size_t v = 0; v < intervals_.size(); ++v) {
        if (intervals_[v].first > intervals_[v].second)
            throw ContractError("IntervalGraph: interval " + std::to_string(v) +
                                " has left > right");
    }
    left_order_.resize(intervals_.size());
    std::iota(left_order_.begin(), left_order_.end(), 0);
    std::sort(left_order_.begin(), left_order_.end(), [&](Vertex a, Vertex b) {
        if (intervals_[a].first != intervals_[b].first)
            return intervals_[a].first < intervals_[b].first;
        return a < b;
    });

    // Sweep by left endpoint; actives ordered by right endpoint so expired
    // intervals drop off the front.
    adj_.assign(intervals_.size(), {});
    std::set<std::pair<long long, Vertex>> active;  // (right endpoint, id)
    for (Vertex v : left_order_) {
        long long l = intervals_[v].first;
        while (!active.empty() && active.begin()->first < l) active.erase(active.begin());
        for (const auto& [r, u] : active) {
            (void)r;
            adj_[v].push_back(u);
            adj_[u].push_back(v);
        }
        active.emplace(intervals_[v].second, v);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool IntervalGraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    return std::max(left(u), left(v)) <= std::min(right(u), right(v));
}

int IntervalGraph::max_degree() const { return recol::max_degree(adj_); }

bool IntervalGraph::connected() const {
    auto comp = connected_component_ids(adj_);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// ---------------------------------------------------------------------------

ChordalGraph::ChordalGraph(int tree_n, std::vector<std::pair<int, int>> tree_edges,
                           std::vector<std::vector<int>> subtrees)
    : tree_n_(tree_n), tree_edges_(std::move(tree_edges)), subtrees_(std::move(subtrees)) {
    if (tree_n_ < 1) throw ContractError("ChordalGraph: host tree must be nonempty");
    if (static_cast<int>(tree_edges_.size()) != tree_n_ - 1)
        throw ContractError("ChordalGraph: host tree needs exactly tree_n-1 edges");
    if (subtrees_.empty()) throw ContractError("ChordalGraph: need at least one vertex");

    Adjacency tree_adj(tree_n_);
    for (auto [a, b] : tree_edges_) {
        if (a < 0 || a >= tree_n_ || b < 0 || b >= tree_n_)
            throw ContractError("ChordalGraph: tree edge endpoint out of range");
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    {
        auto comp = connected_component_ids(tree_adj);
        for (int c : comp)
            if (c != 0) throw ContractError("ChordalGraph: host tree is not connected");
    }

    node_bags_.assign(tree_n_, {});
    for (size_t v = 0; v < subtrees_.size(); ++v) {
        auto& nodes = subtrees_[v];
        if (nodes.empty())
            throw ContractError("ChordalGraph: subtree of vertex " + std::to_string(v) +
                                " is empty");
        std::sort(nodes.begin(), nodes.end());
        nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
        for (int t : nodes)
            if (t < 0 || t >= tree_n_)
                throw ContractError("ChordalGraph: subtree node out of range for vertex " +
                                    std::to_string(v));
        // Connectivity of the subtree within the host tree.
        std::vector<char> in_sub(tree_n_, 0);
        for (int t : nodes) in_sub[t] = 1;
        std::vector<int> stack = {nodes[0]};
        std::vector<char> seen(tree_n_, 0);
        seen[nodes[0]] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : tree_adj[u])
                if (in_sub[w] && !seen[w]) {
                    seen[w] = 1;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != static_cast<int>(nodes.size()))
            throw ContractError("ChordalGraph: subtree of vertex " + std::to_string(v) +
                                " is not connected in the host tree");
        for (int t : nodes) node_bags_[t].push_back(static_cast<Vertex>(v));
    }

    adj_.assign(subtrees_.size(), {});
    for (int t = 0; t < tree_n_; ++t) {
        const auto& bag = node_bags_[t];
        for (size_t i = 0; i < bag.size(); ++i)
            for (size_t j = i + 1; j < bag.size(); ++j) {
                adj_[bag[i]].push_back(bag[j]);
                adj_[bag[j]].push_back(bag[i]);
            }
    }
    for (auto& a : adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
}

bool ChordalGraph::adjacent(Vertex u, Vertex v) const {
    if (u == v) return false;
    return adjacency_has_edge(adj_, u, v);
}

int ChordalGraph::max_degree() const { return recol::max_degree(adj_); }

bool ChordalGraph::connected() const {
    auto comp = connected_component_ids(adj_);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

// ---------------------------------------------------------------------------

bool Coloring::in_palette() const {
    for (int c : colors)
        if (c < 0 || c >= palette) return false;
    return true;
}

bool Coloring::proper(const Adjacency& adj) const {
    Vertex u, v;
    return !find_conflict(adj, u, v);
}

bool Coloring::find_conflict(const Adjacency& adj, Vertex& u, Vertex& v) const {
    for (Vertex a = 0; a < static_cast<int>(adj.size()); ++a)
        for (Vertex b : adj[a])
            if (b > a && colors[a] == colors[b]) {
                u = a;
                v = b;
                return true;
            }
    return false;
}

// ---------------------------------------------------------------------------

Params Params::derive(int omega, int delta, long long n, int k, int extra) {
    Params p;
    p.omega = omega;
    p.delta = delta;
    p.n = n;
    p.k = k;
    p.extra = extra;
    long long w = omega, d = delta;
    p.N = 3 * d * d * (3 * w * (w - 1) / 2 + 2 + w) + 2 * w;
    p.N_prime = p.N - 2 * w * (d + 1);
    p.N_second = (w > 0) ? (p.N_prime / w - 1) : 0;
    p.D = 240 * w * w * d * d;
    long long ell = 1;
    while ((1LL << ell) < std::max<long long>(n, 2)) ++ell;
    p.ell = ell;
    return p;
}

Config Config::scaled(long long N_override, long long D_override, int spacing_override) {
    Config c;
    c.mode = Mode::Scaled;
    c.seed_run_length = N_override;
    c.decomposition_width = D_override;
    c.box_spacing = spacing_override;
    return c;
}

// ---------------------------------------------------------------------------

std::vector<IntervalComponent> split_components(const IntervalGraph& g) {
    auto comp = connected_component_ids(g.adj());
    int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<IntervalComponent> out;
    out.reserve(nc);
    for (int c = 0; c < nc; ++c) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.n(); ++v)
            if (comp[v] == c) members.push_back(v);
        std::vector<std::pair<long long, long long>> ivs;
        ivs.reserve(members.size());
        for (Vertex v : members) ivs.push_back(g.intervals()[v]);
        out.push_back({IntervalGraph(std::move(ivs)), std::move(members)});
    }
    return out;
}

std::vector<ChordalComponent> split_components(const ChordalGraph& g) {
    auto comp = connected_component_ids(g.adj());
    int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<ChordalComponent> out;
    out.reserve(nc);
    for (int c = 0; c < nc; ++c) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.n(); ++v)
            if (comp[v] == c) members.push_back(v);
        std::vector<std::vector<int>> subs;
        subs.reserve(members.size());
        for (Vertex v : members) subs.push_back(g.subtrees()[v]);
        out.push_back(
            {ChordalGraph(g.tree_n(), g.tree_edges(), std::move(subs)), std::move(members)});
    }
    return out;
}

}  // namespace recol
