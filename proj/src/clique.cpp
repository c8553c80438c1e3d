#include "recol/clique.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace recol {

namespace {

bool is_subset(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    // both sorted
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string describe_components(const Adjacency& adj) {
    auto comp = connected_component_ids(adj);
    int nc = *std::max_element(comp.begin(), comp.end()) + 1;
    std::string msg = std::to_string(nc) + " components; component 1 contains vertices {";
    bool first = true;
    for (Vertex v = 0; v < static_cast<int>(adj.size()) && msg.size() < 120; ++v) {
        if (comp[v] == 1) {
            if (!first) msg += ",";
            msg += std::to_string(v);
            first = false;
        }
    }
    msg += "}";
    return msg;
}

}  // namespace

std::pair<int, int> CliquePath::run_of(Vertex v) const {
    int first = -1, last = -1;
    for (int i = 0; i < size(); ++i) {
        if (std::binary_search(bags[i].begin(), bags[i].end(), v)) {
            if (first < 0) first = i;
            last = i;
        }
    }
    return {first, last};
}

std::vector<std::vector<int>> CliqueTree::tree_adj() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

CliquePath clique_path(const IntervalGraph& g) {
    if (!g.connected())
        throw ContractError("clique_path: input is disconnected: " +
                            describe_components(g.adj()));

    // Sweep over endpoint events; the active set at each coordinate carrying a
    // right endpoint is a candidate maximal clique.
    std::vector<std::pair<long long, Vertex>> starts, ends;
    for (Vertex v = 0; v < g.n(); ++v) {
        starts.emplace_back(g.left(v), v);
        ends.emplace_back(g.right(v), v);
    }
    std::sort(starts.begin(), starts.end());
    std::sort(ends.begin(), ends.end());

    std::vector<std::vector<Vertex>> candidates;
    std::set<Vertex> active;
    size_t si = 0, ei = 0;
    while (ei < ends.size()) {
        long long x = ends[ei].first;
        while (si < starts.size() && starts[si].first <= x) active.insert(starts[si++].second);
        candidates.emplace_back(active.begin(), active.end());
        while (ei < ends.size() && ends[ei].first == x) active.erase(ends[ei++].second);
    }

    // Nested candidates only occur between neighbors in sweep order.
    CliquePath cp;
    for (auto& c : candidates) {
        while (!cp.bags.empty() && is_subset(cp.bags.back(), c)) cp.bags.pop_back();
        if (!cp.bags.empty() && is_subset(c, cp.bags.back())) continue;
        cp.bags.push_back(std::move(c));
    }
    return cp;
}

namespace {

// Shared contraction for clique trees built from a subtree representation:
// absorb a bag into a neighbor whenever it is a subset, until fixpoint.
CliqueTree contract_to_clique_tree(int tree_n, const std::vector<std::pair<int, int>>& tree_edges,
                                   std::vector<std::vector<Vertex>> bags) {
    std::vector<int> parent(tree_n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& b : bags) std::sort(b.begin(), b.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [a, b] : tree_edges) {
            int ra = find(a), rb = find(b);
            if (ra == rb) continue;
            if (is_subset(bags[ra], bags[rb])) {
                parent[ra] = rb;
                changed = true;
            } else if (is_subset(bags[rb], bags[ra])) {
                parent[rb] = ra;
                changed = true;
            }
        }
    }

    std::map<int, int> rep_to_id;
    CliqueTree t;
    for (int u = 0; u < tree_n; ++u) {
        int r = find(u);
        if (!rep_to_id.count(r)) {
            rep_to_id[r] = static_cast<int>(t.bags.size());
            t.bags.push_back(bags[r]);
        }
    }
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : tree_edges) {
        int ra = rep_to_id[find(a)], rb = rep_to_id[find(b)];
        if (ra == rb) continue;
        auto e = std::minmax(ra, rb);
        if (seen.insert({e.first, e.second}).second) t.edges.emplace_back(e.first, e.second);
    }
    return t;
}

}  // namespace

CliqueTree clique_tree(const ChordalGraph& g) {
    if (!g.connected())
        throw ContractError("clique_tree: input is disconnected: " + describe_components(g.adj()));
    std::vector<std::vector<Vertex>> bags(g.tree_n());
    for (int t = 0; t < g.tree_n(); ++t) bags[t] = g.bag_of_node(t);
    return contract_to_clique_tree(g.tree_n(), g.tree_edges(), std::move(bags));
}

CliqueTree clique_tree_of_subset(const ChordalGraph& g, const std::vector<Vertex>& members) {
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    std::vector<std::vector<Vertex>> bags(g.tree_n());
    for (int t = 0; t < g.tree_n(); ++t)
        for (Vertex v : g.bag_of_node(t))
            if (local[v] >= 0) bags[t].push_back(local[v]);
    return contract_to_clique_tree(g.tree_n(), g.tree_edges(), std::move(bags));
}

std::optional<CliquePath> clique_tree_as_path(const CliqueTree& t) {
    auto adj = t.tree_adj();
    int end = -1;
    for (int i = 0; i < t.size(); ++i) {
        if (adj[i].size() > 2) return std::nullopt;
        if (adj[i].size() <= 1) end = i;
    }
    if (t.size() == 1) return CliquePath{{t.bags[0]}};
    if (end < 0) return std::nullopt;
    CliquePath cp;
    int prev = -1, cur = end;
    while (cur != -1) {
        cp.bags.push_back(t.bags[cur]);
        int next = -1;
        for (int w : adj[cur])
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    return cp;
}

NicePath nice_path(const CliquePath& cp) {
    NicePath np;
    int n = 0;
    for (const auto& b : cp.bags) n += static_cast<int>(b.size());
    np.position.assign(n, -1);  // resized below once n is known exactly

    std::vector<Vertex> current;
    std::set<Vertex> present;
    int max_id = -1;
    for (const auto& bag : cp.bags)
        for (Vertex v : bag) max_id = std::max(max_id, v);
    np.position.assign(max_id + 1, -1);

    for (size_t i = 0; i < cp.bags.size(); ++i) {
        const auto& bag = cp.bags[i];
        // Drop vertices that ended before this bag.
        current.erase(std::remove_if(current.begin(), current.end(),
                                     [&](Vertex v) {
                                         return !std::binary_search(bag.begin(), bag.end(), v);
                                     }),
                      current.end());
        for (Vertex v : bag) {
            if (present.insert(v).second) {
                current.push_back(v);
                np.position[v] = static_cast<int>(np.bags.size());
                np.intro.push_back(v);
                auto sorted = current;
                std::sort(sorted.begin(), sorted.end());
                np.bags.push_back(std::move(sorted));
            }
        }
    }
    return np;
}

int max_clique_size(const IntervalGraph& g) {
    std::vector<std::pair<long long, Vertex>> starts, ends;
    for (Vertex v = 0; v < g.n(); ++v) {
        starts.emplace_back(g.left(v), v);
        ends.emplace_back(g.right(v), v);
    }
    std::sort(starts.begin(), starts.end());
    std::sort(ends.begin(), ends.end());
    size_t si = 0, ei = 0;
    int active = 0, best = 0;
    while (ei < ends.size()) {
        long long x = ends[ei].first;
        while (si < starts.size() && starts[si].first <= x) {
            ++active;
            ++si;
        }
        best = std::max(best, active);
        while (ei < ends.size() && ends[ei].first == x) {
            --active;
            ++ei;
        }
    }
    return best;
}

int max_clique_size(const ChordalGraph& g) {
    size_t best = 0;
    for (int t = 0; t < g.tree_n(); ++t) best = std::max(best, g.bag_of_node(t).size());
    return static_cast<int>(best);
}

bool is_consecutive(const NicePath& np, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    int lo = np.size(), hi = -1;
    for (Vertex v : set) {
        if (v < 0 || v >= static_cast<int>(np.position.size()) || np.position[v] < 0) return false;
        lo = std::min(lo, np.position[v]);
        hi = std::max(hi, np.position[v]);
    }
    return hi - lo + 1 == static_cast<int>(set.size());
}

std::vector<Vertex> border_of_set(const Adjacency& adj, const std::vector<Vertex>& set) {
    std::vector<char> in_set(adj.size(), 0);
    for (Vertex v : set) in_set[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v : set)
        for (Vertex w : adj[v])
            if (!in_set[w]) {
                out.push_back(v);
                break;
            }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> border(const IntervalGraph& g, const std::vector<Vertex>& consecutive_set) {
    auto np = nice_path(clique_path(g));
    if (!is_consecutive(np, consecutive_set))
        throw ContractError("border: input set is not consecutive w.r.t. the clique path");
    return border_of_set(g.adj(), consecutive_set);
}

bool coverable_by_two_cliques(const Adjacency& adj, const std::vector<Vertex>& set) {
    if (set.size() <= 2) return true;
    // Two-clique cover of G[set] == bipartite complement of G[set].
    int m = static_cast<int>(set.size());
    std::vector<int> side(m, -1);
    for (int s = 0; s < m; ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack = {s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < m; ++v) {
                if (v == u || adjacency_has_edge(adj, set[u], set[v])) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Vertex> degeneracy_order_excluding_border(const IntervalGraph& g,
                                                      const std::vector<Vertex>& window,
                                                      const std::vector<Vertex>& border) {
    std::vector<char> in_window(g.n(), 0), frozen(g.n(), 0), removed(g.n(), 0);
    for (Vertex v : window) in_window[v] = 1;
    for (Vertex v : border) {
        if (!in_window[v])
            throw ContractError("degeneracy_order_excluding_border: border not inside window");
        frozen[v] = 1;
    }

    std::vector<int> deg(g.n(), 0);
    std::set<std::tuple<int, long long, Vertex>> pq;  // (degree, length, id)
    auto key = [&](Vertex v) {
        return std::tuple<int, long long, Vertex>(deg[v], g.right(v) - g.left(v), v);
    };
    for (Vertex v : window) {
        if (frozen[v]) continue;
        int d = 0;
        for (Vertex w : g.neighbors(v))
            if (in_window[w]) ++d;
        deg[v] = d;
        pq.insert(key(v));
    }

    std::vector<Vertex> order;
    while (!pq.empty()) {
        Vertex v = std::get<2>(*pq.begin());
        pq.erase(pq.begin());
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!in_window[w] || frozen[w] || removed[w]) continue;
            pq.erase(key(w));
            --deg[w];
            pq.insert(key(w));
        }
    }
    return order;
}

std::vector<Vertex> global_degeneracy_order(const Adjacency& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> deg(n);
    std::set<std::pair<int, Vertex>> pq;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        pq.insert({deg[v], v});
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    while (!pq.empty()) {
        Vertex v = pq.begin()->second;
        pq.erase(pq.begin());
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : adj[v])
            if (!removed[w]) {
                pq.erase({deg[w], w});
                --deg[w];
                pq.insert({deg[w], w});
            }
    }
    return order;
}

int degeneracy_of_order(const Adjacency& adj, const std::vector<Vertex>& order) {
    std::vector<int> pos(adj.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    int worst = 0;
    for (size_t i = 0; i < order.size(); ++i) {
        int d = 0;
        for (Vertex w : adj[order[i]])
            if (pos[w] < 0 || pos[w] > static_cast<int>(i)) ++d;
        worst = std::max(worst, d);
    }
    return worst;
}

}  // namespace recol
