#include "recol/boxes.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "recol/programs.hpp"

namespace recol {

namespace {

// Induced adjacency on a vertex subset, local indices follow `members`.
Adjacency induced_adjacency(const Adjacency& adj, const std::vector<Vertex>& members) {
    std::vector<int> local(adj.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    Adjacency out(members.size());
    for (size_t i = 0; i < members.size(); ++i)
        for (Vertex w : adj[members[i]])
            if (local[w] >= 0) out[i].push_back(local[w]);
    return out;
}

int bounded_diameter(const Adjacency& adj, int cap) {
    // Returns min(diameter, cap) for a connected graph.
    int best = 0;
    for (Vertex v = 0; v < static_cast<int>(adj.size()); ++v) {
        auto d = bfs_distances(adj, {v});
        for (int x : d) best = std::max(best, x);
        if (best >= cap) return cap;
    }
    return best;
}

std::vector<Vertex> order_by_left(const IntervalGraph& g, std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
        if (g.left(a) != g.left(b)) return g.left(a) < g.left(b);
        return a < b;
    });
    return vs;
}

// Greedy (4,3)-ruling sweep used by the small-diameter fallback: pick in
// axis order, skipping anything within distance 3 of a pick.
std::vector<Vertex> leader_ruling_sweep(const IntervalGraph& g) {
    std::vector<char> covered(g.n(), 0);
    std::vector<Vertex> S;
    for (Vertex v : g.left_order()) {
        if (covered[v]) continue;
        S.push_back(v);
        auto depth = bfs_distances(g.adj(), {v}, 3);
        for (Vertex u = 0; u < g.n(); ++u)
            if (depth[u] >= 0) covered[u] = 1;
    }
    return order_by_left(g, std::move(S));
}

}  // namespace

std::vector<Vertex> inclusion_maximal_intervals(const IntervalGraph& g) {
    std::vector<Vertex> W;
    for (Vertex v = 0; v < g.n(); ++v) {
        bool contained = false;
        // Only neighbors can contain v.
        for (Vertex u : g.neighbors(v)) {
            if (g.left(u) <= g.left(v) && g.right(v) <= g.right(u) &&
                (g.left(u) < g.left(v) || g.right(v) < g.right(u))) {
                contained = true;
                break;
            }
        }
        if (!contained) W.push_back(v);
    }
    return W;
}

std::vector<Vertex> ruling_set_4_5(const IntervalGraph& g, RoundLedger* ledger, uint64_t id_seed) {
    if (!g.connected()) throw ContractError("ruling_set_4_5: input must be connected");
    auto ids = permuted_ids(g.n(), id_seed);

    if (bounded_diameter(g.adj(), 24) < 24) {
        if (ledger) ledger->charge("ruling/leader-sweep", 24);
        return leader_ruling_sweep(g);
    }

    // Stage 1: inclusion-maximal intervals (one round of neighborhood checks).
    auto W = inclusion_maximal_intervals(g);
    if (ledger) ledger->charge("ruling/maximal-intervals", 1);

    // Stage 2: MIS on the proper-interval subgraph G[W].
    auto w_adj = induced_adjacency(g.adj(), W);
    std::vector<uint64_t> w_ids(W.size());
    for (size_t i = 0; i < W.size(); ++i) w_ids[i] = ids[W[i]];
    auto in_mis = distributed_mis(w_adj, w_ids, std::max(1, max_degree(w_adj)), ledger,
                                  "ruling/proper-mis");
    std::vector<Vertex> M;
    for (size_t i = 0; i < W.size(); ++i)
        if (in_mis[i]) M.push_back(W[i]);
    M = order_by_left(g, std::move(M));

    // Stage 3: MIS on the distance-<=3 conflict graph of M. The axis order
    // keeps the conflict graph path-like with degree <= 4.
    std::vector<int> m_index(g.n(), -1);
    for (size_t i = 0; i < M.size(); ++i) m_index[M[i]] = static_cast<int>(i);
    Adjacency h(M.size());
    for (size_t i = 0; i < M.size(); ++i) {
        auto dist = bfs_distances(g.adj(), {M[i]}, 3);
        for (Vertex u = 0; u < g.n(); ++u)
            if (dist[u] > 0 && m_index[u] >= 0 && m_index[u] != static_cast<int>(i))
                h[i].push_back(m_index[u]);
    }
    for (auto& a : h) std::sort(a.begin(), a.end());
    std::vector<uint64_t> h_ids(M.size());
    for (size_t i = 0; i < M.size(); ++i) h_ids[i] = ids[M[i]];
    auto in_s = distributed_mis(h, h_ids, std::max(1, max_degree(h)), ledger,
                                "ruling/spacing-mis", /*multiplier=*/3);
    std::vector<Vertex> S;
    for (size_t i = 0; i < M.size(); ++i)
        if (in_s[i]) S.push_back(M[i]);
    return order_by_left(g, std::move(S));
}

CheckReport validate_ruling_set_4_5(const IntervalGraph& g, const std::vector<Vertex>& S) {
    if (S.empty()) return {false, "ruling set is empty"};
    std::vector<int> dist = bfs_distances(g.adj(), S);
    for (Vertex v = 0; v < g.n(); ++v)
        if (dist[v] < 0 || dist[v] > 5)
            return {false, "vertex " + std::to_string(v) + " is not within distance 5 of S"};
    for (Vertex s : S) {
        auto d = bfs_distances(g.adj(), {s}, 3);
        for (Vertex t : S)
            if (t != s && d[t] >= 0)
                return {false, "ruling pair (" + std::to_string(s) + "," + std::to_string(t) +
                                   ") at distance " + std::to_string(d[t]) + " < 4"};
    }
    return {};
}

BoxDecomposition box_decomposition(const IntervalGraph& g, const std::vector<Vertex>& ruling,
                                   RoundLedger* ledger) {
    auto rep = validate_ruling_set_4_5(g, ruling);
    if (!rep.ok) throw ContractError("box_decomposition: invalid ruling set: " + rep.reason);

    BoxDecomposition bd;
    bd.ruling = ruling;
    std::sort(bd.ruling.begin(), bd.ruling.end(), [&](Vertex a, Vertex b) {
        if (g.left(a) != g.left(b)) return g.left(a) < g.left(b);
        return a < b;
    });

    bd.box_of.assign(g.n(), -1);
    bd.interbox_of.assign(g.n(), -1);
    bd.region_rank.assign(g.n(), -1);
    for (size_t i = 0; i < bd.ruling.size(); ++i) {
        Vertex s = bd.ruling[i];
        std::vector<Vertex> box = g.neighbors(s);
        box.push_back(s);
        std::sort(box.begin(), box.end());
        for (Vertex v : box) {
            if (bd.box_of[v] != -1)
                throw ContractError("box_decomposition: boxes intersect at vertex " +
                                    std::to_string(v));
            bd.box_of[v] = static_cast<int>(i);
            bd.region_rank[v] = 2 * static_cast<int>(i) + 1;
        }
        bd.boxes.push_back(std::move(box));
    }

    // Interboxes: connected components of the remainder. One component per
    // gap spans both sides; pocket components hang off a single box and share
    // the gap slot the pocket's span places them in.
    std::vector<char> seen(g.n(), 0);
    struct RawInterbox {
        std::vector<Vertex> members;
        int left = -1, right = -1;
    };
    std::vector<RawInterbox> raw;
    for (Vertex v = 0; v < g.n(); ++v) {
        if (bd.box_of[v] != -1 || seen[v]) continue;
        RawInterbox ib;
        std::set<int> touched;
        std::queue<Vertex> q;
        q.push(v);
        seen[v] = 1;
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            ib.members.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (bd.box_of[w] != -1) {
                    touched.insert(bd.box_of[w]);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(ib.members.begin(), ib.members.end());
        if (touched.empty())
            throw ContractError("box_decomposition: interbox with no adjacent box");
        if (touched.size() > 2)
            throw ContractError("box_decomposition: interbox touches " +
                                std::to_string(touched.size()) + " boxes");
        if (touched.size() == 2) {
            ib.left = *touched.begin();
            ib.right = *touched.rbegin();
            if (ib.right - ib.left != 1)
                throw ContractError("box_decomposition: interbox spans non-consecutive boxes " +
                                    std::to_string(ib.left) + ".." + std::to_string(ib.right));
        } else {
            int b = *touched.begin();
            long long span_l = g.left(ib.members.front());
            for (Vertex u : ib.members) span_l = std::min(span_l, g.left(u));
            if (span_l < g.left(bd.ruling[b])) {
                ib.left = b - 1;  // -1 marks the leading slot
                ib.right = b;
            } else {
                ib.left = b;
                ib.right = (b + 1 < bd.box_count()) ? b + 1 : -1;
            }
        }
        raw.push_back(std::move(ib));
    }
    std::sort(raw.begin(), raw.end(), [](const RawInterbox& a, const RawInterbox& b) {
        if (a.left != b.left) return a.left < b.left;
        return a.members < b.members;
    });
    for (auto& ib : raw) {
        int idx = static_cast<int>(bd.interboxes.size());
        int rank = 2 * (ib.left + 1);
        for (Vertex u : ib.members) {
            bd.interbox_of[u] = idx;
            bd.region_rank[u] = rank;
        }
        bd.interbox_left.push_back(ib.left);
        bd.interbox_right.push_back(ib.right);
        bd.interboxes.push_back(std::move(ib.members));
    }
    if (ledger) ledger->charge("boxes/structure", 12);
    return bd;
}

std::vector<Vertex> BoxDecomposition::between_exclusive(int i, int j) const {
    int lo = 2 * i + 2, hi = 2 * j;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<int>(region_rank.size()); ++v)
        if (region_rank[v] >= lo && region_rank[v] <= hi) out.push_back(v);
    return out;
}

std::vector<Vertex> BoxDecomposition::between_inclusive(int i, int j) const {
    int lo = 2 * i + 1, hi = 2 * j + 1;
    std::vector<Vertex> out;
    for (Vertex v = 0; v < static_cast<int>(region_rank.size()); ++v)
        if (region_rank[v] >= lo && region_rank[v] <= hi) out.push_back(v);
    return out;
}

CheckReport validate_box_decomposition(const IntervalGraph& g, const BoxDecomposition& bd) {
    auto ruling_report = validate_ruling_set_4_5(g, bd.ruling);
    if (!ruling_report.ok) return ruling_report;

    // Partition of V.
    for (Vertex v = 0; v < g.n(); ++v) {
        bool in_box = bd.box_of[v] != -1, in_ib = bd.interbox_of[v] != -1;
        if (in_box == in_ib)
            return {false, "vertex " + std::to_string(v) + " not in exactly one region"};
    }
    // No edge between distinct boxes.
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            if (bd.box_of[v] != -1 && bd.box_of[w] != -1 && bd.box_of[v] != bd.box_of[w])
                return {false, "edge between boxes " + std::to_string(bd.box_of[v]) + " and " +
                                   std::to_string(bd.box_of[w])};
    // Interboxes touch only their declared neighbor boxes; diameter <= 11 by
    // all-pairs BFS inside the interbox.
    for (size_t i = 0; i < bd.interboxes.size(); ++i) {
        for (Vertex v : bd.interboxes[i])
            for (Vertex w : g.neighbors(v))
                if (bd.box_of[w] != -1 && bd.box_of[w] != bd.interbox_left[i] &&
                    bd.box_of[w] != bd.interbox_right[i])
                    return {false, "interbox " + std::to_string(i) + " touches box " +
                                       std::to_string(bd.box_of[w])};
        auto sub = induced_adjacency(g.adj(), bd.interboxes[i]);
        for (size_t s = 0; s < sub.size(); ++s) {
            auto dist = bfs_distances(sub, {static_cast<Vertex>(s)});
            for (int d : dist) {
                if (d < 0) return {false, "interbox " + std::to_string(i) + " is disconnected"};
                if (d > 11)
                    return {false, "interbox " + std::to_string(i) + " has diameter " +
                                       std::to_string(d) + " > 11"};
            }
        }
    }
    // Alternation along ranks: every consecutive box pair has at least one
    // interbox between them (one spans the gap; pockets may share the slot).
    for (int b = 0; b + 1 < bd.box_count(); ++b) {
        int spanning = 0;
        for (size_t i = 0; i < bd.interboxes.size(); ++i) {
            if (bd.interbox_left[i] != b || bd.interbox_right[i] != b + 1) continue;
            bool touch_l = false, touch_r = false;
            for (Vertex v : bd.interboxes[i])
                for (Vertex w : g.neighbors(v)) {
                    if (bd.box_of[w] == b) touch_l = true;
                    if (bd.box_of[w] == b + 1) touch_r = true;
                }
            if (touch_l && touch_r) ++spanning;
        }
        if (spanning != 1)
            return {false, "expected exactly one spanning interbox between boxes " +
                               std::to_string(b) + " and " + std::to_string(b + 1) + ", found " +
                               std::to_string(spanning)};
    }
    // Separator property: removing a non-extremal box disconnects its sides.
    for (int b = 1; b + 1 < bd.box_count(); ++b) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < g.n(); ++v)
            if (bd.box_of[v] != b) keep.push_back(v);
        auto sub = induced_adjacency(g.adj(), keep);
        std::vector<int> local(g.n(), -1);
        for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
        auto dist = bfs_distances(sub, {local[bd.ruling[b - 1]]});
        if (dist[local[bd.ruling[b + 1]]] != -1)
            return {false, "box " + std::to_string(b) + " does not separate its sides"};
    }
    return {};
}

std::vector<int> spaced_independent_set(const IntervalGraph& g, const BoxDecomposition& bd, int d,
                                        RoundLedger* ledger, uint64_t id_seed) {
    (void)g;
    if (d < 2) throw ContractError("spaced_independent_set: d must be >= 2");
    int m = bd.box_count();
    if (m == 0) throw ContractError("spaced_independent_set: empty decomposition");

    // Longest real-round cost of one ruling-path hop (consecutive ruling
    // vertices are at distance <= 10).
    const long long hop_cost = 11;

    // Greedy fill between anchors at pairwise path distance >= d: gaps end up
    // in [d, 2d-1], which is exactly maximality for distance-d independence.
    auto fill = [&](const std::vector<int>& anchors) {
        std::vector<int> out;
        for (int z = anchors.front() - d; z >= 0; z -= d) out.push_back(z);
        std::reverse(out.begin(), out.end());
        for (size_t i = 0; i < anchors.size(); ++i) {
            out.push_back(anchors[i]);
            int limit = (i + 1 < anchors.size()) ? anchors[i + 1] : m - 1 + d;
            int z = anchors[i];
            while (limit - z >= 2 * d && z + d <= m - 1) {
                z += d;
                out.push_back(z);
            }
        }
        return out;
    };

    if (2 * d + 2 >= m || d > 24) {
        // Too short for symmetry breaking at this scale: a leader sweeps.
        if (ledger) ledger->charge("spaced/leader-sweep", hop_cost * m);
        return fill({0});
    }

    // Iterated MIS on the (virtual) ruling path: each level doubles the
    // minimum spacing, so ceil(log2 d) levels reach pairwise distance >= d.
    std::vector<int> current(m);
    std::iota(current.begin(), current.end(), 0);
    auto perm = permuted_ids(m, id_seed);
    int level = 0;
    long long min_gap = 1;
    while (min_gap < d) {
        ++level;
        int cn = static_cast<int>(current.size());
        if (cn == 1) break;
        long long max_gap = 1;
        for (int i = 0; i + 1 < cn; ++i)
            max_gap = std::max<long long>(max_gap, current[i + 1] - current[i]);

        Adjacency path(cn);
        for (int i = 0; i + 1 < cn; ++i) {
            path[i].push_back(i + 1);
            path[i + 1].push_back(i);
        }
        uint64_t max_id = 0;
        for (int i = 0; i < cn; ++i)
            max_id = std::max<uint64_t>(max_id, perm[current[i]]);
        int bits = 1;
        while ((1ULL << bits) <= max_id) ++bits;
        std::vector<ColeVishkin::Input> cv_in(cn);
        for (int i = 0; i < cn; ++i)
            cv_in[i] = {static_cast<uint64_t>(perm[current[i]]), bits,
                        i + 1 < cn ? i + 1 : -1, i > 0 ? i - 1 : -1};
        auto cv = run_program<ColeVishkin>(path, cv_in, 8 * bits + 64);
        std::vector<SweepMis::Input> sw_in(cn);
        for (int i = 0; i < cn; ++i) sw_in[i] = {cv.outputs[i]};
        auto mis = run_program<SweepMis>(path, sw_in, 8);
        if (ledger)
            ledger->charge("spaced/level" + std::to_string(level),
                           (cv.rounds_used + mis.rounds_used) * hop_cost * max_gap);

        std::vector<int> kept;
        for (int i = 0; i < cn; ++i)
            if (mis.outputs[i]) kept.push_back(current[i]);
        current = std::move(kept);
        min_gap *= 2;  // MIS leaves no two adjacent, doubling the spacing
    }
    auto out = fill(current);
    if (ledger) ledger->charge("spaced/fill", hop_cost * 2 * d);

    for (size_t i = 0; i + 1 < out.size(); ++i)
        if (out[i + 1] - out[i] < d || out[i + 1] - out[i] > 2 * d - 1)
            throw ContractError("spaced_independent_set: spacing invariant violated");
    return out;
}

std::vector<int> ruling_path_labels(const BoxDecomposition& bd, const std::vector<int>& spaced) {
    std::vector<int> labels(bd.box_count(), -1);
    for (int s : spaced) labels[s] = 0;
    for (int it = 0; it < bd.box_count(); ++it) {
        bool changed = false;
        for (int i = 0; i < bd.box_count(); ++i) {
            if (labels[i] == -1) continue;
            for (int j : {i - 1, i + 1})
                if (j >= 0 && j < bd.box_count() && (labels[j] == -1 || labels[j] > labels[i] + 1)) {
                    labels[j] = labels[i] + 1;
                    changed = true;
                }
        }
        if (!changed) break;
    }
    return labels;
}

}  // namespace recol
