#include "recol/color.hpp"

#include <algorithm>
#include <numeric>

namespace recol {

namespace {

// Clique of intervals crossing a point, restricted to a vertex set.
std::vector<Vertex> clique_at_point(const IntervalGraph& g, const std::vector<Vertex>& members,
                                    long long x) {
    std::vector<Vertex> out;
    for (Vertex v : members)
        if (g.left(v) <= x && x <= g.right(v)) out.push_back(v);
    return out;
}

}  // namespace

Coloring greedy_extend(const IntervalGraph& g, const std::vector<Vertex>& members,
                       Coloring partial, int palette, bool rightward) {
    std::vector<Vertex> todo;
    for (Vertex v : members)
        if (partial[v] < 0) todo.push_back(v);
    std::sort(todo.begin(), todo.end(), [&](Vertex a, Vertex b) {
        if (rightward) {
            if (g.left(a) != g.left(b)) return g.left(a) < g.left(b);
        } else {
            if (g.right(a) != g.right(b)) return g.right(a) > g.right(b);
        }
        return a < b;
    });
    for (Vertex v : todo) {
        std::vector<char> blocked(palette, 0);
        for (Vertex w : g.neighbors(v))
            if (partial[w] >= 0 && partial[w] < palette) blocked[partial[w]] = 1;
        int pick = -1;
        for (int c = 0; c < palette; ++c)
            if (!blocked[c]) {
                pick = c;
                break;
            }
        if (pick < 0)
            throw ContractError("greedy_extend: vertex " + std::to_string(v) +
                                " has no free color in palette " + std::to_string(palette));
        partial[v] = pick;
    }
    partial.palette = std::max(partial.palette, palette);
    return partial;
}

namespace {

// Applies one recoloring stage: every vertex of `region` with region rank
// strictly above `rank_threshold` and current color `from` moves to `to`.
void stage_recolor(const BoxDecomposition& bd, const std::vector<Vertex>& region, Coloring& cur,
                   int rank_threshold, int from, int to) {
    for (Vertex v : region)
        if (bd.region_rank[v] > rank_threshold && cur[v] == from) cur[v] = to;
}

}  // namespace

Coloring switch_bridge_stage(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                             const Coloring& base, int x, int y, int stage, int last_box) {
    (void)g;
    Coloring cur = base;
    int extra = base.palette;
    cur.palette = extra + 1;
    int p = box_a;
    int hi_rank = (last_box < 0) ? 2 * bd.box_count() : 2 * last_box + 1;
    std::vector<Vertex> region;
    for (Vertex v = 0; v < static_cast<int>(bd.region_rank.size()); ++v)
        if (bd.region_rank[v] >= 2 * p + 1 && bd.region_rank[v] <= hi_rank) region.push_back(v);
    if (stage >= 1) stage_recolor(bd, region, cur, 2 * p + 2, x, extra);
    if (stage >= 2) stage_recolor(bd, region, cur, 2 * p + 4, y, x);
    if (stage >= 3) stage_recolor(bd, region, cur, 2 * p + 6, extra, y);
    return cur;
}

Coloring switch_bridge(const IntervalGraph& g, const BoxDecomposition& bd, int box_a, int box_b,
                       const Coloring& alpha, int x, int y) {
    if (box_b - box_a != 3)
        throw ContractError("switch_bridge: boxes must be at virtual distance 3, got " +
                            std::to_string(box_b - box_a));
    if (x == y) {
        Coloring out = alpha;
        out.palette = alpha.palette + 1;
        return out;
    }
    return switch_bridge_stage(g, bd, box_a, alpha, x, y, 3, box_b);
}

namespace {

// Permutation on [0,k) sending each alpha color of the point clique at box_b
// to its beta color, completed with fixed points first.
std::vector<int> clique_permutation(const IntervalGraph& g, const BoxDecomposition& bd, int box_b,
                                    const Coloring& alpha, const Coloring& beta, int k) {
    Vertex s = bd.ruling[box_b];
    auto clique = clique_at_point(g, bd.boxes[box_b], g.left(s));
    std::vector<int> perm(k, -1);
    std::vector<char> used(k, 0);
    for (Vertex v : clique) {
        int a = alpha[v], b = beta[v];
        if (a < 0 || a >= k || b < 0 || b >= k)
            throw ContractError("border_interpolate: clique colors exceed the shared palette");
        if (perm[a] != -1 && perm[a] != b)
            throw ContractError("border_interpolate: inconsistent clique permutation");
        perm[a] = b;
    }
    for (int c = 0; c < k; ++c)
        if (perm[c] != -1) used[perm[c]] = 1;
    for (int c = 0; c < k; ++c)
        if (perm[c] == -1 && !used[c]) {
            perm[c] = c;
            used[c] = 1;
        }
    for (int c = 0; c < k; ++c) {
        if (perm[c] != -1) continue;
        for (int t = 0; t < k; ++t)
            if (!used[t]) {
                perm[c] = t;
                used[t] = 1;
                break;
            }
    }
    return perm;
}

std::vector<std::pair<int, int>> transpositions_of(const std::vector<int>& perm) {
    int k = static_cast<int>(perm.size());
    std::vector<std::pair<int, int>> out;
    std::vector<char> seen(k, 0);
    for (int c = 0; c < k; ++c) {
        if (seen[c] || perm[c] == c) {
            seen[c] = 1;
            continue;
        }
        std::vector<int> cycle;
        int cur = c;
        while (!seen[cur]) {
            seen[cur] = 1;
            cycle.push_back(cur);
            cur = perm[cur];
        }
        // (c1 c2 .. cm) applied as (c1 c2), (c1 c3), ..., (c1 cm)
        for (size_t i = 1; i < cycle.size(); ++i) out.emplace_back(cycle[0], cycle[i]);
    }
    return out;
}

}  // namespace

int interpolation_transpositions(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                                 int box_b, const Coloring& alpha, const Coloring& beta) {
    (void)box_a;
    int k = std::max(alpha.palette, beta.palette);
    auto perm = clique_permutation(g, bd, box_b, alpha, beta, k);
    return static_cast<int>(transpositions_of(perm).size());
}

Coloring border_interpolate(const IntervalGraph& g, const BoxDecomposition& bd, int box_a,
                            int box_b, const Coloring& alpha, const Coloring& beta) {
    if (box_a >= box_b) throw ContractError("border_interpolate: box_a must precede box_b");
    const int k = std::max(alpha.palette, beta.palette);
    if (alpha.colors == beta.colors) {
        Coloring out = alpha;
        out.palette = k;
        return out;  // no extra color needed
    }
    auto perm = clique_permutation(g, bd, box_b, alpha, beta, k);
    auto swaps = transpositions_of(perm);
    const int t = static_cast<int>(swaps.size());
    const int gap = box_b - box_a;
    if (gap < 3 * t + 1)
        throw ContractError("border_interpolate: need at least " + std::to_string(3 * t + 1) +
                            " separating boxes for " + std::to_string(t) +
                            " transpositions, have " + std::to_string(gap));

    Coloring cur = alpha;
    for (int s = 0; s < t; ++s) {
        int p = box_a + 3 * s;
        cur.palette = k;  // the shared extra color is always index k
        cur = switch_bridge_stage(g, bd, p, cur, swaps[s].first, swaps[s].second, 3, box_b);
    }
    cur.palette = k + 1;

    // The chained swaps realize beta exactly on the point clique of box_b;
    // vertices of the box strictly right of that point only touch the clique
    // and the right side, so they can take beta directly.
    Vertex s_b = bd.ruling[box_b];
    for (Vertex v : bd.boxes[box_b])
        if (g.left(v) > g.left(s_b)) cur[v] = beta[v];
    for (Vertex v : clique_at_point(g, bd.boxes[box_b], g.left(s_b)))
        if (cur[v] != beta[v])
            throw ContractError("border_interpolate: clique permutation failed to reach beta");
    return cur;
}

Coloring interval_color(const IntervalGraph& g, const Config& cfg, RoundLedger* ledger,
                        uint64_t id_seed) {
    if (!g.connected()) throw ContractError("interval_color: input must be connected");
    const int omega = max_clique_size(g);
    if (g.n() == 1) return Coloring({0}, 1);

    auto S = ruling_set_4_5(g, ledger, id_seed);
    auto bd = box_decomposition(g, S, ledger);

    int spacing = std::max(4, 3 * omega);
    if (!cfg.faithful() && cfg.box_spacing > 0) spacing = std::max(4, cfg.box_spacing);
    auto I = spaced_independent_set(g, bd, spacing, ledger, id_seed);

    // Leaders omega-color the selected boxes.
    Coloring out(std::vector<int>(g.n(), -1), omega + 1);
    for (int idx : I) {
        Coloring part(std::vector<int>(g.n(), -1), omega);
        part = greedy_extend(g, bd.boxes[idx], part, omega, true);
        for (Vertex v : bd.boxes[idx]) out[v] = part[v];
    }
    if (ledger) ledger->charge("interval_color/box-leaders", 2);

    // Fill the gaps: extend each selected box's coloring over the segment from
    // both sides and interpolate.
    auto color_segment = [&](int a, int b) {
        auto segment = bd.between_inclusive(a, b);
        Coloring alpha_part(std::vector<int>(g.n(), -1), omega);
        Coloring beta_part(std::vector<int>(g.n(), -1), omega);
        for (Vertex v : bd.boxes[a]) alpha_part[v] = out[v];
        for (Vertex v : bd.boxes[b]) beta_part[v] = out[v];
        alpha_part = greedy_extend(g, segment, alpha_part, omega, true);
        beta_part = greedy_extend(g, segment, beta_part, omega, false);
        auto glued = border_interpolate(g, bd, a, b, alpha_part, beta_part);
        for (Vertex v : segment)
            if (bd.box_of[v] != a && bd.box_of[v] != b) out[v] = glued[v];
    };
    for (size_t i = 0; i + 1 < I.size(); ++i) color_segment(I[i], I[i + 1]);

    // Extremal stretches before the first and after the last selected box.
    {
        auto lead = bd.between_exclusive(-1, I.front());
        if (!lead.empty()) {
            Coloring part(std::vector<int>(g.n(), -1), omega);
            for (Vertex v : bd.boxes[I.front()]) part[v] = out[v];
            std::vector<Vertex> scope = lead;
            scope.insert(scope.end(), bd.boxes[I.front()].begin(), bd.boxes[I.front()].end());
            part = greedy_extend(g, scope, part, omega, false);
            for (Vertex v : lead) out[v] = part[v];
        }
        auto tail = bd.between_exclusive(I.back(), bd.box_count());
        if (!tail.empty()) {
            Coloring part(std::vector<int>(g.n(), -1), omega);
            for (Vertex v : bd.boxes[I.back()]) part[v] = out[v];
            std::vector<Vertex> scope = tail;
            scope.insert(scope.end(), bd.boxes[I.back()].begin(), bd.boxes[I.back()].end());
            part = greedy_extend(g, scope, part, omega, true);
            for (Vertex v : tail) out[v] = part[v];
        }
    }
    if (ledger) ledger->charge("interval_color/segments", 11LL * spacing + 12);

    for (Vertex v = 0; v < g.n(); ++v)
        if (out[v] < 0) throw ContractError("interval_color: uncolored vertex survived");
    return out;
}

}  // namespace recol
