#include "recol/recolor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

#include "recol/clique.hpp"

namespace recol {

IntervalSubgraph interval_subgraph(const IntervalGraph& g, const std::vector<Vertex>& members) {
    std::vector<std::pair<long long, long long>> ivs;
    ivs.reserve(members.size());
    for (Vertex v : members) ivs.push_back(g.intervals()[v]);
    IntervalSubgraph sub{IntervalGraph(std::move(ivs)), members, {}};
    sub.to_local.assign(g.n(), -1);
    for (size_t i = 0; i < members.size(); ++i) sub.to_local[members[i]] = static_cast<int>(i);
    return sub;
}

std::vector<Vertex> anchored_order(const IntervalGraph& g, const std::vector<Vertex>& window,
                                   int* max_back_degree) {
    std::vector<char> in_window(g.n(), 0);
    for (Vertex v : window) in_window[v] = 1;
    std::vector<int> deg(g.n(), 0);
    std::set<std::tuple<int, long long, Vertex>> pq;
    auto key = [&](Vertex v) {
        return std::tuple<int, long long, Vertex>(deg[v], g.right(v) - g.left(v), v);
    };
    for (Vertex v : window) {
        deg[v] = g.degree(v);  // remaining window neighbors plus frozen ones
        pq.insert(key(v));
    }
    std::vector<char> removed(g.n(), 0);
    std::vector<Vertex> order;
    int worst = 0;
    while (!pq.empty()) {
        auto [d, len, v] = *pq.begin();
        (void)len;
        pq.erase(pq.begin());
        worst = std::max(worst, d);
        removed[v] = 1;
        order.push_back(v);
        for (Vertex w : g.neighbors(v))
            if (in_window[w] && !removed[w]) {
                pq.erase(key(w));
                --deg[w];
                pq.insert(key(w));
            }
    }
    if (max_back_degree) *max_back_degree = worst;
    return order;
}

// ---------------------------------------------------------------------------
// The window transform engine: anchored-order recoloring with guarded dodges.
// Applying (u, c) first pushes every earlier-positioned window neighbor
// currently colored c out of the way; dodge colors only need to avoid the
// later-or-frozen neighborhood, which the anchored order bounds.

namespace {

struct TransformEngine {
    const IntervalGraph& g;
    std::vector<int>& cur;
    const std::vector<char>& in_window;
    const std::vector<int>& pos;  // anchored position, -1 for frozen
    int budget;
    bool low_mode;                  // final colors < low_cap instead of exact target
    int low_cap;
    const std::vector<int>* target;  // exact-target mode
    bool prefer_spares;              // dodge into colors >= low_cap when legal
    std::vector<Step>& out;

    void blocked_later(Vertex v, std::vector<char>& blocked) const {
        for (Vertex w : g.neighbors(v))
            if (!in_window[w] || pos[w] > pos[v])
                if (cur[w] >= 0 && cur[w] < budget) blocked[cur[w]] = 1;
    }

    int pick_dodge(Vertex v, int incoming) {
        std::vector<char> blocked(budget, 0);
        blocked_later(v, blocked);
        if (incoming >= 0) blocked[incoming] = 1;
        if (target && (*target)[v] >= 0 && (*target)[v] < budget && !blocked[(*target)[v]] &&
            (*target)[v] != cur[v])
            return (*target)[v];
        if (prefer_spares) {
            for (int c = low_cap; c < budget; ++c)
                if (!blocked[c] && c != cur[v]) return c;
        }
        for (int c = 0; c < budget; ++c)
            if (!blocked[c] && c != cur[v]) return c;
        throw ContractError("window transform: no dodge color for vertex " + std::to_string(v) +
                            " within budget " + std::to_string(budget));
    }

    void apply(Vertex u, int c) {
        for (Vertex w : g.neighbors(u))
            if (in_window[w] && pos[w] < pos[u] && cur[w] == c) apply(w, pick_dodge(w, c));
        for (Vertex w : g.neighbors(u))
            if (cur[w] == c)
                throw ContractError("window transform: internal properness violation at vertex " +
                                    std::to_string(u));
        out.push_back({{u, c}});
        cur[u] = c;
    }
};

Schedule window_transform(const IntervalGraph& g, const std::vector<Vertex>& window,
                          const Coloring& start, int budget, bool low_mode, int low_cap,
                          const Coloring* target, bool prefer_spares) {
    std::vector<char> in_window(g.n(), 0);
    for (Vertex v : window) in_window[v] = 1;
    int d_max = 0;
    auto order = anchored_order(g, window, &d_max);
    if (budget < d_max + 2)
        throw ContractError("window transform: budget " + std::to_string(budget) +
                            " below anchored degeneracy " + std::to_string(d_max) + " plus 2");
    std::vector<int> pos(g.n(), -1);
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);

    Schedule sched;
    sched.palette_k = budget;
    std::vector<int> cur = start.colors;
    std::vector<int> tgt;
    if (target) tgt = target->colors;
    TransformEngine engine{g,       cur,  in_window, pos, budget, low_mode, low_cap,
                           target ? &tgt : nullptr, prefer_spares, sched.steps};

    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
        Vertex v = order[i];
        if (low_mode) {
            if (cur[v] < low_cap) continue;
            std::vector<char> blocked(budget, 0);
            engine.blocked_later(v, blocked);
            int fc = -1;
            for (int c = 0; c < low_cap; ++c)
                if (!blocked[c]) {
                    fc = c;
                    break;
                }
            if (fc < 0)
                throw ContractError("window transform: no low color available for vertex " +
                                    std::to_string(v));
            engine.apply(v, fc);
        } else {
            if (cur[v] != tgt[v]) engine.apply(v, tgt[v]);
        }
    }
    return sched;
}

}  // namespace

Schedule reduce_window(const IntervalGraph& g, const std::vector<Vertex>& window,
                       const Coloring& alpha, int k, bool fast) {
    int omega = max_clique_size(g);
    if (k < 2 * omega)
        throw ContractError("reduce_window: k = " + std::to_string(k) + " below 2*omega = " +
                            std::to_string(2 * omega));
    return window_transform(g, window, alpha, k, /*low_mode=*/true, 2 * omega - 1, nullptr, fast);
}

Schedule retarget_window(const IntervalGraph& g, const std::vector<Vertex>& window,
                         const Coloring& cur, const Coloring& target, int budget) {
    return window_transform(g, window, cur, budget, /*low_mode=*/false, budget, &target, false);
}

// ---------------------------------------------------------------------------
// Kempe machinery.

namespace {

std::vector<Vertex> kempe_component(const IntervalGraph& g, const std::vector<int>& cur,
                                    Vertex anchor, int a, int b) {
    std::vector<Vertex> comp;
    std::vector<char> seen(g.n(), 0);
    std::queue<Vertex> q;
    q.push(anchor);
    seen[anchor] = 1;
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        comp.push_back(u);
        for (Vertex w : g.neighbors(u))
            if (!seen[w] && (cur[w] == a || cur[w] == b)) {
                seen[w] = 1;
                q.push(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace

KempePlan kempe_plan(const IntervalGraph& g, const std::vector<Vertex>& S, const Coloring& alpha,
                     const Coloring& beta_S) {
    auto np = nice_path(clique_path(g));
    if (!is_consecutive(np, S))
        throw ContractError("kempe_plan: S is not a consecutive vertex set");
    std::vector<Vertex> order = S;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.left(a) != g.left(b)) return g.left(a) < g.left(b);
        return a < b;
    });
    KempePlan plan;
    std::vector<int> cur = alpha.colors;
    for (Vertex s : order) {
        if (cur[s] == beta_S[s]) continue;
        int a = cur[s], b = beta_S[s];
        for (Vertex v : kempe_component(g, cur, s, a, b)) cur[v] = (cur[v] == a) ? b : a;
        plan.push_back({s, a, b});
    }
    return plan;
}

Coloring kempe_replay(const IntervalGraph& g, const Coloring& alpha, const KempePlan& plan) {
    Coloring cur = alpha;
    for (const auto& ch : plan) {
        if (cur[ch.anchor] != ch.from)
            throw ContractError("kempe_replay: anchor color diverged from the plan");
        for (Vertex v : kempe_component(g, cur.colors, ch.anchor, ch.from, ch.to))
            cur[v] = (cur[v] == ch.from) ? ch.to : ch.from;
    }
    return cur;
}

Schedule kempe_cut(const IntervalGraph& g, const std::vector<Vertex>& S, const KempePlan& plan,
                   const Coloring& alpha, int c0, const std::vector<Vertex>& border) {
    for (int c : alpha.colors)
        if (c == c0) throw ContractError("kempe_cut: extra color already present in alpha");
    for (const auto& ch : plan)
        if (ch.from == c0 || ch.to == c0)
            throw ContractError("kempe_cut: plan uses the extra color");

    auto dist_S = bfs_distances(g.adj(), S);
    long long dmin = -1;  // -1 = no border, unbounded
    for (Vertex b : border)
        if (dmin < 0 || dist_S[b] < dmin) dmin = dist_S[b];
    if (dmin >= 0 && dmin < 3 * static_cast<long long>(plan.size()))
        throw ContractError("kempe_cut: border at distance " + std::to_string(dmin) +
                            " but the plan needs " + std::to_string(3 * plan.size()));

    Schedule sched;
    sched.palette_k = std::max(alpha.palette, c0 + 1);
    std::vector<int> cur = alpha.colors;
    std::vector<char> frozen(g.n(), 0);
    for (Vertex b : border) frozen[b] = 1;

    auto push_step = [&](Step step) {
        if (step.empty()) return;
        for (auto [v, c] : step) {
            if (frozen[v])
                throw ContractError("kempe_cut: attempted to recolor a border vertex");
            cur[v] = c;
        }
        sched.push(std::move(step));
    };

    for (size_t t = 0; t < plan.size(); ++t) {
        const auto& ch = plan[t];
        long long Dt = (dmin < 0) ? -1 : dmin - 1 - 3 * static_cast<long long>(t);
        if (cur[ch.anchor] != ch.from)
            throw ContractError("kempe_cut: anchor color diverged from the plan");
        auto C = kempe_component(g, cur, ch.anchor, ch.from, ch.to);

        Step a_step;
        for (Vertex v : C)
            if (cur[v] == ch.from && (Dt < 0 || dist_S[v] <= Dt)) a_step.push_back({v, c0});
        push_step(std::move(a_step));

        Step b_step;
        for (Vertex v : C) {
            if (cur[v] != ch.to) continue;
            bool blocked = false;
            for (Vertex w : g.neighbors(v))
                if (cur[w] == ch.from) {
                    blocked = true;
                    break;
                }
            if (!blocked) b_step.push_back({v, ch.from});
        }
        push_step(std::move(b_step));

        Step c_step;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (cur[v] != c0) continue;
            bool blocked = false;
            for (Vertex w : g.neighbors(v))
                if (cur[w] == ch.to) {
                    blocked = true;
                    break;
                }
            if (!blocked) c_step.push_back({v, ch.to});
        }
        push_step(std::move(c_step));
    }
    return sched;
}

// ---------------------------------------------------------------------------
// Seeding target-colored runs.

namespace {

Schedule remap_schedule(const Schedule& local, const std::vector<Vertex>& to_global) {
    Schedule out;
    out.palette_k = local.palette_k;
    out.extra = local.extra;
    for (const Step& st : local.steps) {
        Step mapped;
        mapped.reserve(st.size());
        for (auto [v, c] : st) mapped.push_back({to_global[v], c});
        std::sort(mapped.begin(), mapped.end());
        out.steps.push_back(std::move(mapped));
    }
    return out;
}

}  // namespace

SeedResult seed_targets(const IntervalGraph& g, const BoxDecomposition& bd, const Coloring& alpha,
                        const Coloring& beta, long long N, int c0, RoundLedger* ledger,
                        uint64_t id_seed) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (alpha[v] == c0 || beta[v] == c0)
            throw ContractError("seed_targets: extra color present in alpha or beta");

    const long long span = 3 * (2 * N + 1);
    const long long dseed = 6 * (2 * N + 1) + 1;

    SeedResult res;
    res.seeded = alpha;

    std::vector<int> seeds;
    bool fallback = bd.box_count() < 2 * dseed + 1;
    if (fallback) {
        seeds = {bd.box_count() / 2};
        res.fell_back = true;
    } else {
        seeds = spaced_independent_set(g, bd, static_cast<int>(dseed), ledger, id_seed);
    }

    std::vector<Schedule> parts;
    for (int seed_idx : seeds) {
        int lo_box = std::max<long long>(0, seed_idx - span);
        int hi_box = std::min<long long>(bd.box_count() - 1, seed_idx + span);
        auto region = fallback ? [&] {
            std::vector<Vertex> all(g.n());
            std::iota(all.begin(), all.end(), 0);
            return all;
        }()
                               : bd.between_inclusive(lo_box, hi_box);
        auto sub = interval_subgraph(g, region);
        auto np = nice_path(clique_path(sub.graph));

        // Local target window: the seed box plus N introductions either side.
        int p_lo = sub.graph.n(), p_hi = -1;
        for (Vertex v : bd.boxes[seed_idx]) {
            int lv = sub.to_local[v];
            if (lv < 0) throw ContractError("seed_targets: seed box escapes its working region");
            p_lo = std::min(p_lo, np.position[lv]);
            p_hi = std::max(p_hi, np.position[lv]);
        }
        if (p_hi - p_lo > N)
            throw ContractError("seed_targets: N = " + std::to_string(N) +
                                " is smaller than the seed box span " +
                                std::to_string(p_hi - p_lo));
        int w_lo = std::max<long long>(0, p_lo - N);
        int w_hi = std::min<long long>(sub.graph.n() - 1, p_lo + N);
        std::vector<Vertex> S_local;
        for (int p = w_lo; p <= w_hi; ++p) S_local.push_back(np.intro[p]);
        std::sort(S_local.begin(), S_local.end());

        Coloring alpha_local(std::vector<int>(sub.graph.n(), 0),
                             std::max(alpha.palette, c0 + 1));
        Coloring beta_local = alpha_local;
        for (int lv = 0; lv < sub.graph.n(); ++lv) {
            alpha_local[lv] = res.seeded[sub.to_global[lv]];
            beta_local[lv] = beta[sub.to_global[lv]];
        }
        auto border_local = border_of_set(g.adj(), region);  // global ids
        std::vector<Vertex> border_lv;
        for (Vertex v : border_local) border_lv.push_back(sub.to_local[v]);
        std::sort(border_lv.begin(), border_lv.end());

        auto plan = kempe_plan(sub.graph, S_local, alpha_local, beta_local);
        auto local_sched = kempe_cut(sub.graph, S_local, plan, alpha_local, c0, border_lv);
        parts.push_back(remap_schedule(local_sched, sub.to_global));

        std::vector<Vertex> run;
        for (Vertex lv : S_local) run.push_back(sub.to_global[lv]);
        std::sort(run.begin(), run.end());
        res.runs.push_back(std::move(run));
    }

    for (auto& p : parts) {
        p.palette_k = std::max(alpha.palette, c0 + 1);
        p.extra = 0;
    }
    res.schedule = merge_parallel(parts);
    if (res.schedule.palette_k == 0) res.schedule.palette_k = std::max(alpha.palette, c0 + 1);
    res.seeded = apply_schedule(res.seeded, res.schedule);
    res.seeded.palette = std::max(alpha.palette, beta.palette);
    if (ledger) ledger->charge("seed_targets/regions", 11 * (2 * span + 1) + 12);
    return res;
}

// ---------------------------------------------------------------------------
// Window recoloring between seeded runs.

namespace {

// Independent bounded search used only as the exact window strategy; kept
// separate from the oracle module on purpose.
bool window_exact_search(const IntervalGraph& g, const std::vector<Vertex>& interior,
                         const Coloring& gamma, const Coloring& beta, int budget,
                         Schedule* witness) {
    struct VecHash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 14695981039346656037ULL;
            for (int x : v) {
                h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ULL;
                h *= 1099511628211ULL;
            }
            return h;
        }
    };
    std::vector<int> start, goal;
    for (Vertex v : interior) {
        start.push_back(gamma[v]);
        goal.push_back(beta[v]);
    }
    if (start == goal) {
        if (witness) *witness = Schedule{budget, 0, {}};
        return true;
    }
    std::unordered_map<std::vector<int>, int, VecHash> seen;
    std::vector<std::vector<int>> states{start};
    struct Edge {
        int parent;
        int idx;
        int color;
    };
    std::vector<Edge> tree{{-1, -1, -1}};
    seen.emplace(start, 0);
    std::queue<int> q;
    q.push(0);
    const long long cap = 2'000'000;
    int goal_id = -1;
    while (!q.empty() && goal_id < 0) {
        int id = q.front();
        q.pop();
        auto state = states[id];
        for (size_t i = 0; i < interior.size() && goal_id < 0; ++i) {
            Vertex v = interior[i];
            int old = state[i];
            for (int c = 0; c < budget; ++c) {
                if (c == old) continue;
                bool clash = false;
                for (Vertex w : g.neighbors(v)) {
                    // interior neighbors read the state, frozen ones gamma
                    int wc = gamma[w];
                    for (size_t j = 0; j < interior.size(); ++j)
                        if (interior[j] == w) {
                            wc = state[j];
                            break;
                        }
                    if (wc == c) {
                        clash = true;
                        break;
                    }
                }
                if (clash) continue;
                state[i] = c;
                if (!seen.count(state)) {
                    int nid = static_cast<int>(states.size());
                    if (nid > cap) throw BudgetError("window exact search: state budget hit");
                    seen.emplace(state, nid);
                    states.push_back(state);
                    tree.push_back({id, static_cast<int>(i), c});
                    q.push(nid);
                    if (state == goal) {
                        goal_id = nid;
                        break;
                    }
                }
                state[i] = old;
            }
            state[i] = old;
        }
    }
    if (goal_id < 0) return false;
    if (witness) {
        witness->palette_k = budget;
        witness->extra = 0;
        std::vector<Step> steps;
        for (int cur = goal_id; tree[cur].parent != -1; cur = tree[cur].parent)
            steps.push_back({{interior[tree[cur].idx], tree[cur].color}});
        std::reverse(steps.begin(), steps.end());
        witness->steps = std::move(steps);
    }
    return true;
}

// Sliding frontier: fix interior vertices in axis order, dodging the
// conflicting right-side neighbors first. Heuristic; may fail explicitly.
bool window_sliding(const IntervalGraph& g, const std::vector<Vertex>& interior,
                    const Coloring& gamma, const Coloring& beta, int budget, Schedule* out,
                    std::string* reason) {
    std::vector<char> in_interior(g.n(), 0);
    for (Vertex v : interior) in_interior[v] = 1;
    std::vector<Vertex> order = interior;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (g.left(a) != g.left(b)) return g.left(a) < g.left(b);
        return a < b;
    });
    std::vector<char> done(g.n(), 0);
    std::vector<int> cur = gamma.colors;
    Schedule sched;
    sched.palette_k = budget;

    auto emit = [&](Vertex v, int c) {
        for (Vertex w : g.neighbors(v))
            if (cur[w] == c) return false;
        sched.push({{v, c}});
        cur[v] = c;
        return true;
    };

    for (Vertex v : order) {
        if (cur[v] != beta[v]) {
            // Dodge unprocessed interior neighbors holding beta[v].
            std::vector<Vertex> conflicts;
            for (Vertex w : g.neighbors(v))
                if (in_interior[w] && !done[w] && w != v && cur[w] == beta[v])
                    conflicts.push_back(w);
            for (Vertex w : conflicts) {
                int pick = -1;
                for (int c = 0; c < budget && pick < 0; ++c) {
                    if (c == cur[w] || c == beta[v]) continue;
                    bool clash = false;
                    for (Vertex x : g.neighbors(w))
                        if (cur[x] == c) {
                            clash = true;
                            break;
                        }
                    if (!clash) pick = c;
                }
                if (pick < 0) {
                    if (reason)
                        *reason = "sliding: no dodge color for vertex " + std::to_string(w);
                    return false;
                }
                if (!emit(w, pick)) {
                    if (reason) *reason = "sliding: dodge collided";
                    return false;
                }
            }
            if (!emit(v, beta[v])) {
                if (reason)
                    *reason = "sliding: vertex " + std::to_string(v) + " blocked on its target";
                return false;
            }
        }
        done[v] = 1;
    }
    *out = std::move(sched);
    return true;
}

}  // namespace

WindowResult window_recolor(const IntervalGraph& g, const std::vector<Vertex>& interior,
                            const Coloring& gamma, const Coloring& beta, int budget,
                            const std::string& force_strategy) {
    WindowResult res;
    // The interior's outside neighborhood is frozen; beta must already agree
    // with gamma there.
    Coloring extended = gamma;
    for (Vertex v : interior) extended[v] = beta[v];
    {
        Vertex u, w;
        if (extended.find_conflict(g.adj(), u, w))
            throw ContractError("window_recolor: target is improper against the frozen border (" +
                                std::to_string(u) + "," + std::to_string(w) + ")");
    }
    bool already = true;
    for (Vertex v : interior)
        if (gamma[v] != beta[v]) {
            already = false;
            break;
        }
    if (already) {
        res.ok = true;
        res.strategy = "noop";
        res.schedule.palette_k = budget;
        return res;
    }

    double state_estimate = 1;
    for (size_t i = 0; i < interior.size() && state_estimate < 3e6; ++i) state_estimate *= budget;
    bool exact_feasible = interior.size() <= 8 || (interior.size() <= 12 && state_estimate <= 2e6);

    int d_max = 0;
    anchored_order(g, interior, &d_max);
    bool degeneracy_feasible = budget >= d_max + 2;

    auto try_exact = [&]() {
        Schedule w;
        if (window_exact_search(g, interior, gamma, extended, budget, &w)) {
            res.ok = true;
            res.schedule = std::move(w);
            res.strategy = "exact";
            return true;
        }
        res.ok = false;
        res.strategy = "exact";
        res.reason = "exact search proved the target unreachable within the window";
        return true;  // verdict reached either way
    };
    auto try_degeneracy = [&]() {
        res.schedule = retarget_window(g, interior, gamma, extended, budget);
        res.ok = true;
        res.strategy = "degeneracy";
        return true;
    };
    auto try_sliding = [&]() {
        Schedule w;
        std::string why;
        if (window_sliding(g, interior, gamma, extended, budget, &w, &why)) {
            res.ok = true;
            res.schedule = std::move(w);
            res.strategy = "sliding";
            return true;
        }
        res.ok = false;
        res.strategy = "sliding";
        res.reason = why;
        return false;
    };

    if (force_strategy == "exact") {
        if (interior.size() > 12)
            throw BudgetError("window_recolor: exact strategy infeasible here");
        try_exact();
        return res;
    }
    if (force_strategy == "degeneracy") {
        try_degeneracy();
        return res;
    }
    if (force_strategy == "sliding") {
        try_sliding();
        return res;
    }

    if (degeneracy_feasible) {
        try_degeneracy();
        return res;
    }
    if (exact_feasible) {
        try_exact();
        return res;
    }
    if (try_sliding()) return res;
    res.reason += "; degeneracy needs budget >= " + std::to_string(d_max + 2) + ", have " +
                  std::to_string(budget);
    return res;
}

// ---------------------------------------------------------------------------
// Distributed color reduction and the 4*omega pipeline.

Reduce2Result reduce_to_2omega_detailed(const IntervalGraph& g, const Coloring& alpha, int k,
                                        const Config& cfg, RoundLedger* ledger,
                                        uint64_t id_seed) {
    (void)cfg;
    const int omega = max_clique_size(g);
    if (k < 2 * omega)
        throw ContractError("reduce_to_2omega: k = " + std::to_string(k) + " below 2*omega");
    Reduce2Result res;
    res.phase1.palette_k = res.phase2.palette_k = k;
    bool low_already = true;
    for (Vertex v = 0; v < g.n(); ++v)
        if (alpha[v] > 2 * omega - 2) {
            low_already = false;
            break;
        }
    if (low_already) return res;
    if (g.n() == 1) {
        res.phase1.push({{0, 0}});
        return res;
    }

    auto S = ruling_set_4_5(g, ledger, id_seed);
    res.bd = box_decomposition(g, S, ledger);
    const auto& bd = res.bd;
    res.spaced = spaced_independent_set(g, bd, 6, ledger, id_seed);
    const auto& I = res.spaced;

    Coloring cur = alpha;
    auto run_phase = [&](const std::vector<std::vector<Vertex>>& windows, Schedule& into,
                         const char* name) {
        std::vector<Schedule> parts;
        for (const auto& win : windows) {
            if (win.empty()) continue;
            parts.push_back(reduce_window(g, win, cur, k, false));
        }
        for (auto& p : parts) {
            p.palette_k = k;
            p.extra = 0;
        }
        auto merged = merge_parallel(parts);
        merged.palette_k = k;
        cur = apply_schedule(cur, merged);
        into.append(merged);
        if (ledger) ledger->charge(name, 11 * 6 + 12);
    };

    // Phase 1: strictly between consecutive spaced boxes (and the extremal
    // stretches); the spaced boxes themselves are never touched.
    std::vector<std::vector<Vertex>> phase1;
    phase1.push_back(bd.between_exclusive(-1, I.front()));
    for (size_t t = 0; t + 1 < I.size(); ++t)
        phase1.push_back(bd.between_exclusive(I[t], I[t + 1]));
    phase1.push_back(bd.between_exclusive(I.back(), bd.box_count()));
    run_phase(phase1, res.phase1, "reduce2omega/phase1");
    res.phase1_windows = std::move(phase1);

    // Phase 2: the spaced boxes with their flanks, borders frozen low.
    std::vector<std::vector<Vertex>> phase2;
    for (int idx : I) {
        int lo = std::max(-1, idx - 1), hi = std::min(bd.box_count(), idx + 1);
        auto region = bd.between_inclusive(lo, hi);
        auto border = border_of_set(g.adj(), region);
        std::vector<char> is_border(g.n(), 0);
        for (Vertex v : border) is_border[v] = 1;
        std::vector<Vertex> win;
        for (Vertex v : region)
            if (!is_border[v]) win.push_back(v);
        phase2.push_back(std::move(win));
    }
    run_phase(phase2, res.phase2, "reduce2omega/phase2");

    for (Vertex v = 0; v < g.n(); ++v)
        if (cur[v] > 2 * omega - 2)
            throw ContractError("reduce_to_2omega: vertex " + std::to_string(v) +
                                " still carries color " + std::to_string(cur[v]));
    return res;
}

Schedule reduce_to_2omega(const IntervalGraph& g, const Coloring& alpha, int k, const Config& cfg,
                          RoundLedger* ledger, uint64_t id_seed) {
    auto res = reduce_to_2omega_detailed(g, alpha, k, cfg, ledger, id_seed);
    Schedule out = res.phase1;
    out.append(res.phase2);
    return out;
}

Schedule recolor_4omega(const IntervalGraph& g, const Coloring& alpha, const Coloring& beta,
                        int k, const Config& cfg, RoundLedger* ledger, uint64_t id_seed) {
    const int omega = max_clique_size(g);
    if (k < 4 * omega)
        throw ContractError("recolor_4omega: k = " + std::to_string(k) + " below 4*omega");
    Schedule sched;
    sched.palette_k = k;

    auto ra = reduce_to_2omega(g, alpha, k, cfg, ledger, id_seed);
    auto rb = reduce_to_2omega(g, beta, k, cfg, ledger, id_seed);
    Coloring a2 = apply_schedule(alpha, ra);
    Coloring b2 = apply_schedule(beta, rb);

    sched.append(ra);
    if (a2.colors != b2.colors) {
        // rotate through the upper palette: each step is a color class of b2
        for (int i = 0; i < 2 * omega; ++i) {
            Step step;
            for (Vertex v = 0; v < g.n(); ++v)
                if (b2[v] == i) step.push_back({v, 2 * omega + i});
            if (!step.empty()) sched.push(std::move(step));
        }
        for (int i = 0; i < 2 * omega; ++i) {
            Step step;
            for (Vertex v = 0; v < g.n(); ++v)
                if (b2[v] == i) step.push_back({v, i});
            if (!step.empty()) sched.push(std::move(step));
        }
    }
    auto back = reverse_schedule(beta, rb);
    sched.steps.insert(sched.steps.end(), back.steps.begin(), back.steps.end());
    if (ledger) ledger->charge("recolor4omega/rotation", 1);
    return sched;
}

// ---------------------------------------------------------------------------
// Top-level interval recoloring.

int branch_extra_budget(int k, int omega) {
    if (k >= 2 * omega) return 0;
    if (k >= omega + 3) return 1;
    return omega - k + 4;
}

namespace {

// Interiors strictly between consecutive seeded runs, plus the extremal
// stretches; grouped by nice-path position.
std::vector<std::vector<Vertex>> run_gaps(const IntervalGraph& g,
                                          const std::vector<std::vector<Vertex>>& runs) {
    auto np = nice_path(clique_path(g));
    std::vector<char> in_run(g.n(), 0);
    std::vector<std::pair<int, int>> spans;  // position spans of runs
    for (const auto& run : runs) {
        int lo = g.n(), hi = -1;
        for (Vertex v : run) {
            in_run[v] = 1;
            lo = std::min(lo, np.position[v]);
            hi = std::max(hi, np.position[v]);
        }
        spans.push_back({lo, hi});
    }
    std::sort(spans.begin(), spans.end());
    std::vector<std::vector<Vertex>> gaps(spans.size() + 1);
    for (Vertex v = 0; v < g.n(); ++v) {
        if (in_run[v]) continue;
        int p = np.position[v];
        size_t slot = 0;
        while (slot < spans.size() && p > spans[slot].second) ++slot;
        if (slot < spans.size() && p >= spans[slot].first)
            throw ContractError("run_gaps: vertex position collides with a seeded run");
        gaps[slot].push_back(v);
    }
    return gaps;
}

Schedule half_schedule(const IntervalGraph& g, const Coloring& start, const Coloring& gamma,
                       int k, int extra, bool via_reduction, const Config& cfg,
                       RoundLedger* ledger, uint64_t id_seed) {
    const int omega = max_clique_size(g);
    Schedule out;
    out.palette_k = k;
    out.extra = extra;

    Coloring cur = start;
    int c0, budget;
    if (via_reduction) {
        auto red = reduce_to_2omega(g, cur, k, cfg, ledger, id_seed);
        red.extra = extra;
        out.append(red);
        cur = apply_schedule(cur, red);
        cur.palette = k;
        c0 = 2 * omega - 1;
        budget = k;
    } else {
        c0 = k;  // first extra color
        budget = k + extra;
    }

    Params params = Params::derive(omega, std::max(1, g.max_degree()), g.n(), k, extra);
    long long N = params.N;
    if (!cfg.faithful() && cfg.seed_run_length > 0) N = cfg.seed_run_length;

    auto S = ruling_set_4_5(g, ledger, id_seed);
    auto bd = box_decomposition(g, S, ledger);
    auto seeded = seed_targets(g, bd, cur, gamma, N, c0, ledger, id_seed);
    {
        Schedule part = seeded.schedule;
        part.palette_k = k;
        part.extra = extra;
        if (via_reduction) part.extra = 0;
        for (const auto& st : part.steps)
            for (auto [v, c] : st) {
                (void)v;
                if (c >= k + extra)
                    throw ContractError("half_schedule: seeding exceeded the declared palette");
            }
        part.palette_k = out.palette_k;
        part.extra = out.extra;
        out.append(part);
    }
    cur = seeded.seeded;
    cur.palette = k + extra;

    // Windows between seeded runs run in parallel; verify non-adjacency.
    auto gaps = run_gaps(g, seeded.runs);
    std::vector<int> gap_of(g.n(), -1);
    for (size_t i = 0; i < gaps.size(); ++i)
        for (Vertex v : gaps[i]) gap_of[v] = static_cast<int>(i);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex w : g.neighbors(v))
            if (gap_of[v] != -1 && gap_of[w] != -1 && gap_of[v] != gap_of[w])
                throw ContractError(
                    "half_schedule: seeded runs too narrow to separate the windows (scale N up)");

    std::vector<Schedule> window_parts;
    for (const auto& gap : gaps) {
        if (gap.empty()) continue;
        auto res = window_recolor(g, gap, cur, gamma, budget);
        if (!res.ok)
            throw ContractError("half_schedule: window recoloring failed (" + res.strategy +
                                "): " + res.reason);
        window_parts.push_back(std::move(res.schedule));
    }
    for (auto& p : window_parts) {
        p.palette_k = out.palette_k;
        p.extra = out.extra;
    }
    auto merged = merge_parallel(window_parts);
    merged.palette_k = out.palette_k;
    merged.extra = out.extra;
    out.append(merged);
    if (ledger) ledger->charge("half/window-finish", 11 * 5 + 12);

    Coloring end = apply_schedule(start, out);
    if (end.colors != gamma.colors)
        throw ContractError("half_schedule: did not reach the canonical coloring");
    return out;
}

}  // namespace

Schedule interval_recolor(const IntervalGraph& g, const Coloring& alpha, const Coloring& beta,
                          int k, int extra, const Config& cfg, RoundLedger* ledger,
                          uint64_t id_seed) {
    const int omega = max_clique_size(g);
    if (!alpha.proper(g.adj()) || !beta.proper(g.adj()))
        throw ContractError("interval_recolor: input colorings must be proper");
    for (Vertex v = 0; v < g.n(); ++v)
        if (alpha[v] >= k || beta[v] >= k)
            throw ContractError("interval_recolor: endpoint colorings must use colors < k");

    Schedule out;
    out.palette_k = k;
    out.extra = extra;
    bool equal_endpoints = alpha.colors == beta.colors;

    if (g.n() == 1) {
        if (!equal_endpoints) out.push({{0, beta[0]}});
        return out;
    }
    if (k >= 4 * omega && extra == 0) {
        if (equal_endpoints) return out;
        auto s = recolor_4omega(g, alpha, beta, k, cfg, ledger, id_seed);
        s.extra = 0;
        return s;
    }
    bool via_reduction = false;
    if (k >= 2 * omega && extra == 0) {
        via_reduction = true;
    } else if (k >= omega + 3) {
        if (extra < 1)
            throw ContractError("interval_recolor: branch k >= omega+3 needs extra >= 1");
    } else {
        if (extra < omega - k + 4)
            throw ContractError("interval_recolor: branch k <= omega+2 needs extra >= " +
                                std::to_string(omega - k + 4));
    }
    if (equal_endpoints) return out;

    auto gamma = interval_color(g, cfg, ledger, id_seed);
    auto s1 = half_schedule(g, alpha, gamma, k, extra, via_reduction, cfg, ledger, id_seed);
    auto s2 = half_schedule(g, beta, gamma, k, extra, via_reduction, cfg, ledger, id_seed);
    auto composed = compose_via_canonical(alpha, s1, beta, s2);
    composed.palette_k = k;
    composed.extra = extra;
    return composed;
}

}  // namespace recol
