#include "recol/chordal_recolor.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "recol/recolor.hpp"

namespace recol {

Schedule align_schedule(const Schedule& sched, int modulus) {
    Schedule out;
    out.palette_k = sched.palette_k;
    out.extra = sched.extra;
    auto pad_to = [&](int color) {
        while (static_cast<int>(out.steps.size()) % modulus != color) out.steps.push_back({});
    };
    for (const Step& st : sched.steps) {
        if (st.empty()) {
            out.steps.push_back({});
            continue;
        }
        std::map<int, Step> by_color;
        for (auto [v, c] : st) by_color[c].push_back({v, c});
        for (auto& [c, part] : by_color) {
            pad_to(c % modulus);
            std::sort(part.begin(), part.end());
            out.steps.push_back(std::move(part));
        }
    }
    return out;
}

namespace {

struct LayerComponent {
    std::vector<Vertex> members;       // global ids
    std::vector<Vertex> order;         // anchored order, global ids
    std::vector<int> pos;              // global -> order position, -1 outside
    IntervalModel model{IntervalGraph({{0, 0}}), {}, {}};  // members + attachment
    std::vector<Vertex> attachment;    // global ids (deeper layers)
    bool pending = false;
};

// Aligned emission shared by every insertion site.
struct Emitter {
    Schedule& out;
    int modulus;
    std::vector<int>& cur;

    void pad_to(int color) {
        while (static_cast<int>(out.steps.size()) % modulus != color % modulus)
            out.steps.push_back({});
    }
    void emit_single(Vertex v, int c) {
        pad_to(c);
        out.steps.push_back({{v, c}});
        cur[v] = c;
    }
    void emit_uniform(Step st) {
        if (st.empty()) {
            out.steps.push_back({});
            return;
        }
        pad_to(st[0].second);
        for (auto [v, c] : st) cur[v] = c;
        std::sort(st.begin(), st.end());
        out.steps.push_back(std::move(st));
    }
};

}  // namespace

Schedule chordal_recolor(const ChordalGraph& g, const IntervalDecomposition& dec,
                         const Coloring& alpha, const Coloring& beta, int k, int extra,
                         const Config& cfg, RoundLedger* ledger, uint64_t id_seed) {
    (void)cfg;
    (void)id_seed;
    const int omega = max_clique_size(g);
    const int budget = k + extra;
    if (k < omega + 3)
        throw ContractError("chordal_recolor: k = " + std::to_string(k) +
                            " below omega+3 = " + std::to_string(omega + 3));
    if (extra < 1) throw ContractError("chordal_recolor: at least one extra color is required");
    if (!alpha.proper(g.adj()) || !beta.proper(g.adj()))
        throw ContractError("chordal_recolor: input colorings must be proper");
    for (Vertex v = 0; v < g.n(); ++v)
        if (alpha[v] >= k || beta[v] >= k)
            throw ContractError("chordal_recolor: endpoint colors must be < k");

    Schedule out;
    out.palette_k = k;
    out.extra = extra;
    if (alpha.colors == beta.colors) return out;

    // Pre-build the layer components with their models and anchored orders;
    // classification throws on width/shape violations.
    std::vector<std::vector<LayerComponent>> layers(dec.depth());
    for (int i = 0; i < dec.depth(); ++i) {
        for (auto& members : layer_components(g, dec, i)) {
            LayerComponent lc;
            auto cls = classify_component(g, dec, i, members);
            lc.pending = cls.pending;
            lc.members = std::move(members);

            std::vector<char> deeper(g.n(), 0);
            for (int d = 0; d < i; ++d)
                for (Vertex v : dec.layers[d]) deeper[v] = 1;
            std::set<Vertex> att;
            for (Vertex v : lc.members)
                for (Vertex w : g.neighbors(v))
                    if (deeper[w]) att.insert(w);
            lc.attachment.assign(att.begin(), att.end());

            std::vector<Vertex> combined = lc.members;
            combined.insert(combined.end(), lc.attachment.begin(), lc.attachment.end());
            std::sort(combined.begin(), combined.end());
            lc.model = interval_model_of_subset(g, combined);

            // anchored order of the members inside the model
            std::vector<Vertex> local_window;
            for (Vertex v : lc.members) local_window.push_back(lc.model.to_local[v]);
            std::sort(local_window.begin(), local_window.end());
            int d_max = 0;
            auto local_order = anchored_order(lc.model.graph, local_window, &d_max);
            if (budget < d_max + 3)
                throw ContractError(
                    "chordal_recolor: component anchored degeneracy " + std::to_string(d_max) +
                    " needs budget >= " + std::to_string(d_max + 3) + ", have " +
                    std::to_string(budget));
            lc.pos.assign(g.n(), -1);
            for (size_t p = 0; p < local_order.size(); ++p) {
                Vertex gv = lc.model.to_global[local_order[p]];
                lc.order.push_back(gv);
                lc.pos[gv] = static_cast<int>(p);
            }
            layers[i].push_back(std::move(lc));
        }
    }

    std::vector<int> cur = alpha.colors;
    std::vector<int> comp_of(g.n(), -1);  // component index within the active layer

    // Guarded dodge within one component: earlier-positioned conflicting
    // neighbors move first; dodge colors avoid later-or-frozen currents plus
    // the color the pending deep step is about to place next door.
    std::function<void(const LayerComponent&, Emitter&, Vertex, int, int)> guarded_apply =
        [&](const LayerComponent& lc, Emitter& em, Vertex u, int c, int reserved) {
            for (Vertex w : g.neighbors(u))
                if (lc.pos[w] != -1 && lc.pos[w] < lc.pos[u] && cur[w] == c) {
                    std::vector<char> blocked(budget, 0);
                    blocked[c] = 1;
                    if (reserved >= 0) blocked[reserved] = 1;
                    for (Vertex x : g.neighbors(w))
                        if (lc.pos[x] == -1 || lc.pos[x] > lc.pos[w])
                            if (cur[x] >= 0 && cur[x] < budget) blocked[cur[x]] = 1;
                    int f = -1;
                    for (int cc = 0; cc < budget; ++cc)
                        if (!blocked[cc] && cc != cur[w]) {
                            f = cc;
                            break;
                        }
                    if (f < 0)
                        throw ContractError("chordal_recolor: no dodge color available");
                    guarded_apply(lc, em, w, f, reserved);
                }
            em.emit_single(u, c);
        };

    auto retarget_component = [&](const LayerComponent& lc, Emitter& em,
                                  const std::vector<int>& target) {
        // Work inside the component's interval model; frozen = attachment.
        const auto& model = lc.model;
        Coloring local_cur(std::vector<int>(model.graph.n(), 0), budget);
        Coloring local_tgt = local_cur;
        for (int lv = 0; lv < model.graph.n(); ++lv) {
            Vertex gv = model.to_global[lv];
            local_cur[lv] = cur[gv];
            local_tgt[lv] = target[gv];
        }
        for (Vertex a : lc.attachment) local_tgt[model.to_local[a]] = cur[a];
        std::vector<Vertex> interior;
        for (Vertex v : lc.members) interior.push_back(model.to_local[v]);
        std::sort(interior.begin(), interior.end());
        auto res = window_recolor(model.graph, interior, local_cur, local_tgt, budget);
        if (!res.ok)
            throw ContractError("chordal_recolor: component retarget failed (" + res.strategy +
                                "): " + res.reason);
        for (const Step& st : res.schedule.steps)
            for (auto [lv, c] : st) em.emit_single(model.to_global[lv], c);
    };

    // Layer 0: straight retarget of every component to beta.
    Emitter em{out, budget, cur};
    for (const auto& lc : layers[0]) retarget_component(lc, em, beta.colors);

    // Extend layer by layer: replay the deep schedule, dodging the incoming
    // color out of adjacent new-layer vertices just in time.
    for (int i = 1; i < dec.depth(); ++i) {
        Schedule deep = std::move(out);
        out = Schedule{k, extra, {}};
        cur = alpha.colors;
        Emitter emi{out, budget, cur};

        std::fill(comp_of.begin(), comp_of.end(), -1);
        for (size_t ci = 0; ci < layers[i].size(); ++ci)
            for (Vertex v : layers[i][ci].members) comp_of[v] = static_cast<int>(ci);

        for (const Step& st : deep.steps) {
            if (st.empty()) {
                out.steps.push_back({});
                continue;
            }
            int c = st[0].second;
            // collect conflicting new-layer vertices adjacent to this step
            std::set<Vertex> conflicts;
            for (auto [u, cc] : st) {
                (void)cc;
                for (Vertex w : g.neighbors(u))
                    if (comp_of[w] != -1 && cur[w] == c) conflicts.insert(w);
            }
            for (Vertex x : conflicts) {
                const auto& lc = layers[i][comp_of[x]];
                std::vector<char> blocked(budget, 0);
                blocked[c] = 1;
                for (Vertex y : g.neighbors(x))
                    if (lc.pos[y] == -1 || lc.pos[y] > lc.pos[x])
                        if (cur[y] >= 0 && cur[y] < budget) blocked[cur[y]] = 1;
                int f = -1;
                for (int cc = 0; cc < budget; ++cc)
                    if (!blocked[cc] && cc != cur[x]) {
                        f = cc;
                        break;
                    }
                if (f < 0) throw ContractError("chordal_recolor: conflict dodge ran out of colors");
                guarded_apply(lc, emi, x, f, c);
            }
            emi.emit_uniform(st);
        }
        // Deep layers now at beta; finish the new layer.
        for (const auto& lc : layers[i]) retarget_component(lc, emi, beta.colors);
        if (ledger) ledger->charge("chordal_recolor/layer" + std::to_string(i), 3 * dec.width + 2);
    }

    // Internal endpoint check; the validator re-checks everything.
    for (Vertex v = 0; v < g.n(); ++v)
        if (cur[v] != beta[v])
            throw ContractError("chordal_recolor: vertex " + std::to_string(v) +
                                " missed its target");
    return out;
}

}  // namespace recol
