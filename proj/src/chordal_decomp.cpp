#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "recol/chordal.hpp"
#include "recol/color.hpp"

namespace recol {

namespace {

Adjacency induced_adjacency(const Adjacency& adj, const std::vector<Vertex>& members,
                            std::vector<int>* local_out = nullptr) {
    std::vector<int> local(adj.size(), -1);
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    Adjacency out(members.size());
    for (size_t i = 0; i < members.size(); ++i)
        for (Vertex w : adj[members[i]])
            if (local[w] >= 0) out[i].push_back(local[w]);
    if (local_out) *local_out = std::move(local);
    return out;
}

int subgraph_diameter(const Adjacency& adj, const std::vector<Vertex>& members) {
    auto sub = induced_adjacency(adj, members);
    int best = 0;
    for (size_t s = 0; s < sub.size(); ++s) {
        auto d = bfs_distances(sub, {static_cast<Vertex>(s)});
        for (int x : d) {
            if (x < 0) throw ContractError("subgraph_diameter: disconnected component");
            best = std::max(best, x);
        }
    }
    return best;
}

std::vector<std::vector<Vertex>> components_of_subset(const Adjacency& adj,
                                                      const std::vector<Vertex>& members) {
    std::vector<int> local;
    auto sub = induced_adjacency(adj, members, &local);
    auto comp = connected_component_ids(sub);
    int nc = sub.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<Vertex>> out(nc);
    for (size_t i = 0; i < members.size(); ++i) out[comp[i]].push_back(members[i]);
    return out;
}

}  // namespace

IntervalModel interval_model_of_subset(const ChordalGraph& g, const std::vector<Vertex>& members) {
    auto ct = clique_tree_of_subset(g, members);
    auto path = clique_tree_as_path(ct);
    if (!path)
        throw ContractError("interval_model_of_subset: subset is not an interval graph");
    IntervalModel model{IntervalGraph({{0, 0}}), members, {}};
    std::vector<std::pair<long long, long long>> runs(members.size(), {-1, -1});
    for (int b = 0; b < path->size(); ++b)
        for (Vertex lv : path->bags[b]) {
            if (runs[lv].first < 0) runs[lv].first = b;
            runs[lv].second = b;
        }
    for (auto& [l, r] : runs)
        if (l < 0) throw ContractError("interval_model_of_subset: vertex missing from all bags");
    model.graph = IntervalGraph(std::move(runs));
    model.to_local.assign(g.n(), -1);
    for (size_t i = 0; i < members.size(); ++i) model.to_local[members[i]] = static_cast<int>(i);
    return model;
}

IntervalDecomposition interval_decomposition(const ChordalGraph& g, long long width,
                                             RoundLedger* ledger) {
    if (width < 1) throw ContractError("interval_decomposition: width must be >= 1");
    if (!g.connected()) throw ContractError("interval_decomposition: input must be connected");
    const long long D = width;

    std::vector<char> alive(g.n(), 1);
    int alive_count = g.n();
    std::vector<std::vector<Vertex>> removal_groups;

    int iter = 0;
    while (alive_count > 0) {
        if (++iter > g.n() + 2)
            throw ContractError("interval_decomposition: peeling failed to terminate");
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g.n(); ++v)
            if (alive[v]) members.push_back(v);

        auto t = clique_tree_of_subset(g, members);
        auto tadj = t.tree_adj();
        std::vector<char> marked(t.size(), 0);
        for (int node = 0; node < t.size(); ++node) marked[node] = tadj[node].size() <= 2;

        // A vertex qualifies when every bag holding it is marked.
        std::vector<char> candidate(members.size(), 1);
        for (int node = 0; node < t.size(); ++node)
            if (!marked[node])
                for (Vertex lv : t.bags[node]) candidate[lv] = 0;
        std::vector<Vertex> cand_global;
        for (size_t i = 0; i < members.size(); ++i)
            if (candidate[i]) cand_global.push_back(members[i]);

        const std::vector<char>& alive_now = alive;

        std::vector<std::vector<Vertex>> shorts;
        std::vector<std::vector<Vertex>> longs;
        for (auto& comp : components_of_subset(g.adj(), cand_global)) {
            int diam = subgraph_diameter(g.adj(), comp);
            // Pending means the outside attachment is one clique: that is the
            // shape the layer-by-layer extension machinery needs, and chain
            // attachments always enter through a shared tree node.
            bool is_pending = false;
            if (diam <= 3 * D) {
                std::vector<char> in_comp(g.n(), 0);
                for (Vertex v : comp) in_comp[v] = 1;
                std::set<Vertex> att;
                for (Vertex v : comp)
                    for (Vertex w : g.neighbors(v))
                        if (alive_now[w] && !in_comp[w]) att.insert(w);
                is_pending = true;
                for (auto it = att.begin(); it != att.end() && is_pending; ++it)
                    for (auto jt = std::next(it); jt != att.end(); ++jt)
                        if (!g.adjacent(*it, *jt)) {
                            is_pending = false;
                            break;
                        }
            }
            if (is_pending)
                shorts.push_back(std::move(comp));
            else if (diam >= D)
                longs.push_back(std::move(comp));
        }
        if (shorts.empty() && longs.empty())
            throw ContractError("interval_decomposition: no removable component at iteration " +
                                std::to_string(iter));

        std::vector<Vertex> w1, w2, w3;
        for (auto& comp : shorts) w1.insert(w1.end(), comp.begin(), comp.end());
        for (auto& L : longs) {
            if (subgraph_diameter(g.adj(), L) <= 3 * D) {
                // Long by the >= D rule but still within the diameter cap:
                // keep whole. Its border shape decides pending vs separator.
                w1.insert(w1.end(), L.begin(), L.end());
                continue;
            }
            if (D < 20)
                throw ContractError(
                    "interval_decomposition: width < 20 cannot host the box splitting phase");
            auto model = interval_model_of_subset(g, L);
            auto S = ruling_set_4_5(model.graph);
            auto bd = box_decomposition(model.graph, S);

            // Extremities of the model along the axis.
            Vertex ext_l = model.graph.left_order().front();
            auto dist_l = bfs_distances(model.graph.adj(), {ext_l});
            std::vector<int> kept;
            long long last_mark = -1;  // distance of the previous kept box from ext_l
            for (int i = 0; i < bd.box_count(); ++i) {
                long long d = dist_l[bd.ruling[i]];
                if (last_mark < 0 ? d >= D + 5 : d - last_mark >= D + 5) {
                    kept.push_back(i);
                    last_mark = d;
                }
            }
            if (kept.empty())
                throw ContractError("interval_decomposition: long component admits no kept box");
            for (size_t j = 0; j < kept.size(); ++j) {
                for (Vertex lv : bd.boxes[kept[j]]) w2.push_back(model.to_global[lv]);
                if (j + 1 < kept.size())
                    for (Vertex lv : bd.between_exclusive(kept[j], kept[j + 1]))
                        w3.push_back(model.to_global[lv]);
            }
            for (Vertex lv : bd.between_exclusive(-1, kept.front()))
                w1.push_back(model.to_global[lv]);
            for (Vertex lv : bd.between_exclusive(kept.back(), bd.box_count()))
                w1.push_back(model.to_global[lv]);
        }

        // Removal order W3, W2, W1 gives final layer order W1 < W2 < W3.
        for (auto* grp : {&w3, &w2, &w1}) {
            if (grp->empty()) continue;
            std::sort(grp->begin(), grp->end());
            for (Vertex v : *grp) {
                alive[v] = 0;
                --alive_count;
            }
            removal_groups.push_back(std::move(*grp));
        }
        if (ledger) ledger->charge("decomp/iteration" + std::to_string(iter), 3 * D + 2);
    }

    IntervalDecomposition dec;
    dec.width = width;
    dec.layers.assign(removal_groups.rbegin(), removal_groups.rend());
    dec.layer_of.assign(g.n(), -1);
    for (int i = 0; i < dec.depth(); ++i)
        for (Vertex v : dec.layers[i]) dec.layer_of[v] = i;
    return dec;
}

std::vector<std::vector<Vertex>> layer_components(const ChordalGraph& g,
                                                  const IntervalDecomposition& dec,
                                                  int layer_index) {
    return components_of_subset(g.adj(), dec.layers[layer_index]);
}

ComponentClass classify_component(const ChordalGraph& g, const IntervalDecomposition& dec,
                                  int layer_index, const std::vector<Vertex>& component) {
    for (Vertex v : component)
        if (dec.layer_of[v] != layer_index)
            throw ContractError("classify_component: component not inside the layer");
    ComponentClass out;
    out.members = component;

    std::vector<char> deeper(g.n(), 0);
    for (int i = 0; i <= layer_index; ++i)
        for (Vertex v : dec.layers[i]) deeper[v] = 1;
    std::vector<char> in_comp(g.n(), 0);
    for (Vertex v : component) in_comp[v] = 1;
    std::set<Vertex> attachment;
    for (Vertex v : component) {
        bool on_border = false;
        for (Vertex w : g.neighbors(v))
            if (deeper[w] && !in_comp[w]) {
                attachment.insert(w);
                on_border = true;
            }
        if (on_border) out.border.push_back(v);
    }
    std::sort(out.border.begin(), out.border.end());

    auto ct = clique_tree_of_subset(g, component);
    auto path = clique_tree_as_path(ct);
    if (!path) throw ContractError("classify_component: component is not an interval graph");
    out.path = *path;

    // Pending: the outside attachment forms one clique.
    bool att_clique = true;
    for (auto it = attachment.begin(); it != attachment.end() && att_clique; ++it)
        for (auto jt = std::next(it); jt != attachment.end(); ++jt)
            if (!g.adjacent(*it, *jt)) {
                att_clique = false;
                break;
            }
    if (att_clique) {
        out.pending = true;
        return out;
    }

    // Separator: attachment splits into two cliques anchored at the two ends
    // of the combined interval model, and the component is wide.
    std::vector<Vertex> att_vec(attachment.begin(), attachment.end());
    auto groups = components_of_subset(g.adj(), att_vec);
    if (groups.size() != 2)
        throw ContractError("classify_component: attachment has " +
                            std::to_string(groups.size()) + " groups, expected 2 cliques");
    for (const auto& grp : groups)
        for (size_t a = 0; a < grp.size(); ++a)
            for (size_t b = a + 1; b < grp.size(); ++b)
                if (!g.adjacent(grp[a], grp[b]))
                    throw ContractError(
                        "classify_component: attachment group is not a clique");
    std::vector<Vertex> combined = component;
    combined.insert(combined.end(), att_vec.begin(), att_vec.end());
    std::sort(combined.begin(), combined.end());
    auto model_ct = clique_tree_of_subset(g, combined);
    auto model_path = clique_tree_as_path(model_ct);
    if (!model_path)
        throw ContractError("classify_component: combined attachment graph is not interval");
    std::vector<int> local(g.n(), -1);
    for (size_t i = 0; i < combined.size(); ++i) local[combined[i]] = static_cast<int>(i);
    auto in_bag = [&](const std::vector<Vertex>& bag, const std::vector<Vertex>& grp) {
        std::set<Vertex> b(bag.begin(), bag.end());
        for (Vertex v : grp)
            if (!b.count(local[v])) return false;
        return true;
    };
    const auto& first = model_path->bags.front();
    const auto& last = model_path->bags.back();
    bool anchored = (in_bag(first, groups[0]) && in_bag(last, groups[1])) ||
                    (in_bag(first, groups[1]) && in_bag(last, groups[0]));
    if (!anchored)
        throw ContractError(
            "classify_component: separator attachments are not anchored at the ends");
    int diam = subgraph_diameter(g.adj(), component);
    if (diam < dec.width)
        throw ContractError("classify_component: separator component of diameter " +
                            std::to_string(diam) + " < width " + std::to_string(dec.width));
    out.pending = false;
    return out;
}

CheckReport validate_interval_decomposition(const ChordalGraph& g,
                                            const IntervalDecomposition& dec) {
    std::vector<int> seen(g.n(), 0);
    for (const auto& layer : dec.layers)
        for (Vertex v : layer) ++seen[v];
    for (Vertex v = 0; v < g.n(); ++v)
        if (seen[v] != 1)
            return {false, "vertex " + std::to_string(v) + " appears in " +
                               std::to_string(seen[v]) + " layers"};
    for (int i = 0; i < dec.depth(); ++i) {
        for (const auto& comp : layer_components(g, dec, i)) {
            int diam;
            try {
                diam = subgraph_diameter(g.adj(), comp);
            } catch (const Error& e) {
                return {false, e.what()};
            }
            if (diam > 3 * dec.width)
                return {false, "layer " + std::to_string(i) + " component of diameter " +
                                   std::to_string(diam) + " > 3*width"};
            try {
                classify_component(g, dec, i, comp);
            } catch (const Error& e) {
                return {false, std::string(e.what())};
            }
        }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Chordal coloring over the decomposition.

namespace {

// Already-colored outside attachment of a component (must be a clique).
std::vector<Vertex> colored_attachment(const ChordalGraph& g, const std::vector<Vertex>& comp,
                                       const Coloring& out) {
    std::vector<char> in_comp(g.n(), 0);
    for (Vertex v : comp) in_comp[v] = 1;
    std::set<Vertex> att;
    for (Vertex v : comp)
        for (Vertex w : g.neighbors(v))
            if (!in_comp[w] && out[w] >= 0) att.insert(w);
    return {att.begin(), att.end()};
}

}  // namespace

long long color_width_for(int omega) {
    return std::max<long long>({15LL * (omega + 1), 11LL * (3 * omega + 2), 20});
}

Coloring chordal_color(const ChordalGraph& g, const IntervalDecomposition& dec, const Config& cfg,
                       RoundLedger* ledger) {
    const int omega = max_clique_size(g);
    long long need = cfg.faithful() ? 15LL * (omega + 1)
                                    : std::max<long long>(20, cfg.decomposition_width > 0
                                                                  ? cfg.decomposition_width
                                                                  : 20);
    if (dec.width < need)
        throw ContractError("chordal_color: decomposition width " + std::to_string(dec.width) +
                            " below the required " + std::to_string(need));

    Coloring out(std::vector<int>(g.n(), -1), omega + 1);
    for (int i = 0; i < dec.depth(); ++i) {
        for (const auto& comp : layer_components(g, dec, i)) {
            auto cls = classify_component(g, dec, i, comp);
            auto att = colored_attachment(g, comp, out);

            if (cls.pending || att.empty()) {
                for (Vertex a : att)
                    for (Vertex b : att)
                        if (a < b && !g.adjacent(a, b))
                            throw ContractError(
                                "chordal_color: colored attachment is not a clique for a "
                                "pending component");
                // Fresh greedy coloring of comp+attachment anchored at the
                // attachment, then a color permutation to match what is
                // already colored.
                std::vector<Vertex> combined = comp;
                combined.insert(combined.end(), att.begin(), att.end());
                std::sort(combined.begin(), combined.end());
                auto model = interval_model_of_subset(g, combined);
                // orient: attachment must sit at the left axis end
                bool att_left = true;
                if (!att.empty()) {
                    long long best_l = 1 << 30, worst_l = -1;
                    for (Vertex v : combined) {
                        best_l = std::min(best_l, model.graph.left(model.to_local[v]));
                        worst_l = std::max(worst_l, model.graph.left(model.to_local[v]));
                    }
                    long long att_min = 1 << 30;
                    for (Vertex a : att)
                        att_min = std::min(att_min, model.graph.left(model.to_local[a]));
                    att_left = (att_min - best_l) <= (worst_l - att_min);
                }
                Coloring eta(std::vector<int>(model.graph.n(), -1), omega);
                std::vector<Vertex> all_local(model.graph.n());
                std::iota(all_local.begin(), all_local.end(), 0);
                eta = greedy_extend(model.graph, all_local, eta, omega, att_left);
                // permutation matching on the attachment
                std::vector<int> perm(omega + 1);
                std::iota(perm.begin(), perm.end(), 0);
                if (!att.empty()) {
                    std::vector<int> p(omega + 1, -1);
                    std::vector<char> used(omega + 1, 0);
                    for (Vertex a : att) {
                        p[eta[model.to_local[a]]] = out[a];
                        used[out[a]] = 1;
                    }
                    for (int c = 0; c <= omega; ++c)
                        if (p[c] == -1 && !used[c]) {
                            p[c] = c;
                            used[c] = 1;
                        }
                    for (int c = 0; c <= omega; ++c) {
                        if (p[c] != -1) continue;
                        for (int t2 = 0; t2 <= omega; ++t2)
                            if (!used[t2]) {
                                p[c] = t2;
                                used[t2] = 1;
                                break;
                            }
                    }
                    perm = p;
                }
                for (Vertex v : comp) out[v] = perm[eta[model.to_local[v]]];
            } else {
                // Separator: anchor both colored cliques and glue.
                std::vector<Vertex> combined = comp;
                combined.insert(combined.end(), att.begin(), att.end());
                std::sort(combined.begin(), combined.end());
                auto model = interval_model_of_subset(g, combined);
                long long mid = 0;
                for (Vertex v : combined) mid += model.graph.left(model.to_local[v]);
                mid /= static_cast<long long>(combined.size());
                Coloring alpha(std::vector<int>(model.graph.n(), -1), omega);
                Coloring beta(std::vector<int>(model.graph.n(), -1), omega);
                for (Vertex a : att) {
                    int lv = model.to_local[a];
                    if (model.graph.left(lv) <= mid)
                        alpha[lv] = out[a];
                    else
                        beta[lv] = out[a];
                }
                std::vector<Vertex> all_local(model.graph.n());
                std::iota(all_local.begin(), all_local.end(), 0);
                alpha = greedy_extend(model.graph, all_local, alpha, omega, true);
                beta = greedy_extend(model.graph, all_local, beta, omega, false);

                auto S = ruling_set_4_5(model.graph);
                auto bd = box_decomposition(model.graph, S);
                auto glued = border_interpolate(model.graph, bd, 0, bd.box_count() - 1, alpha,
                                                beta);
                for (Vertex v : comp) {
                    int lv = model.to_local[v];
                    int rank = bd.region_rank[lv];
                    if (rank < 1)
                        out[v] = alpha[lv];
                    else if (rank > 2 * (bd.box_count() - 1) + 1)
                        out[v] = beta[lv];
                    else
                        out[v] = glued[lv];
                }
            }
        }
        if (ledger) ledger->charge("chordal_color/layer" + std::to_string(i), 3 * dec.width + 2);
    }
    for (Vertex v = 0; v < g.n(); ++v)
        if (out[v] < 0) throw ContractError("chordal_color: uncolored vertex survived");
    return out;
}

}  // namespace recol
