#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "recol/clique.hpp"
#include "recol/gen.hpp"
#include "recol/oracle.hpp"
#include "recol/recolor.hpp"
#include "test_util.hpp"

using namespace recol;
namespace ou = oracle_util;

namespace {

std::vector<Vertex> range_vec(int lo, int hi) {
    std::vector<Vertex> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

// Random legal single-vertex moves confined to the window: always proper.
Coloring scramble_window(const IntervalGraph& g, const Coloring& start,
                         const std::vector<Vertex>& window, int budget, uint64_t seed) {
    Coloring cur = start;
    cur.palette = budget;
    std::mt19937_64 rng(seed);
    for (int moves = 0; moves < 8 * static_cast<int>(window.size()); ++moves) {
        Vertex v = window[rng() % window.size()];
        int c = static_cast<int>(rng() % budget);
        if (c == cur[v]) continue;
        bool clash = false;
        for (Vertex w : g.neighbors(v))
            if (cur[w] == c) clash = true;
        if (!clash) cur[v] = c;
    }
    return cur;
}

void require_valid(const IntervalGraph& g, const Coloring& start, const Schedule& s,
                   const Coloring* target = nullptr) {
    auto rep = validate(g.adj(), start, s, target);
    INFO("step ", rep.step, ": ", rep.reason);
    REQUIRE(rep.ok);
}

}  // namespace

TEST_CASE("reduce_window on already-low windows is empty") {
    auto g = gen_power_path(30, 3);
    auto alpha = mod_coloring(g, 4);  // colors <= 3 = 2*omega-3+... <= 2*omega-2
    auto s = reduce_window(g, range_vec(6, 13), alpha, 6);
    CHECK(s.length() == 0);
}

TEST_CASE("reduce_window drives an 8-vertex window below 2*omega-1") {
    auto g = gen_power_path(40, 3);
    auto alpha = mod_coloring(g, 6);
    auto window = range_vec(10, 17);
    auto s = reduce_window(g, window, alpha, 6);
    require_valid(g, alpha, s);
    auto end = apply_schedule(alpha, s);
    for (Vertex v : window) CHECK(end[v] <= 4);
    // only window vertices move
    for (const auto& st : s.steps)
        for (auto [v, c] : st) {
            (void)c;
            CHECK(v >= 10);
            CHECK(v <= 17);
        }
    // worst-case recursion bound, meaningful at this size
    CHECK(s.length() <= (1 << 8) - 1);
}

TEST_CASE("reduce_window single interior vertex takes one step") {
    auto g = gen_power_path(20, 3);
    Coloring alpha = mod_coloring(g, 5);
    alpha.palette = 6;
    alpha[9] = 5;  // the only high color; neighbors keep their mod-5 colors
    REQUIRE(alpha.proper(g.adj()));
    auto s = reduce_window(g, {9}, alpha, 6);
    require_valid(g, alpha, s);
    CHECK(s.length() == 1);
}

TEST_CASE("reduce_to_2omega on power paths") {
    for (int omega : {2, 3, 4}) {
        int k = 2 * omega;
        auto g = gen_power_path(300, omega);
        auto alpha = mod_coloring(g, k);
        auto res = reduce_to_2omega_detailed(g, alpha, k);
        Schedule all = res.phase1;
        all.append(res.phase2);
        require_valid(g, alpha, all);
        auto end = apply_schedule(alpha, all);
        for (Vertex v = 0; v < g.n(); ++v) CHECK(end[v] <= 2 * omega - 2);
        // phase 1 never touches a spaced (label-0) box
        std::set<Vertex> protected_boxes;
        for (int idx : res.spaced)
            for (Vertex v : res.bd.boxes[idx]) protected_boxes.insert(v);
        for (const auto& st : res.phase1.steps)
            for (auto [v, c] : st) {
                (void)c;
                CHECK(!protected_boxes.count(v));
            }
        // phase-1 regions are small: O(Delta) vertices per window
        for (const auto& win : res.phase1_windows)
            CHECK(static_cast<int>(win.size()) <= 70 * std::max(1, g.max_degree()));
        // simultaneously recolored regions are vertex-disjoint and non-adjacent
        for (const auto& st : all.steps)
            for (auto [v, c] : st) {
                (void)c;
                for (auto [w, c2] : st) {
                    (void)c2;
                    if (v != w) CHECK_FALSE(g.adjacent(v, w));
                }
            }
    }
}

TEST_CASE("reduce_to_2omega is empty when the palette is already low") {
    auto g = gen_power_path(120, 3);
    auto alpha = mod_coloring(g, 5);
    CHECK(reduce_to_2omega(g, alpha, 6).length() == 0);
    CHECK_THROWS_AS(reduce_to_2omega(g, mod_coloring(g, 5), 5), ContractError);
}

TEST_CASE("recolor_4omega") {
    SUBCASE("alpha equals beta: valid, endpoints equal, possibly nonempty") {
        auto g = gen_power_path(80, 2);
        auto alpha = mod_coloring(g, 8);
        auto s = recolor_4omega(g, alpha, alpha, 8);
        require_valid(g, alpha, s, &alpha);
    }
    SUBCASE("rotation steps are beta-prime color classes, at most 4*omega of them") {
        auto g = gen_power_path(100, 2);
        int omega = 2, k = 4 * omega;
        auto alpha = mod_coloring(g, k);
        auto beta = gen_random_coloring(g.adj(), k, 5);
        auto ra = reduce_to_2omega(g, alpha, k);
        auto rb = reduce_to_2omega(g, beta, k);
        auto b2 = apply_schedule(beta, rb);
        auto s = recolor_4omega(g, alpha, beta, k);
        require_valid(g, alpha, s, &beta);
        long long rotation = s.length() - ra.length() - rb.length();
        CHECK(rotation <= 4 * omega);
        for (int i = 0; i < rotation; ++i) {
            const auto& st = s.steps[ra.length() + i];
            std::set<int> classes;
            for (auto [v, c] : st) {
                (void)c;
                classes.insert(b2[v]);
            }
            CHECK(classes.size() == 1);
        }
    }
    SUBCASE("end to end on power paths, length recorded against omega*Delta") {
        auto g = gen_power_path(100, 2);
        auto alpha = gen_random_coloring(g.adj(), 8, 3);
        auto beta = gen_random_coloring(g.adj(), 8, 9);
        auto s = recolor_4omega(g, alpha, beta, 8);
        require_valid(g, alpha, s, &beta);
        INFO("length ", s.length(), " vs omega*Delta = ", 2 * g.max_degree());
        CHECK(s.length() <= 200 * 2 * g.max_degree());
    }
}

TEST_CASE("kempe_plan") {
    auto g = gen_power_path(60, 3);
    auto alpha = mod_coloring(g, 6);
    SUBCASE("already at target: empty plan") {
        auto plan = kempe_plan(g, range_vec(10, 20), alpha, alpha);
        CHECK(plan.empty());
    }
    SUBCASE("single vertex: one change") {
        Coloring beta = alpha;
        beta[15] = (alpha[15] + 3) % 6;
        auto plan = kempe_plan(g, {15}, alpha, beta);
        REQUIRE(plan.size() == 1);
        CHECK(plan[0].anchor == 15);
        CHECK(plan[0].from == alpha[15]);
        CHECK(plan[0].to == beta[15]);
    }
    SUBCASE("random targets replay to beta_S without disturbing earlier fixes") {
        for (uint64_t seed = 1; seed <= 8; ++seed) {
            auto S = range_vec(20, 24);
            auto beta = gen_random_coloring(g.adj(), 6, seed);
            auto plan = kempe_plan(g, S, alpha, beta);
            CHECK(plan.size() <= S.size());
            auto end = kempe_replay(g, alpha, plan);
            for (Vertex v : S) CHECK(end[v] == beta[v]);
            // replay change by change: once a vertex of S reaches its target
            // in order, later changes keep it
            Coloring cur = alpha;
            std::set<Vertex> fixed;
            size_t next = 0;
            for (Vertex s : S) {
                if (cur[s] != beta[s]) {
                    REQUIRE(next < plan.size());
                    cur = kempe_replay(g, cur, {plan[next++]});
                }
                for (Vertex f : fixed) CHECK(cur[f] == beta[f]);
                CHECK(cur[s] == beta[s]);
                fixed.insert(s);
            }
        }
    }
    SUBCASE("non-consecutive sets are rejected") {
        CHECK_THROWS_AS(kempe_plan(g, {5, 9}, alpha, alpha), ContractError);
    }
}

TEST_CASE("kempe symmetry: swapping any Kempe component stays proper") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        auto g = gen_random_interval(40, seed, 3);
        int k = std::max(max_clique_size(g) + 2, g.max_degree() + 1);
        auto alpha = gen_random_coloring(g.adj(), k, seed + 1);
        std::mt19937_64 rng(seed);
        Vertex anchor = static_cast<Vertex>(rng() % g.n());
        int b = static_cast<int>(rng() % k);
        if (b == alpha[anchor]) b = (b + 1) % k;
        KempePlan plan{{anchor, alpha[anchor], b}};
        auto swapped = kempe_replay(g, alpha, plan);
        CHECK(ou::brute_proper(g.adj(), swapped.colors));
    }
}

TEST_CASE("kempe_cut") {
    auto g = gen_power_path(200, 2);  // long unit-interval path
    auto alpha = mod_coloring(g, 4);
    int c0 = 4;
    Coloring alpha5 = alpha;
    alpha5.palette = 5;

    SUBCASE("empty plan gives an empty schedule") {
        auto s = kempe_cut(g, {100}, {}, alpha5, c0, {0, 199});
        CHECK(s.length() == 0);
    }
    SUBCASE("single change: at most 3 steps, c0 cleansed near S") {
        std::vector<Vertex> S = {100};
        Coloring beta = alpha5;
        beta[100] = (alpha[100] + 2) % 4;
        auto plan = kempe_plan(g, S, alpha5, beta);
        REQUIRE(plan.size() == 1);
        std::vector<Vertex> border = {0, 1, 198, 199};
        auto s = kempe_cut(g, S, plan, alpha5, c0, border);
        CHECK(s.length() <= 3);
        require_valid(g, alpha5, s);
        auto end = apply_schedule(alpha5, s);
        CHECK(end[100] == beta[100]);
        auto dist = bfs_distances(g.adj(), S);
        long long dmin = 1 << 20;
        for (Vertex b : border) dmin = std::min<long long>(dmin, dist[b]);
        for (Vertex v = 0; v < g.n(); ++v)
            if (end[v] == c0) CHECK(dist[v] > dmin - 1 - 2);
        for (Vertex b : border) CHECK(end[b] == alpha5[b]);
    }
    SUBCASE("multi-change plans: valid, border frozen, length <= 3|plan|") {
        for (uint64_t seed = 1; seed <= 6; ++seed) {
            auto S = range_vec(95, 105);
            auto beta = gen_random_coloring(g.adj(), 4, seed);
            Coloring beta5 = beta;
            beta5.palette = 5;
            auto plan = kempe_plan(g, S, alpha5, beta5);
            std::vector<Vertex> border = {0, 1, 198, 199};
            auto s = kempe_cut(g, S, plan, alpha5, c0, border);
            CHECK(s.length() <= 3 * static_cast<int>(plan.size()));
            require_valid(g, alpha5, s);
            auto end = apply_schedule(alpha5, s);
            for (Vertex v : S) CHECK(end[v] == beta5[v]);
            for (Vertex b : border) CHECK(end[b] == alpha5[b]);
            // locality: nothing beyond the distance budget is ever recolored
            auto dist = bfs_distances(g.adj(), S);
            long long dmin = 1 << 20;
            for (Vertex b : border) dmin = std::min<long long>(dmin, dist[b]);
            for (const auto& st : s.steps)
                for (auto [v, c] : st) {
                    (void)c;
                    CHECK(dist[v] <= dmin - 1);
                }
        }
    }
    SUBCASE("insufficient distance budget is an error") {
        std::vector<Vertex> S = {100};
        Coloring beta = alpha5;
        beta[100] = (alpha[100] + 2) % 4;
        auto plan = kempe_plan(g, S, alpha5, beta);
        CHECK_THROWS_WITH_AS(kempe_cut(g, S, plan, alpha5, c0, {100 + 2}),
                             doctest::Contains("distance"), ContractError);
    }
}

TEST_CASE("seed_targets") {
    SUBCASE("faithful mode falls back on short graphs; bounds hold") {
        auto g = gen_power_path(300, 2);
        int omega = 2, k = omega + 3;
        auto alpha = gen_random_coloring(g.adj(), k, 3);
        auto beta = interval_color(g);
        auto bd = box_decomposition(g, ruling_set_4_5(g));
        auto params = Params::derive(omega, g.max_degree(), g.n(), k, 1);
        auto res = seed_targets(g, bd, alpha, beta, params.N, k);
        CHECK(res.fell_back);
        CHECK(res.schedule.length() <= 3 * (2 * params.N + 1));
        Coloring a6 = alpha;
        a6.palette = k + 1;
        require_valid(g, a6, res.schedule);
        REQUIRE(res.runs.size() == 1);
        for (Vertex v : res.runs[0]) CHECK(res.seeded[v] == beta[v]);
        // goodlength: the run contains >= N''+1 consecutive fully-target bags
        auto cp = clique_path(g);
        std::set<Vertex> target_now;
        for (Vertex v = 0; v < g.n(); ++v)
            if (res.seeded[v] == beta[v]) target_now.insert(v);
        int best_run = 0, cur_run = 0;
        for (const auto& bag : cp.bags) {
            bool full = true;
            for (Vertex v : bag) full &= target_now.count(v) > 0;
            cur_run = full ? cur_run + 1 : 0;
            best_run = std::max(best_run, cur_run);
        }
        CHECK(best_run >= params.N_second + 1);
    }
    SUBCASE("scaled mode seeds several disjoint non-adjacent regions") {
        auto g = gen_power_path(4000, 2);
        int k = 5;
        auto alpha = gen_random_coloring(g.adj(), k, 11);
        auto beta = interval_color(g);
        auto bd = box_decomposition(g, ruling_set_4_5(g));
        long long N = 12;
        auto res = seed_targets(g, bd, alpha, beta, N, k);
        CHECK_FALSE(res.fell_back);
        REQUIRE(res.runs.size() >= 2);
        CHECK(res.schedule.length() <= 3 * (2 * N + 1));
        Coloring a6 = alpha;
        a6.palette = k + 1;
        require_valid(g, a6, res.schedule);
        for (const auto& run : res.runs)
            for (Vertex v : run) CHECK(res.seeded[v] == beta[v]);
        // pairwise non-adjacent working regions: recolored vertices of
        // different runs never touch
        std::vector<int> owner(g.n(), -1);
        for (size_t i = 0; i < res.runs.size(); ++i)
            for (Vertex v : res.runs[i]) owner[v] = static_cast<int>(i);
        for (size_t i = 0; i < res.runs.size(); ++i)
            for (Vertex v : res.runs[i])
                for (Vertex w : g.neighbors(v))
                    if (owner[w] != -1) CHECK(owner[w] == static_cast<int>(i));
    }
    SUBCASE("extra color present in alpha is rejected") {
        auto g = gen_power_path(50, 2);
        auto alpha = mod_coloring(g, 5);
        auto beta = interval_color(g);
        auto bd = box_decomposition(g, ruling_set_4_5(g));
        CHECK_THROWS_AS(seed_targets(g, bd, alpha, beta, 8, 4), ContractError);
    }
}

TEST_CASE("window_recolor") {
    auto g = gen_power_path(60, 3);
    auto beta = interval_color(g);

    SUBCASE("interior already at target: noop") {
        auto res = window_recolor(g, range_vec(20, 30), beta, beta, 7);
        CHECK(res.ok);
        CHECK(res.strategy == "noop");
        CHECK(res.schedule.length() == 0);
    }
    SUBCASE("degeneracy strategy succeeds with budget 2*omega") {
        Coloring mixed = scramble_window(g, beta, range_vec(20, 30), 7, 3);
        REQUIRE(mixed.proper(g.adj()));
        auto res = window_recolor(g, range_vec(20, 30), mixed, beta, 7, "degeneracy");
        REQUIRE(res.ok);
        require_valid(g, mixed, res.schedule);
        auto end = apply_schedule(mixed, res.schedule);
        for (Vertex v = 0; v < g.n(); ++v) CHECK(end[v] == beta[v]);
    }
    SUBCASE("sliding strategy succeeds on a seeded bounded-degree window") {
        Coloring mixed = scramble_window(g, beta, range_vec(20, 30), 7, 5);
        REQUIRE(mixed.proper(g.adj()));
        auto res = window_recolor(g, range_vec(20, 30), mixed, beta, 7, "sliding");
        REQUIRE(res.ok);
        require_valid(g, mixed, res.schedule);
        auto end = apply_schedule(mixed, res.schedule);
        for (Vertex v = 0; v < g.n(); ++v) CHECK(end[v] == beta[v]);
    }
    SUBCASE("exact strategy agrees with the oracle on reachable and unreachable windows") {
        int agreements = 0, unreachables = 0;
        for (uint64_t seed = 0; seed < 40; ++seed) {
            auto h = gen_random_interval(7, seed, 2);
            if (!h.connected()) continue;
            int omega = max_clique_size(h);
            int k = omega + 2;
            Coloring a, b;
            try {
                a = gen_random_coloring(h.adj(), k, seed + 1);
                b = gen_random_coloring(h.adj(), k, seed + 2);
            } catch (const ContractError&) {
                continue;
            }
            // freeze a border-ish subset: vertices where a == b
            std::vector<Vertex> interior;
            for (Vertex v = 0; v < h.n(); ++v)
                if (a[v] != b[v]) interior.push_back(v);
            if (interior.empty()) continue;
            Coloring target = a;
            for (Vertex v : interior) target[v] = b[v];
            if (!target.proper(h.adj())) continue;
            std::vector<Vertex> frozen;
            for (Vertex v = 0; v < h.n(); ++v)
                if (a[v] == b[v]) frozen.push_back(v);
            auto res = window_recolor(h, interior, a, target, k, "exact");
            auto oracle_res = bfs_reachability(h.adj(), a, target, k,
                                               StepModel::IndependentSet, 10'000'000, frozen);
            CHECK(res.ok == oracle_res.reachable);
            ++agreements;
            if (!oracle_res.reachable) ++unreachables;
            if (res.ok) {
                require_valid(h, a, res.schedule, &target);
            }
        }
        CHECK(agreements > 10);
        (void)unreachables;  // random k = omega+2 windows are usually reachable
    }
    SUBCASE("exact strategy reports unreachability and matches the oracle on it") {
        // triangle with k = 3: every coloring is frozen
        IntervalGraph tri({{0, 10}, {5, 15}, {9, 20}});
        Coloring a({0, 1, 2}, 3);
        Coloring b({1, 0, 2}, 3);
        auto res = window_recolor(tri, {0, 1, 2}, a, b, 3, "exact");
        CHECK_FALSE(res.ok);
        CHECK(res.reason.find("unreachable") != std::string::npos);
        auto oracle_res = bfs_reachability(tri.adj(), a, b, 3);
        CHECK(res.ok == oracle_res.reachable);
    }
}

TEST_CASE("interval_recolor end to end") {
    SUBCASE("alpha equals beta accepts immediately") {
        auto g = gen_power_path(50, 3);
        auto alpha = mod_coloring(g, 6);
        auto s = interval_recolor(g, alpha, alpha, 6, 0);
        require_valid(g, alpha, s, &alpha);
    }
    SUBCASE("power path omega=3, k=omega+3, one extra color") {
        auto g = gen_power_path(400, 3);
        int k = 6;
        auto alpha = gen_random_coloring(g.adj(), k, 1);
        auto beta = gen_random_coloring(g.adj(), k, 2);
        auto s = interval_recolor(g, alpha, beta, k, 1);
        CHECK(s.palette_k == k);
        CHECK(s.extra == 1);
        require_valid(g, alpha, s, &beta);
    }
    SUBCASE("k = 2*omega branch never uses a color >= k") {
        auto g = gen_power_path(300, 3);
        int k = 6;
        auto alpha = gen_random_coloring(g.adj(), k, 4);
        auto beta = gen_random_coloring(g.adj(), k, 8);
        auto s = interval_recolor(g, alpha, beta, k, 0);
        require_valid(g, alpha, s, &beta);
        for (const auto& st : s.steps)
            for (auto [v, c] : st) {
                (void)v;
                CHECK(c < k);
            }
    }
    SUBCASE("small-omega branch with padded extras") {
        auto g = gen_power_path(200, 2);
        int omega = 2, k = omega + 2;  // extra = omega - k + 4 = 2
        auto alpha = gen_random_coloring(g.adj(), k, 5);
        auto beta = gen_random_coloring(g.adj(), k, 6);
        auto s = interval_recolor(g, alpha, beta, k, branch_extra_budget(k, omega));
        require_valid(g, alpha, s, &beta);
        // extra colors never appear in the first or last coloring
        CHECK(alpha.in_palette());
        CHECK(beta.in_palette());
    }
    SUBCASE("branch budget violations are rejected") {
        auto g = gen_power_path(60, 3);
        auto alpha = mod_coloring(g, 4);
        CHECK_THROWS_AS(interval_recolor(g, alpha, alpha, 4, 0), ContractError);
        CHECK_THROWS_AS(interval_recolor(g, alpha, alpha, 4, 1), ContractError);
    }
    SUBCASE("random interval components, several branches, oracle confirmation when tiny") {
        int ran = 0;
        for (uint64_t seed = 0; seed < 12; ++seed) {
            auto g0 = gen_random_interval(60, seed, 4);
            for (const auto& comp : split_components(g0)) {
                const auto& h = comp.graph;
                if (h.n() < 2) continue;
                int omega = max_clique_size(h);
                int k = omega + 2;
                int extra = branch_extra_budget(k, omega);
                Coloring a, b;
                try {
                    a = gen_random_coloring(h.adj(), k, seed + 21);
                    b = gen_random_coloring(h.adj(), k, seed + 22);
                } catch (const ContractError&) {
                    continue;
                }
                auto s = interval_recolor(h, a, b, k, extra);
                require_valid(h, a, s, &b);
                ++ran;
                if (h.n() <= 7) {
                    auto reach = bfs_reachability(h.adj(), a, b, k + extra);
                    CHECK(reach.reachable);
                }
            }
        }
        CHECK(ran > 8);
    }
}
