#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "recol/chordal_recolor.hpp"
#include "recol/gen.hpp"
#include "recol/oracle.hpp"
#include "test_util.hpp"

using namespace recol;
namespace ou = oracle_util;

namespace {

ChordalGraph tree_graph(int n, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> children(n);
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(std::max(0, i - 6), i - 1);
        int p = pick(rng);
        edges.push_back({p, i});
        children[p].push_back(i);
    }
    std::vector<std::vector<int>> subtrees(n);
    for (int v = 0; v < n; ++v) {
        subtrees[v] = children[v];
        subtrees[v].push_back(v);
    }
    return ChordalGraph(n, std::move(edges), std::move(subtrees));
}

void require_valid(const ChordalGraph& g, const Coloring& start, const Schedule& s,
                   const Coloring* target = nullptr) {
    auto rep = validate(g.adj(), start, s, target);
    INFO("step ", rep.step, ": ", rep.reason);
    REQUIRE(rep.ok);
}

}  // namespace

TEST_CASE("align_schedule enforces the color/index discipline") {
    Schedule s{5, 1, {}};
    s.push({{0, 3}});
    s.push({{1, 0}, {2, 0}});
    s.push({{3, 5}});
    auto aligned = align_schedule(s, 6);
    for (int j = 0; j < aligned.length(); ++j)
        for (auto [v, c] : aligned.steps[j]) {
            (void)v;
            CHECK(c % 6 == j % 6);
        }
}

TEST_CASE("single-layer chordal graphs reduce to per-component interval recoloring") {
    // a path-shaped chordal graph of small diameter peels in one layer
    int n = 14;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> subtrees;
    for (int i = 0; i < n; ++i) {
        if (i + 1 < n) edges.push_back({i, i + 1});
        if (i == 0)
            subtrees.push_back({0});
        else
            subtrees.push_back({i - 1, i});
    }
    ChordalGraph g(n, std::move(edges), std::move(subtrees));
    auto dec = interval_decomposition(g, 25);
    REQUIRE(dec.depth() == 1);
    int omega = max_clique_size(g);
    int k = omega + 3;
    auto alpha = gen_random_coloring(g.adj(), k, 1);
    auto beta = gen_random_coloring(g.adj(), k, 2);
    auto s = chordal_recolor(g, dec, alpha, beta, k, 1);
    require_valid(g, alpha, s, &beta);
}

TEST_CASE("trees recolor with k=5 and one extra color") {
    auto g = tree_graph(200, 7);
    REQUIRE(max_clique_size(g) == 2);
    auto dec = interval_decomposition(g, 20);
    auto rep = validate_interval_decomposition(g, dec);
    INFO(rep.reason);
    REQUIRE(rep.ok);
    auto alpha = gen_random_coloring(g.adj(), 5, 3);
    auto beta = gen_random_coloring(g.adj(), 5, 4);
    RoundLedger ledger;
    auto s = chordal_recolor(g, dec, alpha, beta, 5, 1, {}, &ledger);
    require_valid(g, alpha, s, &beta);
    CHECK(s.palette_k == 5);
    CHECK(s.extra == 1);
}

TEST_CASE("the emitted chordal schedule is aligned: step j assigns color j mod k'") {
    auto g = tree_graph(120, 11);
    auto dec = interval_decomposition(g, 20);
    auto alpha = gen_random_coloring(g.adj(), 5, 8);
    auto beta = gen_random_coloring(g.adj(), 5, 9);
    auto s = chordal_recolor(g, dec, alpha, beta, 5, 1);
    int kprime = 6;
    for (int j = 0; j < s.length(); ++j)
        for (auto [v, c] : s.steps[j]) {
            (void)v;
            CHECK(c % kprime == j % kprime);
        }
}

TEST_CASE("alpha equals beta yields an empty aligned schedule") {
    auto g = tree_graph(40, 2);
    auto dec = interval_decomposition(g, 20);
    auto alpha = gen_random_coloring(g.adj(), 5, 5);
    auto s = chordal_recolor(g, dec, alpha, alpha, 5, 1);
    CHECK(s.length() == 0);
}

TEST_CASE("branch violations are rejected") {
    auto g = tree_graph(30, 2);
    auto dec = interval_decomposition(g, 20);
    auto alpha = gen_random_coloring(g.adj(), 5, 5);
    CHECK_THROWS_AS(chordal_recolor(g, dec, alpha, alpha, 4, 1), ContractError);
    CHECK_THROWS_AS(chordal_recolor(g, dec, alpha, alpha, 5, 0), ContractError);
}

TEST_CASE("random chordal instances recolor end to end in scaled mode") {
    int ran = 0;
    long long total_len = 0;
    for (uint64_t seed = 0; seed < 12; ++seed) {
        auto g0 = gen_random_chordal(220, seed, 4);
        for (const auto& comp : split_components(g0)) {
            const auto& h = comp.graph;
            if (h.n() < 3) continue;
            int omega = max_clique_size(h);
            int k = omega + 3;
            auto dec = interval_decomposition(h, 20);
            auto rep = validate_interval_decomposition(h, dec);
            INFO("seed ", seed, ": ", rep.reason);
            REQUIRE(rep.ok);
            Coloring a, b;
            try {
                a = gen_random_coloring(h.adj(), k, seed + 31);
                b = gen_random_coloring(h.adj(), k, seed + 77);
            } catch (const ContractError&) {
                continue;
            }
            auto s = chordal_recolor(h, dec, a, b, k, 1);
            require_valid(h, a, s, &b);
            total_len += s.length();
            ++ran;
            if (h.n() <= 7) {
                auto reach = bfs_reachability(h.adj(), a, b, k + 1);
                CHECK(reach.reachable);
            }
        }
    }
    INFO("instances: ", ran, ", total schedule length: ", total_len);
    CHECK(ran > 8);
}

TEST_CASE("deep spider instances exercise multi-layer extension") {
    // legs long enough to force splitting and at least three layers
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> children;
    int legs = 3, leg_len = 90;
    int tree_n = 1 + legs * leg_len;
    children.assign(tree_n, {});
    for (int l = 0; l < legs; ++l) {
        int prev = 0;
        for (int j = 0; j < leg_len; ++j) {
            int node = 1 + l * leg_len + j;
            edges.push_back({prev, node});
            children[prev].push_back(node);
            prev = node;
        }
    }
    std::vector<std::vector<int>> subtrees(tree_n);
    for (int v = 0; v < tree_n; ++v) {
        subtrees[v] = children[v];
        subtrees[v].push_back(v);
    }
    ChordalGraph g(tree_n, std::move(edges), std::move(subtrees));
    auto dec = interval_decomposition(g, 20);
    REQUIRE(dec.depth() >= 3);
    auto alpha = gen_random_coloring(g.adj(), 5, 1);
    auto beta = gen_random_coloring(g.adj(), 5, 2);
    auto s = chordal_recolor(g, dec, alpha, beta, 5, 1);
    require_valid(g, alpha, s, &beta);
}
