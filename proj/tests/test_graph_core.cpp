#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "recol/clique.hpp"
#include "recol/gen.hpp"
#include "recol/graph.hpp"
#include "recol/io.hpp"
#include "test_util.hpp"

using namespace recol;
namespace ou = oracle_util;

namespace {

// The 15-interval instance from the clique-path illustration, scaled to
// integers (original drawing coordinates x100).
IntervalGraph figure_instance() {
    return IntervalGraph({{2100, 10500},
                          {6000, 15900},
                          {11941, 19394},
                          {13700, 22700},
                          {17594, 28661},
                          {21008, 23808},
                          {24900, 34004},
                          {26541, 30274},
                          {31298, 41451},
                          {35800, 38384},
                          {39738, 45204},
                          {42833, 52733},
                          {48118, 56718},
                          {49338, 51471},
                          {54071, 58004}});
}

std::vector<Vertex> range_vec(int lo, int hi) {
    std::vector<Vertex> v;
    for (int i = lo; i <= hi; ++i) v.push_back(i);
    return v;
}

}  // namespace

TEST_CASE("interval adjacency matches pairwise intersection oracle") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_interval(40, seed);
        auto brute = ou::brute_interval_adjacency(g.intervals());
        REQUIRE(g.adj() == brute);
    }
}

TEST_CASE("clique path of the figure instance") {
    auto g = figure_instance();
    auto cp = clique_path(g);
    std::vector<std::vector<Vertex>> expect = {{0, 1},   {1, 2, 3}, {2, 3, 4},   {3, 4, 5},
                                               {4, 6, 7}, {6, 8},    {8, 9},      {8, 10},
                                               {10, 11},  {11, 12, 13}, {12, 14}};
    CHECK(cp.bags == expect);
    CHECK(max_clique_size(g) == 3);
}

TEST_CASE("clique path trivia") {
    IntervalGraph single({{0, 1}});
    auto cp = clique_path(single);
    CHECK(cp.bags == std::vector<std::vector<Vertex>>{{0}});

    IntervalGraph two({{0, 5}, {10, 15}});
    CHECK_THROWS_AS(clique_path(two), ContractError);
    CHECK_THROWS_WITH_AS(clique_path(two), doctest::Contains("component"), ContractError);
}

TEST_CASE("clique path bags equal brute-force maximal cliques") {
    for (uint64_t seed = 100; seed < 130; ++seed) {
        auto g = gen_random_interval(8, seed, 3);
        if (!g.connected()) continue;
        auto cp = clique_path(g);
        auto got = cp.bags;
        std::sort(got.begin(), got.end());
        CHECK(got == ou::brute_maximal_cliques(g.adj()));
    }
}

TEST_CASE("clique path runs are contiguous") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_interval(60, seed, 4);
        for (const auto& comp : split_components(g)) {
            auto cp = clique_path(comp.graph);
            for (Vertex v = 0; v < comp.graph.n(); ++v) {
                auto [first, last] = cp.run_of(v);
                REQUIRE(first >= 0);
                for (int i = first; i <= last; ++i)
                    REQUIRE(std::binary_search(cp.bags[i].begin(), cp.bags[i].end(), v));
            }
        }
    }
}

TEST_CASE("clique tree: complete graph on a single host node") {
    ChordalGraph g(1, {}, {{0}, {0}, {0}});
    auto t = clique_tree(g);
    REQUIRE(t.size() == 1);
    CHECK(t.bags[0] == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("clique tree of the three-subtree example") {
    // a spans one branch, b the middle, c a leaf edge; a-b and b-c intersect
    // but a-c do not.
    ChordalGraph g(7, {{0, 1}, {1, 2}, {3, 1}, {4, 3}, {3, 5}, {6, 4}},
                   {{0, 1, 3, 5}, {2, 1, 3, 4, 6}, {4, 6}});
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    auto t = clique_tree(g);
    auto bags = t.bags;
    std::sort(bags.begin(), bags.end());
    CHECK(bags == std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}});
    CHECK(t.edges.size() == 1);
}

TEST_CASE("clique tree bags equal brute-force maximal cliques") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen_random_chordal(12, seed);
        if (!g.connected()) continue;
        auto t = clique_tree(g);
        auto got = t.bags;
        std::sort(got.begin(), got.end());
        CHECK(got == ou::brute_maximal_cliques(g.adj()));
        CHECK(t.size() <= g.n());
        // every vertex's bags induce a connected subtree
        auto tadj = t.tree_adj();
        for (Vertex v = 0; v < g.n(); ++v) {
            std::vector<int> holding;
            for (int i = 0; i < t.size(); ++i)
                if (std::binary_search(t.bags[i].begin(), t.bags[i].end(), v))
                    holding.push_back(i);
            REQUIRE(!holding.empty());
            std::set<int> hold(holding.begin(), holding.end());
            std::vector<int> stack = {holding[0]};
            std::set<int> seen = {holding[0]};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : tadj[u])
                    if (hold.count(w) && !seen.count(w)) {
                        seen.insert(w);
                        stack.push_back(w);
                    }
            }
            CHECK(seen.size() == hold.size());
        }
    }
}

TEST_CASE("chordal representation validation") {
    CHECK_THROWS_AS(ChordalGraph(3, {{0, 1}, {1, 2}}, {{0, 2}}), ContractError);
    CHECK_THROWS_AS(ChordalGraph(2, {{0, 1}}, {{}}), ContractError);
}

TEST_CASE("max clique size") {
    IntervalGraph disjoint({{0, 1}, {5, 6}, {10, 11}});
    CHECK(max_clique_size(disjoint) == 1);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen_random_interval(10, seed, 3);
        CHECK(max_clique_size(g) == ou::brute_max_clique(g.adj()));
        auto c = gen_random_chordal(10, seed);
        CHECK(max_clique_size(c) == ou::brute_max_clique(c.adj()));
    }
}

TEST_CASE("border basics") {
    auto g = gen_power_path(20, 3);
    SUBCASE("whole graph has empty border") {
        CHECK(border(g, range_vec(0, 19)).empty());
    }
    SUBCASE("middle window has two cliques of omega-1 vertices each") {
        auto b = border(g, range_vec(5, 12));
        CHECK(b == std::vector<Vertex>{5, 6, 11, 12});
        CHECK(coverable_by_two_cliques(g.adj(), b));
        CHECK(static_cast<int>(b.size()) <= 2 * 3);
    }
    SUBCASE("extremal bag border stays within one clique") {
        auto b = border(g, {0, 1, 2});
        CHECK(b == std::vector<Vertex>{1, 2});
        CHECK(coverable_by_two_cliques(g.adj(), b));
    }
    SUBCASE("non-consecutive input is rejected") {
        CHECK_THROWS_AS(border(g, {5, 7}), ContractError);
    }
}

TEST_CASE("border of proper-interval windows: <= 2 cliques, <= 2 omega") {
    // Windows cut by introduction order have the two-clique border shape when
    // no interval nests inside another (the shape the box machinery relies
    // on); nested instances are exercised through real box windows later.
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 12; ++rep) {
        std::vector<std::pair<long long, long long>> ivs;
        long long cursor = 0;
        for (int i = 0; i < 50; ++i) {
            cursor += 1 + static_cast<long long>(rng() % 5);
            ivs.push_back({cursor, cursor + 12});
        }
        IntervalGraph g{std::move(ivs)};
        REQUIRE(g.connected());
        int omega = max_clique_size(g);
        auto np = nice_path(clique_path(g));
        int lo = g.n() / 4, hi = 3 * g.n() / 4;
        std::vector<Vertex> window;
        for (Vertex v = 0; v < g.n(); ++v)
            if (np.position[v] >= lo && np.position[v] <= hi) window.push_back(v);
        auto b = border(g, window);
        CHECK(static_cast<int>(b.size()) <= 2 * omega);
        CHECK(coverable_by_two_cliques(g.adj(), b));
    }
}

TEST_CASE("degeneracy order excluding border") {
    SUBCASE("interior of a path: at most 2 later neighbors") {
        auto g = gen_power_path(15, 2);
        auto window = range_vec(3, 11);
        auto b = border(g, window);
        auto order = degeneracy_order_excluding_border(g, window, b);
        REQUIRE(order.size() == window.size() - b.size());
    }
    SUBCASE("power path omega=3: removal degree <= 4") {
        auto g = gen_power_path(30, 3);
        auto window = range_vec(8, 21);
        auto b = border(g, window);
        auto order = degeneracy_order_excluding_border(g, window, b);

        // replay: at removal time, count neighbors inside the window graph
        // that are not yet removed
        std::set<Vertex> removed;
        std::set<Vertex> win(window.begin(), window.end());
        for (Vertex v : order) {
            int d = 0;
            for (Vertex w : g.neighbors(v))
                if (win.count(w) && !removed.count(w)) ++d;
            CHECK(d <= 2 * 3 - 2);
            removed.insert(v);
        }
    }
    SUBCASE("random interval windows: bound 2 omega - 2 holds on replay") {
        for (uint64_t seed = 40; seed < 52; ++seed) {
            auto g0 = gen_random_interval(40, seed, 3);
            for (const auto& comp : split_components(g0)) {
                const auto& g = comp.graph;
                if (g.n() < 6) continue;
                int omega = max_clique_size(g);
                auto np = nice_path(clique_path(g));
                std::vector<Vertex> window;
                for (Vertex v = 0; v < g.n(); ++v)
                    if (np.position[v] >= 1 && np.position[v] <= g.n() - 2) window.push_back(v);
                if (window.empty()) continue;
                auto b = border(g, window);
                auto order = degeneracy_order_excluding_border(g, window, b);
                std::set<Vertex> removed;
                std::set<Vertex> win(window.begin(), window.end());
                for (Vertex v : order) {
                    int d = 0;
                    for (Vertex w : g.neighbors(v))
                        if (win.count(w) && !removed.count(w)) ++d;
                    CHECK(d <= 2 * omega - 2);
                    removed.insert(v);
                }
            }
        }
    }
}

TEST_CASE("generators") {
    SUBCASE("power path with omega=2 is a path") {
        auto g = gen_power_path(5, 2);
        for (Vertex u = 0; u < 5; ++u)
            for (Vertex v = u + 1; v < 5; ++v) CHECK(g.adjacent(u, v) == (v - u == 1));
    }
    SUBCASE("power path clique number and max degree") {
        for (int omega = 2; omega <= 4; ++omega)
            for (int n : {3, 6, 9}) {
                auto g = gen_power_path(n, omega);
                CHECK(max_clique_size(g) == std::min(n, omega));
                CHECK(max_clique_size(g) == ou::brute_max_clique(g.adj()));
                CHECK(g.max_degree() == std::min(n - 1, 2 * omega - 2));
            }
    }
    SUBCASE("random interval generator is seed-deterministic") {
        auto a = gen_random_interval(30, 7);
        auto b = gen_random_interval(30, 7);
        CHECK(a.intervals() == b.intervals());
        auto c = gen_random_interval(30, 8);
        CHECK(a.intervals() != c.intervals());
    }
    SUBCASE("random chordal generator: derived graph is chordal, n <= 12") {
        for (uint64_t seed = 0; seed < 30; ++seed) {
            auto g = gen_random_chordal(12, seed);
            CHECK(ou::brute_is_chordal(g.adj()));
        }
    }
    SUBCASE("omega cap honored") {
        for (uint64_t seed = 0; seed < 10; ++seed) {
            auto g = gen_random_chordal(40, seed, 4);
            CHECK(max_clique_size(g) <= 4);
        }
    }
}

TEST_CASE("interval graphs are (omega-1)-degenerate") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_interval(50, seed, 4);
        int omega = max_clique_size(g);
        auto order = global_degeneracy_order(g.adj());
        CHECK(degeneracy_of_order(g.adj(), order) <= omega - 1);
    }
}

TEST_CASE("inclusion-maximal intervals induce a proper interval graph with Delta <= 2 omega - 2") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        auto g = gen_random_interval(50, seed, 4);
        std::vector<Vertex> W;
        for (Vertex v = 0; v < g.n(); ++v) {
            bool contained = false;
            for (Vertex u = 0; u < g.n() && !contained; ++u) {
                if (u == v) continue;
                bool covers = g.left(u) <= g.left(v) && g.right(v) <= g.right(u);
                bool strict = g.left(u) < g.left(v) || g.right(v) < g.right(u);
                if (covers && (strict || u < v)) contained = true;
            }
            if (!contained) W.push_back(v);
        }
        // induced adjacency
        Adjacency sub(W.size());
        for (size_t i = 0; i < W.size(); ++i)
            for (size_t j = i + 1; j < W.size(); ++j)
                if (g.adjacent(W[i], W[j])) {
                    sub[i].push_back(static_cast<Vertex>(j));
                    sub[j].push_back(static_cast<Vertex>(i));
                }
        int omega_w = ou::brute_max_clique(sub);
        if (omega_w >= 1) CHECK(max_degree(sub) <= std::max(0, 2 * omega_w - 2));
    }
}

TEST_CASE("params derivation") {
    auto p = Params::derive(3, 4, 1000, 6, 1);
    CHECK(p.N == 678);
    CHECK(p.N_prime == 648);
    CHECK(p.N_second == 215);
    CHECK(p.D == 34560);
}

TEST_CASE("component splitting") {
    IntervalGraph g({{0, 1}, {10, 12}, {1, 3}, {11, 14}, {20, 21}});
    auto comps = split_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].to_global == std::vector<Vertex>{0, 2});
    CHECK(comps[1].to_global == std::vector<Vertex>{1, 3});
    CHECK(comps[2].to_global == std::vector<Vertex>{4});
}

TEST_CASE("json graph round trip is byte identical") {
    auto g = gen_random_interval(20, 3);
    auto s1 = graph_to_json(g);
    auto g2 = std::get<IntervalGraph>(graph_from_json(s1));
    CHECK(graph_to_json(g2) == s1);

    auto c = gen_random_chordal(15, 4);
    auto s2 = graph_to_json(c);
    auto c2 = std::get<ChordalGraph>(graph_from_json(s2));
    CHECK(graph_to_json(c2) == s2);
}

TEST_CASE("json parse errors carry a byte offset") {
    CHECK_THROWS_WITH_AS(graph_from_json("{\"type\":"), doctest::Contains("byte"),
                         ContractError);
}

TEST_CASE("dot export emits all edges") {
    auto g = gen_power_path(4, 2);
    auto dot = graph_to_dot(g.adj());
    CHECK(dot.find("v0 -- v1") != std::string::npos);
    CHECK(dot.find("v2 -- v3") != std::string::npos);
}
