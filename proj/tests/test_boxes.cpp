#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "recol/boxes.hpp"
#include "recol/gen.hpp"
#include "test_util.hpp"

using namespace recol;
namespace ou = oracle_util;

namespace {

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

void check_ruling_and_boxes(const IntervalGraph& g, uint64_t id_seed) {
    RoundLedger ledger;
    auto S = ruling_set_4_5(g, &ledger, id_seed);
    auto rep = validate_ruling_set_4_5(g, S);
    INFO(rep.reason);
    REQUIRE(rep.ok);
    auto bd = box_decomposition(g, S, &ledger);
    auto box_rep = validate_box_decomposition(g, bd);
    INFO(box_rep.reason);
    REQUIRE(box_rep.ok);
    CHECK(ledger.total() > 0);
}

}  // namespace

TEST_CASE("single vertex ruling set") {
    IntervalGraph g({{0, 1}});
    auto S = ruling_set_4_5(g);
    CHECK(S == std::vector<Vertex>{0});
    auto bd = box_decomposition(g, S);
    CHECK(bd.box_count() == 1);
    CHECK(bd.interboxes.empty());
}

TEST_CASE("bold intervals of the box-decomposition figure form a valid ruling set") {
    auto g = figure_instance();
    auto rep = validate_ruling_set_4_5(g, {3, 11});
    INFO(rep.reason);
    CHECK(rep.ok);
    auto bd = box_decomposition(g, {3, 11});
    auto box_rep = validate_box_decomposition(g, bd);
    INFO(box_rep.reason);
    CHECK(box_rep.ok);
}

TEST_CASE("invalid ruling sets are rejected by name") {
    auto g = gen_power_path(30, 2);
    // vertices 0 and 2 are at distance 2
    auto rep = validate_ruling_set_4_5(g, {0, 2, 10, 20, 29});
    CHECK_FALSE(rep.ok);
    CHECK(rep.reason.find("(0,2)") != std::string::npos);
    CHECK_THROWS_AS(box_decomposition(g, {0, 2, 10, 20, 29}), ContractError);
}

TEST_CASE("ruling set pipeline on unit paths: distances >= 4, coverage <= 5 by BFS") {
    auto g = gen_power_path(30, 2);
    RoundLedger ledger;
    auto S = ruling_set_4_5(g, &ledger);
    auto rep = validate_ruling_set_4_5(g, S);
    INFO(rep.reason);
    REQUIRE(rep.ok);
    // independent all-pairs BFS confirmation
    for (Vertex s : S)
        for (Vertex t : S)
            if (s != t) CHECK(ou::brute_bfs(g.adj(), s)[t] >= 4);
    for (Vertex v = 0; v < g.n(); ++v) {
        int best = 1 << 20;
        for (Vertex s : S) best = std::min(best, ou::brute_bfs(g.adj(), v)[s]);
        CHECK(best <= 5);
    }
}

TEST_CASE("ruling set and box decomposition on power paths and random graphs") {
    for (int omega : {2, 3, 4}) check_ruling_and_boxes(gen_power_path(120, omega), omega);
    int built = 0;
    for (uint64_t seed = 0; seed < 25; ++seed) {
        auto g0 = gen_random_interval(150, seed, 5);
        for (const auto& comp : split_components(g0)) {
            if (comp.graph.n() < 2) continue;
            check_ruling_and_boxes(comp.graph, seed);
            ++built;
        }
    }
    CHECK(built > 10);
}

TEST_CASE("id permutation does not break the ruling pipeline") {
    auto g = gen_power_path(200, 3);
    for (uint64_t seed : {0ULL, 3ULL, 11ULL}) check_ruling_and_boxes(g, seed);
}

TEST_CASE("small-diameter graphs fall back to a leader sweep") {
    auto g = gen_power_path(12, 3);  // diameter 11/2 = 5ish < 24
    RoundLedger ledger;
    auto S = ruling_set_4_5(g, &ledger);
    REQUIRE(!ledger.phases.empty());
    CHECK(ledger.phases[0].name == "ruling/leader-sweep");
    auto rep = validate_ruling_set_4_5(g, S);
    INFO(rep.reason);
    CHECK(rep.ok);
}

TEST_CASE("consecutive ruling vertices are at graph distance <= 10") {
    auto g = gen_power_path(300, 3);
    auto S = ruling_set_4_5(g);
    auto bd = box_decomposition(g, S);
    for (int i = 0; i + 1 < bd.box_count(); ++i) {
        auto d = ou::brute_bfs(g.adj(), bd.ruling[i]);
        CHECK(d[bd.ruling[i + 1]] <= 10);
    }
}

TEST_CASE("between_exclusive and between_inclusive follow region ranks") {
    auto g = gen_power_path(200, 2);
    auto bd = box_decomposition(g, ruling_set_4_5(g));
    REQUIRE(bd.box_count() >= 4);
    auto mid = bd.between_exclusive(1, 2);
    CHECK(!mid.empty());
    for (Vertex v : mid) {
        CHECK(bd.box_of[v] == -1);
        CHECK(bd.region_rank[v] == 4);
    }
    auto incl = bd.between_inclusive(1, 2);
    std::set<Vertex> incl_set(incl.begin(), incl.end());
    for (Vertex v : bd.boxes[1]) CHECK(incl_set.count(v));
    for (Vertex v : bd.boxes[2]) CHECK(incl_set.count(v));
    CHECK(incl.size() == mid.size() + bd.boxes[1].size() + bd.boxes[2].size());
}

TEST_CASE("subgraph between boxes at ruling distance r fits in a radius O(r) view") {
    auto g = gen_power_path(250, 3);
    auto bd = box_decomposition(g, ruling_set_4_5(g));
    REQUIRE(bd.box_count() >= 5);
    auto segment = bd.between_inclusive(1, 4);
    auto view = gather_view(g.adj(), bd.ruling[2], 11 * 3 + 12);
    for (Vertex v : segment) CHECK(view.contains(v));
}

TEST_CASE("spaced independent set on the ruling path") {
    auto g = gen_power_path(400, 2);
    auto bd = box_decomposition(g, ruling_set_4_5(g));
    REQUIRE(bd.box_count() >= 20);

    SUBCASE("d=6: pairwise >= 6 and maximal") {
        RoundLedger ledger;
        auto I = spaced_independent_set(g, bd, 6, &ledger);
        REQUIRE(!I.empty());
        for (size_t a = 0; a + 1 < I.size(); ++a) CHECK(I[a + 1] - I[a] >= 6);
        // maximality: every ruling index within 5 of a selected one
        for (int i = 0; i < bd.box_count(); ++i) {
            int best = 1 << 20;
            for (int s : I) best = std::min(best, std::abs(s - i));
            CHECK(best <= 5);
        }
        // labels from the spaced set never exceed 5
        auto labels = ruling_path_labels(bd, I);
        for (int l : labels) {
            CHECK(l >= 0);
            CHECK(l <= 5);
        }
    }
    SUBCASE("singleton decomposition returns the single vertex") {
        IntervalGraph tiny({{0, 1}});
        auto bd1 = box_decomposition(tiny, ruling_set_4_5(tiny));
        auto I = spaced_independent_set(tiny, bd1, 6);
        CHECK(I == std::vector<int>{0});
    }
    SUBCASE("large d falls back to a leader sweep, still spaced and maximal") {
        auto I = spaced_independent_set(g, bd, 40);
        REQUIRE(!I.empty());
        for (size_t a = 0; a + 1 < I.size(); ++a) CHECK(I[a + 1] - I[a] >= 40);
        for (int i = 0; i < bd.box_count(); ++i) {
            int best = 1 << 20;
            for (int s : I) best = std::min(best, std::abs(s - i));
            CHECK(best <= 39);
        }
    }
}

TEST_CASE("pocket components attach to a gap slot without breaking validation") {
    // A long box member covers a small pendant interval that touches no
    // spanning path vertex.
    std::vector<std::pair<long long, long long>> ivs = {
        {0, 10},     // 0: ruling candidate left
        {8, 30},     // 1
        {28, 50},    // 2
        {45, 200},   // 3: long member of the right box
        {190, 210},  // 4: ruling candidate right
        {60, 70},    // 5: pocket hanging off vertex 3
        {205, 230},  // 6
        {228, 250},  // 7
    };
    IntervalGraph g(std::move(ivs));
    auto rep = validate_ruling_set_4_5(g, {0, 4});
    INFO(rep.reason);
    REQUIRE(rep.ok);
    auto bd = box_decomposition(g, {0, 4});
    auto box_rep = validate_box_decomposition(g, bd);
    INFO(box_rep.reason);
    CHECK(box_rep.ok);
    CHECK(bd.interbox_of[5] != -1);
    CHECK(bd.region_rank[5] == 2);  // shares the gap slot between the boxes
}
