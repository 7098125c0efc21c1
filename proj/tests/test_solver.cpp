#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "oddc/gen.hpp"
#include "oddc/solver.hpp"

using namespace oddc;

namespace {

SolveResult solve(const Graph& g, int k, int jobs = 1) {
    SearchConfig cfg;
    cfg.palette = k;
    cfg.jobs = jobs;
    return solve_odd_coloring(g, cfg);
}

}  // namespace

TEST_CASE("decision examples") {
    CHECK(solve(fixtures::complete_graph(4), 3).status ==
          SolveStatus::NotColorable);
    auto c6 = solve(fixtures::cycle(6), 3);
    REQUIRE(c6.status == SolveStatus::Colorable);
    CHECK(is_odd_coloring(fixtures::cycle(6), *c6.witness).pass);
    // exhaustive: all 3^4 colorings of C_4 fail, so the solver must agree
    CHECK(brute_force_odd_chromatic(fixtures::cycle(4), 3) == std::nullopt);
    CHECK(solve(fixtures::cycle(4), 3).status == SolveStatus::NotColorable);
}

TEST_CASE("odd chromatic numbers of small named graphs") {
    SearchConfig cfg;
    CHECK(odd_chromatic_number(fixtures::complete_graph(7), cfg).value == 7);
    CHECK(odd_chromatic_number(fixtures::cycle(4), cfg).value == 4);
    CHECK(odd_chromatic_number(fixtures::cycle(5), cfg).value == 5);
    CHECK(odd_chromatic_number(fixtures::petersen(), cfg).value == 3);
}

TEST_CASE("brute force oracle basics") {
    CHECK(brute_force_odd_chromatic(fixtures::complete_graph(2), 7) == 2);
    CHECK(brute_force_odd_chromatic(fixtures::cycle(4), 7) == 4);
    CHECK(brute_force_odd_chromatic(Graph(3), 7) == 1);
    CHECK(brute_force_odd_chromatic(fixtures::cycle(4), 3) == std::nullopt);
    CHECK_THROWS_AS(brute_force_odd_chromatic(Graph(11), 7),
                    std::invalid_argument);
}

TEST_CASE("solver equals brute force on cycles and small graphs") {
    SearchConfig cfg;
    for (int n = 3; n <= 9; ++n) {
        Graph c = fixtures::cycle(n);
        auto fast = odd_chromatic_number(c, cfg);
        auto slow = brute_force_odd_chromatic(c, n);
        REQUIRE(fast.value.has_value());
        CHECK(*fast.value == *slow);
    }
    // exhaustive over all labeled connected graphs on <= 5 vertices
    for (int n = 2; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << bits); ++mask) {
            Graph g(n);
            int b = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++b)
                    if (mask & (1 << b)) g.add_edge(i, j);
            if (!is_connected(g)) continue;
            auto fast = odd_chromatic_number(g, cfg);
            auto slow = brute_force_odd_chromatic(g, n);
            REQUIRE(fast.value.has_value());
            REQUIRE(slow.has_value());
            CHECK(*fast.value == *slow);
        }
    }
}

TEST_CASE("every witness verifies") {
    std::mt19937 rng(3);
    SearchConfig cfg;
    for (int iter = 0; iter < 80; ++iter) {
        int n = 2 + rng() % 7;
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() % 100 < 45) g.add_edge(i, j);
        auto r = odd_chromatic_number(g, cfg);
        REQUIRE(r.value.has_value());
        cfg.palette = *r.value;
        auto s = solve_odd_coloring(g, cfg);
        REQUIRE(s.status == SolveStatus::Colorable);
        CHECK(is_odd_coloring(g, *s.witness).pass);
        CHECK(static_cast<int>(s.witness->color.size()) == n);
    }
}

TEST_CASE("colorable at k implies colorable at k+1") {
    std::mt19937 rng(13);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 3 + rng() % 6;
        Graph g(n);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (rng() % 2) g.add_edge(i, j);
        for (int k = 1; k < n; ++k)
            if (solve(g, k).status == SolveStatus::Colorable)
                CHECK(solve(g, k + 1).status == SolveStatus::Colorable);
    }
}

TEST_CASE("witness is identical across worker counts") {
    auto grid = gen_subdivided(gen_torus_grid(4, 5), 1, 4, 11);
    auto r1 = solve(grid.graph(), 7, 1);
    auto r4 = solve(grid.graph(), 7, 4);
    REQUIRE(r1.status == SolveStatus::Colorable);
    REQUIRE(r4.status == SolveStatus::Colorable);
    CHECK(r1.witness->color == r4.witness->color);

    // a not-colorable instance must agree too
    auto n1 = solve(fixtures::cycle(4), 3, 1);
    auto n4 = solve(fixtures::cycle(4), 3, 4);
    CHECK(n1.status == SolveStatus::NotColorable);
    CHECK(n4.status == SolveStatus::NotColorable);

    // and repeated runs are stable
    auto again = solve(grid.graph(), 7, 4);
    CHECK(again.witness->color == r4.witness->color);
}

TEST_CASE("timeout reports timeout, never a verdict") {
    std::mt19937 rng(7);
    Graph g(80);
    for (int j = 1; j < 80; ++j)
        for (int i = 0; i < j; ++i)
            if (rng() % 100 < 20) g.add_edge(i, j);
    SearchConfig cfg;
    cfg.palette = 5;
    cfg.time_limit_ms = 10;
    CHECK(solve_odd_coloring(g, cfg).status == SolveStatus::Timeout);
    cfg.jobs = 4;
    CHECK(solve_odd_coloring(g, cfg).status == SolveStatus::Timeout);
    auto chrom = odd_chromatic_number(g, cfg);
    CHECK(chrom.timed_out);
    CHECK(!chrom.value.has_value());
}

TEST_CASE("edge cases and guards") {
    CHECK(solve(Graph(0), 1).status == SolveStatus::Colorable);
    CHECK(solve(Graph(3), 1).status == SolveStatus::Colorable);
    CHECK_THROWS_AS(solve(Graph(1), 0), std::invalid_argument);
    SearchConfig cfg;
    CHECK(odd_chromatic_number(Graph(0), cfg).value == 0);
    CHECK(greedy_clique_bound(fixtures::complete_graph(6)) == 6);
    CHECK(greedy_clique_bound(fixtures::cycle(5)) == 2);
}
