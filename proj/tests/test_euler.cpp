#include <random>

#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/euler.hpp"
#include "oracles.hpp"

using namespace indcx;

TEST_CASE("chi of small graphs") {
    CHECK(chi_reduced(Graph{}) == -1);
    CHECK(chi_reduced(grid_C(1, 3)) == 2);
    CHECK(chi_reduced(grid_P(1, 2)) == 1);
    CHECK(chi_reduced(make_graph({"a", "b"}, {})) == 0);
    CHECK(chi_reduced(make_graph({"a"}, {}, {"a"})) == -1);
    // I(C4) is two disjoint edges.
    CHECK(chi_reduced(grid_C(1, 4), ChiMethod::enumerate) == 1);
    CHECK(chi_reduced(grid_C(1, 4), ChiMethod::recursive) == 1);
}

TEST_CASE("chi methods agree with subset enumeration") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 13), 0.3, 0.08);
        const auto want = oracle::chi(g);
        CHECK(chi_reduced(g, ChiMethod::enumerate) == want);
        CHECK(chi_reduced(g, ChiMethod::recursive) == want);
        CHECK(chi_reduced(independence_complex(g)) == want);
    }
}

TEST_CASE("enumerate respects the face budget") {
    CHECK_THROWS_AS(chi_reduced(grid_P(4, 10), ChiMethod::enumerate, 100), BudgetExceeded);
    CHECK(chi_reduced(grid_P(4, 10), ChiMethod::recursive, 100) == -4);
}

TEST_CASE("closed form for the four-row strip") {
    for (int n = 1; n <= 4; ++n) CHECK(chi_prop_A(n) == oracle::chi(grid_P(4, n)));
    for (int n = 5; n <= 20; ++n) CHECK(chi_prop_A(n) == chi_reduced(grid_P(4, n)));
    CHECK_THROWS_AS(chi_prop_A(0), InputError);
}

TEST_CASE("join identity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 100; ++t) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.4, 0.1, "g");
        Graph h = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.4, 0.1, "h");
        CHECK(chi_reduced(disjoint_union(g, h)) == -chi_reduced(g) * chi_reduced(h));
    }
}

TEST_CASE("edge identity") {
    std::mt19937_64 rng(9);
    int done = 0;
    while (done < 100) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.4, 0.1);
        for (const auto& e : g.edges()) {
            if (g.has_loop(e.first) || g.has_loop(e.second)) continue;
            EdgeRecursion r = check_edge_recursion(g, e);
            CHECK(r.holds);
            CHECK(r.without_edge == oracle::chi(delete_edge(g, e.first, e.second)));
            CHECK(r.with_edge == oracle::chi(g));
            CHECK(r.remainder == oracle::chi(delete_vertices(g, closed_neighborhood(g, e))));
            ++done;
            break;
        }
    }
    Graph looped = make_graph({"a", "b"}, {{"a", "b"}}, {"a"});
    CHECK_THROWS_AS(check_edge_recursion(looped, {"a", "b"}), InputError);
    CHECK_THROWS_AS(check_edge_recursion(grid_P(1, 3), {"r1c1", "r1c3"}), InputError);
}
