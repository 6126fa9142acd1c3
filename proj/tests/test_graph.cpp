#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/graph.hpp"

using namespace indcx;

TEST_CASE("make_graph canonicalizes and deduplicates") {
    Graph g = make_graph({"u", "v"}, {{"v", "u"}});
    CHECK(g.num_vertices() == 2);
    CHECK(g.edges() == std::set<Edge>{{"u", "v"}});

    Graph looped = make_graph({"a"}, {}, {"a"});
    CHECK(looped.has_loop("a"));
    CHECK(looped.num_edges() == 0);

    Graph both = make_graph({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(both.num_edges() == 1);
}

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS_AS(make_graph({"a"}, {{"a", "b"}}), InputError);
    CHECK_THROWS_AS(make_graph({"a"}, {{"a", "a"}}), InputError);
    CHECK_THROWS_AS(make_graph({"a", "a"}, {}), InputError);
    CHECK_THROWS_AS(make_graph({""}, {}), InputError);
    CHECK_THROWS_AS(make_graph({"a"}, {}, {"z"}), InputError);
}

TEST_CASE("closed neighborhoods of vertices and edges") {
    Graph path = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK(closed_neighborhood(path, Label("b")) == std::set<Label>{"a", "b", "c"});
    Graph iso = make_graph({"v"}, {});
    CHECK(closed_neighborhood(iso, Label("v")) == std::set<Label>{"v"});
    Graph p4 = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
    CHECK(closed_neighborhood(p4, Edge{"b", "c"}) == std::set<Label>{"a", "b", "c", "d"});
    CHECK_THROWS_AS(closed_neighborhood(p4, Edge{"a", "c"}), InputError);
    CHECK_THROWS_AS(closed_neighborhood(p4, Label("z")), InputError);

    Graph loop = make_graph({"a", "b"}, {{"a", "b"}}, {"a"});
    CHECK(closed_neighborhood(loop, Label("a")) == std::set<Label>{"a", "b"});
}

TEST_CASE("edits are pure set operations") {
    Graph tri = grid_C(1, 3);
    Graph cut = edit(tri, DeleteVertices{{"r1c1"}});
    CHECK(cut.vertices() == std::set<Label>{"r1c2", "r1c3"});
    CHECK(cut.num_edges() == 1);
    CHECK(tri.num_vertices() == 3);

    Graph e = grid_P(1, 2);
    Graph two = edit(e, DisjointUnion{e, LabelClash::suffix});
    CHECK(two.num_vertices() == 4);
    CHECK(two.num_edges() == 2);
    CHECK_THROWS_AS(edit(e, DisjointUnion{e, LabelClash::reject}), InputError);

    Graph back = edit(edit(tri, DeleteEdge{"r1c1", "r1c2"}), AddEdge{"r1c1", "r1c2"});
    CHECK(back == tri);

    CHECK_THROWS_AS(edit(tri, AddEdge{"r1c1", "r1c2"}), InputError);
    CHECK_THROWS_AS(edit(cut, DeleteEdge{"r1c1", "r1c2"}), InputError);
    CHECK_THROWS_AS(edit(tri, AddEdge{"r1c1", "r1c1"}), InputError);
}

TEST_CASE("deleting vertices removes their loops and edges") {
    Graph g = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {"b"});
    Graph h = delete_vertices(g, {"b"});
    CHECK(h.num_edges() == 0);
    CHECK(h.loops().empty());
    for (const auto& v : h.vertices()) CHECK_FALSE(closed_neighborhood(h, v).count("b"));
}

TEST_CASE("grid family sizes") {
    Graph p = grid_P(3, 4);
    CHECK(p.num_vertices() == 12);
    CHECK(p.num_edges() == 17);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 7; ++n) {
            Graph g = grid_P(m, n);
            CHECK(g.num_vertices() == static_cast<std::size_t>(m * n));
            CHECK(g.num_edges() == static_cast<std::size_t>(m * (n - 1) + (m - 1) * n));
        }
    for (int m = 1; m <= 4; ++m)
        for (int n = 3; n <= 8; ++n) {
            Graph c = grid_C(m, n), mb = grid_M(m, n);
            CHECK(c.loops().empty());
            CHECK(c.num_vertices() == static_cast<std::size_t>(m * n));
            CHECK(c.num_vertices() == mb.num_vertices());
            CHECK(c.num_edges() == mb.num_edges());
        }
}

TEST_CASE("degenerate identifications give loops and collapse parallel edges") {
    Graph c11 = grid_C(1, 1);
    CHECK(c11.num_vertices() == 1);
    CHECK(c11.has_loop("r1c1"));

    Graph m22 = grid_M(2, 2);
    CHECK(m22.num_vertices() == 4);
    CHECK(m22.num_edges() == 6);

    Graph m21 = grid_M(2, 1);
    CHECK(m21.num_vertices() == 2);
    CHECK(m21.num_edges() == 1);
    CHECK(m21.loops().empty());

    Graph m31 = grid_M(3, 1);
    CHECK(m31.has_loop("r2c1"));
    CHECK(m31.has_edge("r1c1", "r3c1"));
}

TEST_CASE("hexagonal and strip families") {
    // CH(1,n) keeps the 2n-cycles on both rows and every other rung.
    Graph ch = generate_family({Family::CH, 1, 3});
    CHECK(ch.num_vertices() == 12);
    CHECK(ch.num_edges() == 12 + 3);
    CHECK(ch.has_edge("r1c1", "r2c1"));
    CHECK_FALSE(ch.has_edge("r1c2", "r2c2"));

    Graph mh = generate_family({Family::MH1, 2, 3});
    CHECK(mh.num_vertices() == 12);
    CHECK(mh.num_edges() == 12 + 3);
    CHECK_FALSE(mh.has_edge("r1c1", "r2c1"));
    CHECK(mh.has_edge("r1c2", "r2c2"));

    Graph x = generate_family({Family::X4, 4, 3});
    CHECK(x.num_edges() == grid_P(4, 3).num_edges() + 1);
    CHECK(x.has_edge("r1c1", "r4c1"));

    Graph y = generate_family({Family::Y4, 4, 3});
    CHECK(y.num_vertices() == 10);
    CHECK_FALSE(y.has_vertex("r1c1"));
    CHECK_FALSE(y.has_vertex("r4c1"));
}

TEST_CASE("generation is deterministic and validated") {
    CHECK(generate_family({Family::M, 3, 5}) == generate_family({Family::M, 3, 5}));
    CHECK_THROWS_AS(generate_family({Family::C, 0, 3}), InputError);
    CHECK_THROWS_AS(generate_family({Family::P, 2, 0}), InputError);
    CHECK_THROWS_AS(parse_family("Q"), InputError);
    CHECK(to_string(FamilySpec{Family::X4, 4, 5}) == "X4(5)");
    CHECK(to_string(FamilySpec{Family::C, 3, 4}) == "C(3,4)");
}

TEST_CASE("isomorphism search") {
    Graph tri = make_graph({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
    Graph c3 = grid_C(1, 3);
    GraphMatch m = same_graph(c3, tri, MatchMode::isomorphic);
    REQUIRE(m.equal);
    for (const auto& [u, v] : c3.edges()) CHECK(tri.has_edge(m.bijection.at(u), m.bijection.at(v)));

    CHECK_FALSE(same_graph(grid_P(1, 3), grid_C(1, 3), MatchMode::isomorphic).equal);
    CHECK(same_graph(tri, tri, MatchMode::labeled).equal);
    CHECK_FALSE(same_graph(grid_C(1, 3), tri, MatchMode::labeled).equal);

    // Same degree sequence, different graphs: 6-cycle vs two triangles.
    Graph two = disjoint_union(tri, tri, LabelClash::suffix);
    GraphMatch no = same_graph(grid_C(1, 6), two, MatchMode::isomorphic);
    CHECK_FALSE(no.equal);
    CHECK_FALSE(no.refused);

    GraphMatch big = same_graph(grid_P(7, 7), grid_P(7, 7), MatchMode::isomorphic, 40);
    CHECK(big.refused);

    CHECK(same_graph(grid_C(2, 5), grid_C(2, 5), MatchMode::isomorphic).equal);
    CHECK_FALSE(same_graph(grid_C(2, 5), grid_M(2, 5), MatchMode::isomorphic).equal);
}

TEST_CASE("connected components and induced subgraphs") {
    Graph g = disjoint_union(grid_C(1, 4), grid_P(1, 2), LabelClash::suffix);
    CHECK(connected_components(g).size() == 2);
    Graph h = induced_subgraph(grid_C(1, 4), {"r1c1", "r1c2"});
    CHECK(h.num_edges() == 1);
    CHECK_THROWS_AS(induced_subgraph(grid_C(1, 4), {"zz"}), InputError);
}
