#include <cstdio>
#include <fstream>

#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/io.hpp"

using namespace indcx;

TEST_CASE("graph JSON round trip") {
    Graph g = make_graph({"a", "b", "c"}, {{"b", "a"}}, {"c"});
    Json j = graph_to_json(g);
    CHECK(j.dump() == R"({"vertices":["a","b","c"],"edges":[["a","b"]],"loops":["c"]})");
    CHECK(graph_from_json(j) == g);
    CHECK(graph_from_json(Json::parse(R"({"family":"C","m":1,"n":3})")) == grid_C(1, 3));
    CHECK(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[]})")).num_vertices() == 1);
}

TEST_CASE("malformed graph documents") {
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":["a"],"edges":[["a","z"]]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"edges":[]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"vertices":[1],"edges":[]})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"family":"Q","m":1,"n":3})")), InputError);
    CHECK_THROWS_AS(graph_from_json(Json::parse("[]")), InputError);
}

TEST_CASE("family shorthand") {
    CHECK(parse_family_shorthand("C(3,4)") == FamilySpec{Family::C, 3, 4});
    CHECK(parse_family_shorthand("X4(5)") == FamilySpec{Family::X4, 4, 5});
    CHECK_FALSE(parse_family_shorthand("C3,4"));
    CHECK(family_from_json(family_to_json({Family::M, 2, 7})) == FamilySpec{Family::M, 2, 7});
}

TEST_CASE("step and certificate round trips") {
    OpStep s = OpStep::add_edge("v", "w", "u");
    CHECK(step_from_json(step_to_json(s)) == s);
    CHECK_THROWS_AS(step_from_json(Json::parse(R"({"op":"add_edge","v":"a"})")), InputError);

    for (const std::string id : {"c33", "m34", "thm3-generic", "p4n-to-x(5)"}) {
        Certificate c = builtin_certificate(id);
        Certificate back = certificate_from_json(Json::parse(certificate_to_json(c).dump()));
        CHECK(back.name == c.name);
        CHECK(back.initial == c.initial);
        CHECK(back.steps == c.steps);
        CHECK(back.expected_final == c.expected_final);
        CHECK(replay(back).passed());
    }
}

TEST_CASE("reading files") {
    const std::string path = "indcx_io_test.json";
    {
        std::ofstream f(path);
        f << R"({"vertices":["x","y"],"edges":[["x","y"]]})";
    }
    CHECK(load_graph(path).num_edges() == 1);
    CHECK(load_graph("P(2,3)") == grid_P(2, 3));
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_json("no_such_file.json"), InputError);
}
