#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/op_step.hpp"

using namespace indcx;

TEST_CASE("check_step on small graphs") {
    Graph path = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    StepCheck c = check_step(path, OpStep::del_vertex("b", "a"));
    CHECK_FALSE(c.ok);
    CHECK(c.diagnostic.find("removed closed neighborhood") != std::string::npos);

    Graph two_edges = make_graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    CHECK_FALSE(check_step(two_edges, OpStep::del_vertex("a", "c")));
    Graph edge_plus = make_graph({"a", "b", "c"}, {{"a", "b"}});
    CHECK(check_step(edge_plus, OpStep::del_vertex("a", "c")));

    Graph host = make_graph({"u", "x", "y", "z", "v", "h"},
                            {{"u", "x"}, {"x", "y"}, {"y", "z"}, {"z", "v"}, {"h", "u"}, {"h", "v"}});
    CHECK(check_step(host, OpStep::add_edge("u", "v", "y")));
    CHECK_FALSE(check_step(host, OpStep::add_edge("u", "x", "y")));  // edge present
    CHECK_FALSE(check_step(host, OpStep::del_edge("u", "v", "y")));  // edge absent
}

TEST_CASE("looped witness never qualifies") {
    Graph g = make_graph({"a", "b", "c"}, {{"a", "b"}}, {"c"});
    CHECK_FALSE(check_step(g, OpStep::del_vertex("a", "c")));
}

TEST_CASE("apply_step edits and refuses invalid steps") {
    Graph g = make_graph({"1", "1b", "2", "2b", "3", "3b"},
                         {{"1", "2"}, {"2", "3"}, {"1b", "2b"}, {"2b", "3b"}, {"1", "1b"}, {"2", "2b"}, {"3", "3b"}});
    Graph h = apply_step(add_edge(add_edge(g, "1", "3"), "1b", "3b"), OpStep::del_edge("1", "2", "3b"));
    CHECK_FALSE(h.has_edge("1", "2"));
    CHECK(h.num_vertices() == 6);
    CHECK_THROWS_AS(apply_step(g, OpStep::del_vertex("2", "1")), PreconditionError);
}

TEST_CASE("step text forms") {
    CHECK(OpStep::del_vertex("v", "u").to_string() == "Del(v,u)");
    CHECK(OpStep::del_edge("v", "w", "u").to_string() == "Del(v:w,u)");
    CHECK(OpStep::add_edge("v", "w", "u").to_string() == "Add(v:w,u)");
    CHECK(parse_op_kind("add_edge") == OpKind::add_edge);
    CHECK_THROWS_AS(parse_op_kind("contract"), InputError);
}
