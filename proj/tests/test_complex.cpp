#include <random>

#include <doctest.h>

#include "indcx/complex.hpp"
#include "indcx/errors.hpp"
#include "oracles.hpp"

using namespace indcx;

namespace {

std::set<oracle::Face> faces_of(const SimplicialComplex& k) {
    std::set<oracle::Face> out;
    for (const auto& f : k.faces()) {
        auto l = k.labels_of(f);
        out.insert(oracle::Face(l.begin(), l.end()));
    }
    return out;
}

}  // namespace

TEST_CASE("independence complexes of small graphs") {
    SimplicialComplex tri = independence_complex(grid_C(1, 3));
    CHECK(f_vector(tri) == std::vector<std::size_t>{1, 3});

    SimplicialComplex edgeless = independence_complex(make_graph({"a", "b"}, {}));
    CHECK(f_vector(edgeless) == std::vector<std::size_t>{1, 2, 1});

    SimplicialComplex looped = independence_complex(make_graph({"a"}, {}, {"a"}));
    CHECK(looped.num_faces() == 1);
    CHECK(looped.universe().empty());

    CHECK(f_vector(independence_complex(grid_P(1, 2))) == std::vector<std::size_t>{1, 2});
    CHECK(f_vector(independence_complex(grid_C(1, 4))) == std::vector<std::size_t>{1, 4, 2});
}

TEST_CASE("independence complex matches subset enumeration") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 150; ++t) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 11), 0.35, 0.1);
        SimplicialComplex k = independence_complex(g);
        CHECK(faces_of(k) == oracle::independent_sets(g));
        CHECK(is_downward_closed(k));
    }
}

TEST_CASE("face budget is enforced and never truncates") {
    CHECK_THROWS_AS(independence_complex(make_graph({"a", "b", "c", "d"}, {}), 15), BudgetExceeded);
    CHECK(independence_complex(make_graph({"a", "b", "c", "d"}, {}), 16).num_faces() == 16);
}

TEST_CASE("join and diamonds") {
    SimplicialComplex unit;
    SimplicialComplex k = independence_complex(grid_C(1, 5));
    CHECK(complexes_equal(join(unit, k), k));

    SimplicialComplex s0 = diamond(0);
    CHECK(f_vector(s0) == std::vector<std::size_t>{1, 2});
    CHECK(diamond(-1).num_faces() == 1);
    CHECK(f_vector(join(s0, s0, LabelClash::suffix)) == std::vector<std::size_t>{1, 4, 4});
    CHECK(f_vector(diamond(1)) == std::vector<std::size_t>{1, 4, 4});
    CHECK(f_vector(diamond(2)) == std::vector<std::size_t>{1, 6, 12, 8});
    CHECK_THROWS_AS(join(s0, s0), InputError);
    CHECK_THROWS_AS(diamond(-2), InputError);
}

TEST_CASE("complex of a disjoint union is the join and f-vectors convolve") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 60; ++t) {
        Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.4, 0.1, "g");
        Graph h = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.4, 0.1, "h");
        SimplicialComplex kg = independence_complex(g), kh = independence_complex(h);
        SimplicialComplex j = join(kg, kh);
        CHECK(complexes_equal(independence_complex(disjoint_union(g, h)), j));
        auto a = f_vector(kg), b = f_vector(kh), c = f_vector(j);
        std::vector<std::size_t> conv(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t k = 0; k < b.size(); ++k) conv[i + k] += a[i] * b[k];
        CHECK(c == conv);
    }
}

TEST_CASE("face dump format") {
    auto lines = dump_faces(independence_complex(grid_C(1, 4)));
    CHECK(lines == std::vector<std::string>{"()", "r1c1", "r1c2", "r1c3", "r1c4", "r1c1,r1c3", "r1c2,r1c4"});
}

TEST_CASE("collapse oracle on hand examples") {
    Graph g = make_graph({"u", "v", "w"}, {{"v", "w"}});
    CollapseReport r = collapse_oracle(g, OpStep::del_vertex("v", "u"));
    CHECK(r.ok);
    CHECK(complexes_equal(r.residual, independence_complex(make_graph({"u", "w"}, {}))));
    CHECK(r.pairs == 1);

    Graph path = make_graph({"u", "x", "y", "z", "v"}, {{"u", "x"}, {"x", "y"}, {"y", "z"}, {"z", "v"}});
    CollapseReport a = collapse_oracle(path, OpStep::add_edge("u", "v", "y"));
    CHECK(a.ok);
    CHECK(complexes_equal(a.residual, independence_complex(add_edge(path, "u", "v"))));

    CollapseReport d = collapse_oracle(add_edge(path, "u", "v"), OpStep::del_edge("u", "v", "y"));
    CHECK(d.ok);
    CHECK(d.expansion);
    CHECK(complexes_equal(d.residual, independence_complex(add_edge(path, "u", "v"))));

    CHECK_THROWS_AS(collapse_oracle(path, OpStep::del_vertex("x", "u")), PreconditionError);
}

TEST_CASE("collapse oracle agrees with brute force on random valid steps") {
    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 120) {
        Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.3, 0.05);
        std::vector<Label> vs(g.vertices().begin(), g.vertices().end());
        const Label& v = vs[rng() % vs.size()];
        const Label& w = vs[rng() % vs.size()];
        const Label& u = vs[rng() % vs.size()];
        OpStep s = (v == w) ? OpStep::del_vertex(v, u)
                   : g.has_edge(v, w) ? OpStep::del_edge(v, w, u)
                                      : OpStep::add_edge(v, w, u);
        if (!check_step(g, s)) continue;
        ++checked;
        CollapseReport r = collapse_oracle(g, s);
        REQUIRE(r.ok);
        const Graph& small = s.kind == OpKind::del_edge ? g : apply_step(g, s);
        CHECK(faces_of(r.residual) == oracle::independent_sets(small));
        // del_edge can only enlarge the complex, the other moves only shrink it.
        auto before = oracle::independent_sets(g).size(), after = oracle::independent_sets(apply_step(g, s)).size();
        if (s.kind == OpKind::del_edge)
            CHECK(after >= before);
        else
            CHECK(after <= before);
    }
}
