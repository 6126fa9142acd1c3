#include <map>

#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/homology.hpp"
#include "indcx/morse_ops.hpp"
#include "oracles.hpp"

using namespace indcx;

namespace {

Graph single_edge(const std::string& a, const std::string& b) { return make_graph({a, b}, {{a, b}}); }

}  // namespace

TEST_CASE("step-count pins of the builtin certificates") {
    const std::map<std::string, std::size_t> pins{
        {"thm1-generic", 3}, {"thm2-generic", 6}, {"thm3-generic", 33}, {"p42", 4}, {"c32", 2}, {"m32", 4},
        {"c33", 7},          {"c34", 8},          {"m33", 4},           {"m34", 15}, {"ch1(1)", 3}, {"ch1(5)", 3}};
    for (const auto& [id, n] : pins) {
        INFO(id);
        CHECK(builtin_certificate(id).steps.size() == n);
    }
}

TEST_CASE("every builtin certificate replays with chi and Betti checks") {
    for (const auto& id : builtin_ids()) {
        INFO(id);
        ReplayReport r = replay(builtin_certificate(id), {CheckLevel::betti});
        CHECK(r.passed());
        CHECK(r.message == "");
        CHECK_FALSE(r.betti_skipped);
    }
}

TEST_CASE("unknown and out-of-range builtin ids") {
    CHECK_THROWS_AS(builtin_certificate("nope"), InputError);
    CHECK_THROWS_AS(builtin_certificate("ch1(0)"), InputError);
    CHECK_THROWS_AS(builtin_certificate("p4n-to-x(2)"), InputError);
    CHECK_THROWS_AS(builtin_certificate("y-recursion(31)"), InputError);
}

TEST_CASE("replay reports the failing step") {
    Certificate c = builtin_certificate("c34");
    c.steps[2].witness = c.steps[2].target;
    ReplayReport r = replay(c);
    CHECK(r.status == ReplayStatus::precondition_failure);
    CHECK(r.failed_step == 2);

    Certificate wrong_final = builtin_certificate("c32");
    wrong_final.expected_final = grid_C(1, 3);
    CHECK(replay(wrong_final).status == ReplayStatus::final_mismatch);

    CHECK(to_string(ReplayStatus::pass) == "PASS");
    CHECK(to_string(ReplayStatus::precondition_failure) == "PRECONDITION_FAILURE");
}

TEST_CASE("m34 ends at the auxiliary graph plus a separate edge") {
    ReplayReport r = replay(builtin_certificate("m34"), {CheckLevel::none});
    REQUIRE(r.passed());
    Graph want = disjoint_union(m34_auxiliary_graph(), single_edge("x", "y"));
    CHECK(same_graph(r.final_graph, want, MatchMode::isomorphic).equal);
    auto b = reduced_betti(independence_complex(m34_auxiliary_graph()));
    CHECK(b.at(1) == 5);
    CHECK(b.euler() == -5);
}

TEST_CASE("ch1 certificate ends at the relaxed replacement of MH1") {
    for (int n = 2; n <= 5; ++n) {
        INFO(n);
        ReplayReport r = replay(builtin_certificate("ch1(" + std::to_string(n) + ")"), {CheckLevel::none});
        REQUIRE(r.passed());
        Graph base = generate_family({Family::MH1, 2, n});
        MarkedPatch patch{PatchRole::p22, {"r1c1", "r2c1", "r1c2", "r2c2"}, true};
        REQUIRE(validate_patch(base, patch).ok);
        Replacement rep = make_replacement(base, patch);
        CHECK(same_graph(r.final_graph, rep.host, MatchMode::isomorphic).equal);
    }
}

TEST_CASE("patch validation") {
    Graph g = grid_C(1, 4);
    CHECK(validate_patch(g, {PatchRole::edge, {"r1c1", "r1c2"}}).ok);
    CHECK_FALSE(validate_patch(g, {PatchRole::edge, {"r1c1", "r1c3"}}).ok);
    CHECK_FALSE(validate_patch(g, {PatchRole::edge, {"r1c1"}}).ok);
    CHECK_FALSE(validate_patch(g, {PatchRole::edge, {"r1c1", "r1c1"}}).ok);
    CHECK_FALSE(validate_patch(g, {PatchRole::edge, {"r1c1", "zz"}}).ok);

    Graph p = grid_P(2, 3);
    CHECK(validate_patch(p, {PatchRole::p22, {"r1c1", "r2c1", "r1c2", "r2c2"}}).ok);
    Graph missing = delete_edge(p, "r1c1", "r2c1");
    MarkedPatch strict{PatchRole::p22, {"r1c1", "r2c1", "r1c2", "r2c2"}};
    CHECK_FALSE(validate_patch(missing, strict).ok);
    strict.relaxed = true;
    CHECK(validate_patch(missing, strict).ok);
    Graph chord = add_edge(p, "r1c1", "r2c2");
    CHECK_FALSE(validate_patch(chord, {PatchRole::p22, {"r1c1", "r2c1", "r1c2", "r2c2"}}).ok);

    CHECK_THROWS_AS(make_replacement(g, {PatchRole::edge, {"r1c1", "r1c3"}}), PreconditionError);
}

TEST_CASE("replacement suspends the complex") {
    struct Case {
        Graph g;
        MarkedPatch patch;
        int shift;
    };
    std::vector<Case> cases{
        {grid_C(1, 4), {PatchRole::edge, {"r1c1", "r1c2"}}, 1},
        {grid_C(1, 5), {PatchRole::edge, {"r1c1", "r1c2"}}, 1},
        {grid_P(2, 3), {PatchRole::p22, {"r1c2", "r2c2", "r1c3", "r2c3"}}, 1},
        {grid_C(2, 3), {PatchRole::p22, {"r1c1", "r2c1", "r1c2", "r2c2"}}, 1},
        {grid_P(3, 2), {PatchRole::p32, {"r1c1", "r2c1", "r3c1", "r1c2", "r2c2", "r3c2"}}, 3},
    };
    for (const auto& c : cases) {
        Replacement rep = make_replacement(c.g, c.patch);
        CHECK(rep.host.num_vertices() > c.g.num_vertices());
        CHECK(replay(rep.certificate, {CheckLevel::betti}).passed());
        CHECK(oracle::chi(rep.host) == (c.shift % 2 ? -1 : 1) * oracle::chi(c.g));
        for (int p : {2, 3}) {
            auto bh = reduced_betti(independence_complex(rep.host), p);
            auto bg = reduced_betti(independence_complex(c.g), p).shifted(c.shift);
            CHECK(bh.same_values(bg));
        }
    }
}

TEST_CASE("replacement rejects interior label collisions") {
    Graph g = make_graph({"u", "v", "h_x"}, {{"u", "v"}});
    CHECK_THROWS_AS(make_replacement(g, {PatchRole::edge, {"u", "v"}}), InputError);
    CHECK_NOTHROW(make_replacement(g, {PatchRole::edge, {"u", "v"}}, "k_"));
}

TEST_CASE("check level parsing") {
    CHECK(parse_check_level("none") == CheckLevel::none);
    CHECK(parse_check_level("betti") == CheckLevel::betti);
    CHECK_THROWS_AS(parse_check_level("full"), InputError);
}
