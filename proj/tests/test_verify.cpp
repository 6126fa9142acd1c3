#include <doctest.h>

#include "indcx/errors.hpp"
#include "indcx/verify.hpp"
#include "oracles.hpp"

using namespace indcx;

TEST_CASE("expected shapes of small members match brute force") {
    for (auto f : {CorollaryFamily::C1, CorollaryFamily::C2, CorollaryFamily::M2, CorollaryFamily::CH1,
                   CorollaryFamily::C3, CorollaryFamily::M3}) {
        for (int n = 1; n <= 5; ++n) {
            if (f == CorollaryFamily::M3 && n < 3) continue;
            Graph g = generate_family(graph_spec(f, n));
            if (g.num_vertices() > 16) continue;
            INFO(to_string(f), " ", n);
            auto faces = oracle::independent_sets(g);
            WedgeShape s = expected_shape(f, n);
            CHECK(oracle::chi(faces) == s.chi());
            auto want = betti_of_shape(s, 2);
            want.trim();
            CHECK(oracle::betti(faces, 2) == want.values);
        }
    }
}

TEST_CASE("worked values") {
    CHECK(expected_shape(CorollaryFamily::C3, 4) == WedgeShape::wedge(3, 2));
    CHECK(expected_shape(CorollaryFamily::C3, 8) == WedgeShape::wedge(5, 5));
    CHECK(expected_shape(CorollaryFamily::M2, 2) == WedgeShape::wedge(3, 0));
    CHECK(expected_shape(CorollaryFamily::M3, 4) == WedgeShape::wedge(5, 2));
    CHECK(expected_shape(CorollaryFamily::CH1, 3).is_point());
    CHECK(expected_shape(CorollaryFamily::CH1, 4) == WedgeShape::wedge(2, 3));
}

TEST_CASE("verify_case lines") {
    VerifyReport r = verify_case(CorollaryFamily::C3, 4);
    CHECK(r.pass);
    CHECK(r.line() == "C3 4 PASS chi=3 betti=GF2{2:3};GF3{2:3} expected=wedge(3,2)");
    CHECK(r.to_json()["verdict"] == "PASS");
    VerifyReport chi_only = verify_case(CorollaryFamily::C1, 7, {{2}, false});
    CHECK(chi_only.pass);
    CHECK(chi_only.betti.empty());
}

TEST_CASE("suite config parsing") {
    SuiteConfig c = parse_suite_config("# comment\nc1_max = 5\nprimes = 2,5\nchi_only = true\n");
    CHECK(c.c1_max == 5);
    CHECK(c.primes == std::vector<int>{2, 5});
    CHECK(c.chi_only);
    CHECK(parse_suite_config("workers = 3").workers == 3);
    CHECK_THROWS_AS(parse_suite_config("bogus = 1"), InputError);
    CHECK_THROWS_AS(parse_suite_config("c1_max = x"), InputError);
    CHECK_THROWS_AS(parse_suite_config("primes = 4"), InputError);
}

TEST_CASE("appendix suite") {
    for (const auto& l : verify_appendix(8)) {
        INFO(l.line());
        CHECK(l.pass);
    }
}

TEST_CASE("fault injection pinpoints the corrupted step") {
    auto lines = verify_certificates("c34", CheckLevel::chi);
    std::size_t failed = 0;
    for (const auto& l : lines)
        if (!l.pass) {
            ++failed;
            CHECK(l.id == "c34");
        }
    CHECK(failed == 1);
}

TEST_CASE("small full run") {
    SuiteConfig c;
    c.c1_max = c.c2_max = c.m2_max = 6;
    c.c3_max = c.m3_max = c.c3_betti_max = c.m3_betti_max = 5;
    c.ch1_max = 4;
    c.replacement_two_row_max = c.replacement_three_row_max = 4;
    c.workers = 1;
    SuiteSummary s = run_suite(c, SuitePart::corollaries);
    CHECK(s.ok());
    CHECK(s.passed > 0);

    c.workers = 4;
    SuiteSummary threaded = run_suite(c, SuitePart::corollaries);
    CHECK(threaded.lines == s.lines);
    CHECK(threaded.json.dump() == s.json.dump());
}
