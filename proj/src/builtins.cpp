#include <regex>

#include "indcx/errors.hpp"
#include "indcx/morse_ops.hpp"
#include "step_script.hpp"

namespace indcx {

namespace {

Label L(int row, int col) { return grid_label(row, col); }

Certificate grid_certificate(std::string name, FamilySpec spec, const std::vector<std::string>& steps,
                             Graph final_graph, std::string note) {
    Certificate c;
    c.name = std::move(name);
    c.initial = generate_family(spec);
    c.initial_family = spec;
    c.steps = script::parse(steps);
    c.expected_final = std::move(final_graph);
    c.note = std::move(note);
    return c;
}

Certificate renamed(Replacement r, std::string name, std::string note) {
    r.certificate.name = std::move(name);
    r.certificate.note = std::move(note);
    return std::move(r.certificate);
}

Certificate thm1_generic() {
    return renamed(make_replacement(generate_family({Family::C, 1, 4}), {PatchRole::edge, {L(1, 1), L(1, 2)}}),
                   "thm1-generic", "edge replacement on the 4-cycle; H is the 7-cycle");
}

Certificate thm2_generic() {
    return renamed(make_replacement(generate_family({Family::P, 2, 3}),
                                    {PatchRole::p22, {L(1, 2), L(2, 2), L(1, 3), L(2, 3)}}),
                   "thm2-generic", "P22 replacement on the last square of P(2,3)");
}

Certificate thm3_generic() {
    return renamed(make_replacement(generate_family({Family::M, 3, 4}),
                                    {PatchRole::p32, {L(1, 4), L(2, 4), L(3, 4), L(3, 1), L(2, 1), L(1, 1)}}),
                   "thm3-generic", "P32 replacement across the seam of M(3,4); H is isomorphic to C(3,8)");
}

Certificate p42() {
    return grid_certificate("p42", {Family::P, 4, 2}, {"D 1b 2", "D 2b 1", "D 1h 2t", "D 2h 1t"},
                            make_graph({L(1, 1), L(1, 2), L(4, 1), L(4, 2)}, {{L(1, 1), L(1, 2)}, {L(4, 1), L(4, 2)}}),
                            "P(4,2) reduces to the two outer row edges");
}

Certificate c32() {
    return grid_certificate("c32", {Family::C, 3, 2}, {"D 1b 2", "D 2b 1"},
                            make_graph({L(1, 1), L(1, 2), L(3, 1), L(3, 2)}, {{L(1, 1), L(1, 2)}, {L(3, 1), L(3, 2)}}),
                            "C(3,2) reduces to the rows 1 and 3 edges");
}

Certificate m32() {
    return grid_certificate("m32", {Family::M, 3, 2}, {"D 1h 1", "D 2h 2", "D 1b 2", "D 2b 1"},
                            make_graph({L(1, 1), L(1, 2)}, {{L(1, 1), L(1, 2)}}), "M(3,2) reduces to a single edge");
}

Certificate c33() {
    return grid_certificate("c33", {Family::C, 3, 3},
                            {"A 1 2h 3b", "A 1 3h 2b", "D 1 1h", "D 2b 3", "D 3b 2", "D 3h 1b", "D 1b 2h"},
                            make_graph({L(1, 2), L(1, 3), L(3, 1), L(3, 2)}, {{L(1, 2), L(1, 3)}, {L(3, 1), L(3, 2)}}),
                            "C(3,3) reduces to two disjoint edges");
}

Certificate c34() {
    // Rows 2 and 3 of C(3,4) form a copy of C(2,4).
    GraphBuilder fin;
    for (int r = 2; r <= 3; ++r)
        for (int c = 1; c <= 4; ++c) fin.add_vertex(L(r, c));
    for (int c = 1; c <= 4; ++c) {
        fin.add_edge(L(2, c), L(3, c));
        for (int r = 2; r <= 3; ++r) fin.add_edge(L(r, c), L(r, c % 4 + 1));
    }
    fin.add_vertex(L(1, 2)).add_vertex(L(1, 3)).add_edge(L(1, 2), L(1, 3));
    return grid_certificate("c34", {Family::C, 3, 4},
                            {"A 1 3h 2b", "D 1 1b 2h", "D 3 3b 1", "A 2b 4b 3", "D 2 2b 4", "D 4 2", "D 1 3",
                             "D 2b 4b 3h"},
                            std::move(fin).build(), "C(3,4) reduces to C(2,4) plus an edge");
}

Certificate m33() {
    const std::vector<Label> ring = {L(1, 1), L(1, 2), L(1, 3), L(2, 3), L(3, 3), L(3, 2), L(3, 1), L(2, 1)};
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < ring.size(); ++i) edges.push_back({ring[i], ring[(i + 1) % ring.size()]});
    return grid_certificate("m33", {Family::M, 3, 3}, {"D 1 3h 2b", "D 1h 3 2b", "D 1b 3b 2", "D 2b 1"},
                            make_graph(ring, edges), "M(3,3) reduces to the 8-cycle on its boundary");
}

Certificate m34() {
    std::vector<Label> vs;
    for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 4; ++c) vs.push_back(L(r, c));
    vs.push_back(L(3, 1));
    vs.push_back(L(3, 2));
    auto t = [](const char* s) { return script::grid_token(s); };
    std::vector<Edge> es;
    for (const char* pair : {"1 1b", "2 2b", "3 3b", "4 4b", "1 2", "3 4", "1b 2b", "2b 3b", "3b 4b", "4b 1b", "1b 3b",
                             "2b 4b", "1 2b", "1b 2", "3 4b", "3b 4", "1h 2h"}) {
        std::string p(pair);
        auto sp = p.find(' ');
        es.push_back({t(p.substr(0, sp).c_str()), t(p.substr(sp + 1).c_str())});
    }
    return grid_certificate("m34", {Family::M, 3, 4},
                            {"A 1b 3b 2", "A 2b 4b 3", "A 1 2b 3h", "A 1b 2 4", "A 3 4b 1", "A 3b 4 2h", "D 1b 1h 3",
                             "D 2b 2h 4h", "D 3b 3h 1h", "A 4 4h 2h", "D 1h 4 3h", "D 3h 1h", "D 2 3 4h", "A 3b 4h 2",
                             "D 4h 3"},
                            make_graph(vs, es), "M(3,4) reduces to the auxiliary 8-vertex graph plus an edge");
}

Certificate ch1(int n) {
    const int last = 2 * n + 2;
    Certificate c;
    c.name = "ch1(" + std::to_string(n) + ")";
    c.initial_family = FamilySpec{Family::CH, 1, n + 1};
    c.initial = generate_family(*c.initial_family);
    c.steps = {OpStep::add_edge(L(1, last), L(2, 3), L(1, 2)), OpStep::add_edge(L(1, last), L(2, last), L(2, 2)),
               OpStep::del_edge(L(1, last), L(2, 3), L(1, 2))};
    c.expected_final = add_edge(c.initial, L(1, last), L(2, last));
    c.note = "CH(1,n+1) gains its last vertical edge; the result is the P22 replacement of MH1(n)";
    return c;
}

Certificate p4n_to_x(int n) {
    Graph p = generate_family({Family::P, 4, n});
    std::set<Label> keep = {L(1, 1), L(1, 2), L(4, 1), L(4, 2)};
    for (int c = 3; c <= n; ++c)
        for (int r = 1; r <= 4; ++r) keep.insert(L(r, c));
    // X4(n-2) on columns 3..n, plus the row 1 and row 4 edges of columns 1..2.
    Graph fin = GraphBuilder(induced_subgraph(p, keep))
                    .remove_edge(L(1, 2), L(1, 3))
                    .remove_edge(L(4, 2), L(4, 3))
                    .add_edge(L(1, 3), L(4, 3))
                    .build();
    return grid_certificate("p4n-to-x(" + std::to_string(n) + ")", {Family::P, 4, n},
                            {"D 2b 1", "D 2h 1t", "A 1h 3 1", "D 2 3 1b", "D 1b 2", "A 3 3t 1t", "D 2t 3t 1h",
                             "D 1h 2t"},
                            std::move(fin), "P(4,n) reduces to X4(n-2) plus two edges");
}

Certificate y_recursion(int n) {
    Graph y = generate_family({Family::Y4, 4, n});
    Graph fin = delete_vertices(y, {L(2, 2), L(3, 2), L(2, 3), L(3, 3), L(1, 4), L(4, 4)});
    return grid_certificate("y-recursion(" + std::to_string(n) + ")", {Family::Y4, 4, n},
                            {"D 2b 1h", "D 2h 1b", "D 3b 2", "D 3h 2t", "D 4 2", "D 4t 2t"}, std::move(fin),
                            "Y4(n) reduces to Y4(n-3) plus three edges");
}

}  // namespace

std::vector<ParamRange> builtin_param_ranges() {
    return {{"ch1", 1, 30}, {"p4n-to-x", 3, 30}, {"y-recursion", 4, 30}};
}

Certificate builtin_certificate(const std::string& id) {
    if (id == "thm1-generic") return thm1_generic();
    if (id == "thm2-generic") return thm2_generic();
    if (id == "thm3-generic") return thm3_generic();
    if (id == "p42") return p42();
    if (id == "c32") return c32();
    if (id == "m32") return m32();
    if (id == "c33") return c33();
    if (id == "c34") return c34();
    if (id == "m33") return m33();
    if (id == "m34") return m34();
    static const std::regex param(R"(([a-z0-9-]+)\((\d+)\))");
    std::smatch m;
    if (std::regex_match(id, m, param)) {
        const std::string stem = m[1];
        const int n = std::stoi(m[2]);
        for (const auto& r : builtin_param_ranges()) {
            if (r.stem != stem) continue;
            if (n < r.lo || n > r.hi)
                throw InputError(stem + " takes n in " + std::to_string(r.lo) + ".." + std::to_string(r.hi));
            if (stem == "ch1") return ch1(n);
            if (stem == "p4n-to-x") return p4n_to_x(n);
            return y_recursion(n);
        }
    }
    throw InputError("unknown builtin certificate '" + id + "'");
}

std::vector<std::string> builtin_ids() {
    std::vector<std::string> ids = {"thm1-generic", "thm2-generic", "thm3-generic", "p42", "c32",
                                    "m32",          "c33",          "c34",          "m33", "m34"};
    for (int n = 1; n <= 5; ++n) ids.push_back("ch1(" + std::to_string(n) + ")");
    for (int n = 3; n <= 10; ++n) ids.push_back("p4n-to-x(" + std::to_string(n) + ")");
    for (int n = 4; n <= 10; ++n) ids.push_back("y-recursion(" + std::to_string(n) + ")");
    return ids;
}

Graph m34_auxiliary_graph() {
    return make_graph({"a", "b", "c", "d", "e", "f", "g", "h"},
                      {{"a", "b"}, {"c", "d"}, {"e", "f"}, {"g", "h"}, {"a", "c"}, {"c", "e"}, {"e", "g"}, {"b", "d"},
                       {"d", "f"}, {"f", "h"}, {"a", "d"}, {"d", "e"}, {"e", "h"}, {"b", "c"}, {"c", "f"}, {"f", "g"}});
}

}  // namespace indcx
