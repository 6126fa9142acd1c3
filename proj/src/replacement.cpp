#include <map>

#include "indcx/errors.hpp"
#include "indcx/morse_ops.hpp"
#include "step_script.hpp"

namespace indcx {

std::string to_string(PatchRole r) {
    switch (r) {
        case PatchRole::edge: return "edge";
        case PatchRole::p22: return "P22";
        case PatchRole::p32: return "P32";
    }
    return "?";
}

namespace {

std::size_t patch_size(PatchRole r) {
    return r == PatchRole::edge ? 2 : r == PatchRole::p22 ? 4 : 6;
}

// Required induced edges, as index pairs into the label list.
std::vector<std::pair<int, int>> patch_edges(PatchRole r) {
    switch (r) {
        case PatchRole::edge: return {{0, 1}};
        case PatchRole::p22: return {{0, 1}, {2, 3}, {0, 2}, {1, 3}};
        case PatchRole::p32: return {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}};
    }
    return {};
}

}  // namespace

StepCheck validate_patch(const Graph& g, const MarkedPatch& patch) {
    const auto& l = patch.labels;
    auto fail = [&](const std::string& why) { return StepCheck{false, to_string(patch.role) + " patch: " + why}; };
    if (l.size() != patch_size(patch.role))
        return fail("expects " + std::to_string(patch_size(patch.role)) + " labels, got " + std::to_string(l.size()));
    if (patch.relaxed && patch.role != PatchRole::p22) return fail("only the P22 patch has a relaxed form");
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (!g.has_vertex(l[i])) return fail("'" + l[i] + "' is not a vertex");
        if (g.has_loop(l[i])) return fail("'" + l[i] + "' carries a loop");
        for (std::size_t j = 0; j < i; ++j)
            if (l[i] == l[j]) return fail("label '" + l[i] + "' repeated");
    }
    auto required = patch_edges(patch.role);
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            bool want = false;
            for (auto [a, b] : required)
                if ((a == static_cast<int>(i) && b == static_cast<int>(j))) want = true;
            bool optional = patch.relaxed && i == 0 && j == 1;
            bool have = g.has_edge(l[i], l[j]);
            if (have && !want) return fail("unexpected edge " + l[i] + "-" + l[j] + " inside the patch");
            if (!have && want && !optional) return fail("missing edge " + l[i] + "-" + l[j]);
        }
    return {true, {}};
}

namespace {

struct Strip {
    std::map<std::string, Label> names;  // proof token -> label in H
    std::vector<std::pair<std::string, std::string>> edges;  // proof strip edges
};

// Edges of the m-row, n-column strip in grid tokens.
std::vector<std::pair<std::string, std::string>> strip_edges(int rows, int cols) {
    const char* deco[] = {"", "b", "h"};
    auto tok = [&](int c, int r) { return std::to_string(c) + deco[r - 1]; };
    std::vector<std::pair<std::string, std::string>> out;
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            if (c < cols) out.push_back({tok(c, r), tok(c + 1, r)});
            if (r < rows) out.push_back({tok(c, r), tok(c, r + 1)});
        }
    return out;
}

Replacement build(const Graph& g, const Strip& strip, const std::vector<Label>& interior,
                  const std::vector<std::pair<Label, Label>>& removed, const std::vector<std::string>& script,
                  const Graph& factor, const std::string& name, const std::string& note) {
    for (const auto& v : interior)
        if (g.has_vertex(v)) throw InputError("replacement label '" + v + "' already used by the host graph");
    auto resolve = [&](const std::string& t) { return strip.names.at(t); };
    std::set<Label> inner(interior.begin(), interior.end());
    GraphBuilder h(g);
    for (const auto& [u, v] : removed) h.remove_edge(u, v);
    for (const auto& v : interior) h.add_vertex(v);
    for (const auto& [s, t] : strip.edges) {
        Label u = resolve(s), v = resolve(t);
        if (inner.count(u) || inner.count(v)) h.add_edge(u, v);
    }
    Replacement out;
    out.host = std::move(h).build();
    out.certificate.name = name;
    out.certificate.initial = out.host;
    out.certificate.steps = script::parse(script, resolve);
    out.certificate.expected_final = disjoint_union(g, factor);
    out.certificate.note = note;
    return out;
}

Replacement thm1(const Graph& g, const std::vector<Label>& l, const std::string& prefix) {
    Strip s;
    const Label x = prefix + "x", y = prefix + "y", z = prefix + "z";
    s.names = {{"u", l[0]}, {"v", l[1]}, {"x", x}, {"y", y}, {"z", z}};
    s.edges = {{"u", "x"}, {"x", "y"}, {"y", "z"}, {"z", "v"}};
    return build(g, s, {x, y, z}, {{l[0], l[1]}}, {"A u v y", "D u x z", "D z x"},
                 make_graph({x, y}, {{x, y}}), "thm1",
                 "edge uv replaced by the path u-x-y-z-v; reduces to G plus the edge xy");
}

Replacement thm2(const Graph& g, const std::vector<Label>& l, const std::string& prefix) {
    // l = (a, ā, b, b̄). The strip is drawn with b̄ on row 1 and b on row 2,
    // which puts the crossing of the interior chains into the labels.
    Strip s;
    const Label x1 = prefix + "x1", x1b = prefix + "x1b", x2 = prefix + "x2", x2b = prefix + "x2b";
    s.names = {{"1", l[0]}, {"1b", l[1]}, {"2", x1}, {"2b", x1b}, {"3", x2b}, {"3b", x2}, {"4", l[3]}, {"4b", l[2]}};
    s.edges = strip_edges(2, 4);
    return build(g, s, {x1, x1b, x2, x2b}, {{l[0], l[2]}, {l[1], l[3]}},
                 {"A 1 4b 3", "A 1b 4 3b", "D 1 2 3b", "D 1b 2b 3", "D 3 2b", "D 3b 2"},
                 make_graph({x1, x1b}, {{x1, x1b}}), "thm2",
                 "P22 replaced by the twisted P24; reduces to G plus the edge x1-x1b");
}

Replacement thm3(const Graph& g, const std::vector<Label>& l, const std::string& prefix) {
    // l = (a1, a2, a3, b1, b2, b3). Strip columns 2..5 are interior columns
    // c1..c4; rows 1 and 3 trade places from c3 on, and the last column runs
    // b3, b2, b1 down the rows.
    Strip s;
    auto inner = [&](int k, int r) { return prefix + "c" + std::to_string(k) + "r" + std::to_string(r); };
    std::vector<Label> interior;
    const char* deco[] = {"", "b", "h"};
    for (int r = 1; r <= 3; ++r) {
        s.names[std::string("1") + deco[r - 1]] = l[static_cast<std::size_t>(r - 1)];
        s.names[std::string("6") + deco[r - 1]] = l[static_cast<std::size_t>(6 - r)];
        for (int k = 1; k <= 4; ++k) {
            int row = (r == 2 || k <= 2) ? r : 4 - r;
            s.names[std::to_string(k + 1) + deco[r - 1]] = inner(k, row);
            interior.push_back(inner(k, r));
        }
    }
    s.edges = strip_edges(3, 6);
    std::vector<std::string> steps = {
        // first block: 13 moves
        "A 1b 4h 2h", "A 1b 6b 5h", "D 1b 4h 2h", "A 1 3h 2b", "A 1 4b 3", "A 1 6h 4h", "D 1 4b 3", "D 1 3h 2b",
        "A 1h 3 2b", "A 1h 4b 3h", "A 1h 6 4", "D 1h 4b 3h", "D 1h 3 2b",
        // second block: 12 moves
        "A 2 4h 3b", "A 2 5b 4", "D 1 2 5h", "D 2 4h 3b", "A 2h 4 3b", "A 2h 5b 4h", "D 1h 2h 5", "D 2h 4 3b",
        "A 2b 5h 3h", "A 2b 4b 3", "A 2b 5 3", "D 1b 2b 5b",
        // third block: 7 moves
        "D 2b 4b 3", "A 3b 5b 4", "D 5b 2b", "A 3h 5 4b", "D 5 2h", "A 3 5h 4b", "D 5h 2",
        // last move
        "D 3b 2"};
    const std::vector<Label> ring = {inner(1, 1), inner(2, 1), inner(3, 3), inner(3, 2),
                                     inner(3, 1), inner(2, 3), inner(1, 3), inner(1, 2)};
    std::vector<Edge> cycle;
    for (std::size_t i = 0; i < ring.size(); ++i) cycle.push_back({ring[i], ring[(i + 1) % ring.size()]});
    return build(g, s, interior, {{l[0], l[3]}, {l[1], l[4]}, {l[2], l[5]}}, steps, make_graph(ring, cycle), "thm3",
                 "P32 replaced by P36 with crossed outer rows; reduces to G plus an 8-cycle");
}

}  // namespace

Replacement make_replacement(const Graph& g, const MarkedPatch& patch, const std::string& prefix) {
    StepCheck ok = validate_patch(g, patch);
    if (!ok) throw PreconditionError(ok.diagnostic);
    switch (patch.role) {
        case PatchRole::edge: return thm1(g, patch.labels, prefix);
        case PatchRole::p22: return thm2(g, patch.labels, prefix);
        case PatchRole::p32: return thm3(g, patch.labels, prefix);
    }
    throw InputError("unknown patch role");
}

}  // namespace indcx
