#include <functional>

#include "indcx/errors.hpp"
#include "indcx/graph.hpp"

namespace indcx {

std::string to_string(Family f) {
    switch (f) {
        case Family::P: return "P";
        case Family::C: return "C";
        case Family::M: return "M";
        case Family::CH: return "CH";
        case Family::MH1: return "MH1";
        case Family::X4: return "X4";
        case Family::Y4: return "Y4";
    }
    return "?";
}

Family parse_family(const std::string& tag) {
    for (Family f : {Family::P, Family::C, Family::M, Family::CH, Family::MH1, Family::X4, Family::Y4})
        if (to_string(f) == tag) return f;
    throw InputError("unknown graph family '" + tag + "'");
}

namespace {

bool takes_only_n(Family f) { return f == Family::MH1 || f == Family::X4 || f == Family::Y4; }

}  // namespace

std::string to_string(const FamilySpec& spec) {
    if (takes_only_n(spec.family))
        return to_string(spec.family) + "(" + std::to_string(spec.n) + ")";
    return to_string(spec.family) + "(" + std::to_string(spec.m) + "," + std::to_string(spec.n) + ")";
}

Label grid_label(int row, int col) {
    return "r" + std::to_string(row) + "c" + std::to_string(col);
}

void validate(const FamilySpec& spec) {
    if (spec.n < 1) throw InputError("family " + to_string(spec.family) + " needs n >= 1");
    if (!takes_only_n(spec.family) && spec.m < 1)
        throw InputError("family " + to_string(spec.family) + " needs m >= 1");
    // Generators index columns up to n+1 (C, M) or 2n+1 (CH, MH1) in labels; keep them sane.
    if (spec.n > 100000 || spec.m > 100000) throw InputError("family dimensions too large");
}

namespace {

using CellMap = std::function<std::pair<int, int>(int, int)>;

// Grid with rows 1..m and columns 1..cols, every cell renamed through `cell`.
// Coinciding endpoints become loops, parallel edges collapse.
Graph quotient_grid(int m, int cols, const CellMap& cell) {
    GraphBuilder b;
    auto label = [&](int r, int c) {
        auto [rr, cc] = cell(r, c);
        return grid_label(rr, cc);
    };
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= cols; ++c) b.add_vertex(label(r, c));
    auto join = [&](const Label& u, const Label& v) {
        if (u == v)
            b.add_loop(u);
        else
            b.add_edge(u, v);
    };
    for (int r = 1; r <= m; ++r)
        for (int c = 1; c <= cols; ++c) {
            if (c + 1 <= cols) join(label(r, c), label(r, c + 1));
            if (r + 1 <= m) join(label(r, c), label(r + 1, c));
        }
    return std::move(b).build();
}

Graph cylinder(int m, int n) {
    return quotient_grid(m, n + 1, [n](int r, int c) {
        return c == n + 1 ? std::pair{r, 1} : std::pair{r, c};
    });
}

Graph moebius(int m, int n) {
    return quotient_grid(m, n + 1, [m, n](int r, int c) {
        return c == n + 1 ? std::pair{m - r + 1, 1} : std::pair{r, c};
    });
}

}  // namespace

Graph generate_family(const FamilySpec& spec) {
    validate(spec);
    const int m = spec.m, n = spec.n;
    switch (spec.family) {
        case Family::P:
            return quotient_grid(m, n, [](int r, int c) { return std::pair{r, c}; });
        case Family::C:
            return cylinder(m, n);
        case Family::M:
            return moebius(m, n);
        case Family::CH: {
            GraphBuilder b(cylinder(m + 1, 2 * n));
            for (int i = 2; i <= m + 1; ++i)
                for (int j = 1; j <= 2 * n; ++j)
                    if ((i - j) % 2 == 0) b.remove_edge(grid_label(i, j), grid_label(i - 1, j));
            return std::move(b).build();
        }
        case Family::MH1: {
            GraphBuilder b(moebius(2, 2 * n));
            for (int j = 1; j <= 2 * n; j += 2) b.remove_edge(grid_label(1, j), grid_label(2, j));
            return std::move(b).build();
        }
        case Family::X4:
            return GraphBuilder(quotient_grid(4, n, [](int r, int c) { return std::pair{r, c}; }))
                .add_edge(grid_label(1, 1), grid_label(4, 1))
                .build();
        case Family::Y4:
            return GraphBuilder(quotient_grid(4, n, [](int r, int c) { return std::pair{r, c}; }))
                .remove_vertex(grid_label(1, 1))
                .remove_vertex(grid_label(4, 1))
                .build();
    }
    throw InputError("unhandled family");
}

}  // namespace indcx
