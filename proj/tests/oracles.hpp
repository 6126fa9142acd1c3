#pragma once

// Slow, independent reference computations used by the tests. Nothing here
// calls into the library's enumeration, Euler or homology kernels.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "indcx/graph.hpp"

namespace oracle {

using indcx::Graph;
using indcx::Label;
using Face = std::set<Label>;

// All independent sets by scanning every subset of the unlooped vertices.
inline std::set<Face> independent_sets(const Graph& g) {
    std::vector<Label> vs;
    for (const auto& v : g.vertices())
        if (!g.has_loop(v)) vs.push_back(v);
    const std::size_t n = vs.size();
    std::set<Face> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1) && (mask >> j & 1) && g.has_edge(vs[i], vs[j])) ok = false;
        if (!ok) continue;
        Face f;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) f.insert(vs[i]);
        out.insert(f);
    }
    return out;
}

inline std::int64_t chi(const std::set<Face>& faces) {
    std::int64_t c = 0;
    for (const auto& f : faces) c += (f.size() % 2 == 1) ? 1 : -1;
    return c;
}

inline std::int64_t chi(const Graph& g) { return chi(independent_sets(g)); }

inline std::int64_t inverse(std::int64_t a, std::int64_t p) {
    for (std::int64_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    return 0;
}

// Rank over GF(p) by dense Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    std::size_t rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && ((m[piv][c] % p) + p) % p == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        const std::int64_t inv = inverse(((m[rank][c] % p) + p) % p, p);
        for (auto& x : m[rank]) x = ((x * inv) % p + p) % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const std::int64_t f = ((m[r][c] % p) + p) % p;
            if (!f) continue;
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// Reduced Betti numbers over GF(p) from dense boundary matrices; entry i is
// dimension i-1, trailing zeros trimmed.
inline std::vector<std::int64_t> betti(const std::set<Face>& faces, std::int64_t p) {
    std::map<std::size_t, std::vector<Face>> by_size;
    std::size_t top = 0;
    for (const auto& f : faces) {
        by_size[f.size()].push_back(f);
        top = std::max(top, f.size());
    }
    std::vector<std::size_t> rank(top + 2, 0);
    for (std::size_t s = 1; s <= top; ++s) {
        const auto& lower = by_size[s - 1];
        std::map<Face, std::size_t> row;
        for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
        std::vector<std::vector<std::int64_t>> m(lower.size(), std::vector<std::int64_t>(by_size[s].size(), 0));
        for (std::size_t j = 0; j < by_size[s].size(); ++j) {
            const Face& f = by_size[s][j];
            std::size_t i = 0;
            for (const auto& v : f) {
                Face g = f;
                g.erase(v);
                m[row.at(g)][j] = (i % 2 == 0) ? 1 : p - 1;
                ++i;
            }
        }
        rank[s] = dense_rank(m, p);
    }
    std::vector<std::int64_t> out;
    for (std::size_t s = 0; s <= top; ++s)
        out.push_back(static_cast<std::int64_t>(by_size[s].size() - rank[s] - rank[s + 1]));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p, double loop_p = 0.0, const std::string& prefix = "v") {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    indcx::GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u(rng) < p) b.add_edge(prefix + std::to_string(i), prefix + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (u(rng) < loop_p) b.add_loop(prefix + std::to_string(i));
    return std::move(b).build();
}

}  // namespace oracle
