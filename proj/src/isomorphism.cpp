#include <algorithm>
#include <numeric>

#include "indcx/graph.hpp"

namespace indcx {

namespace {

struct Signature {
    int degree = 0;
    bool loop = false;
    std::vector<int> neighbor_degrees;  // sorted

    bool operator==(const Signature&) const = default;
};

std::vector<Signature> signatures(const IndexedGraph& g) {
    std::vector<Signature> out(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) {
        out[v].degree = g.adjacency[v].count();
        out[v].loop = g.loops.test(v);
    }
    for (std::size_t v = 0; v < g.size(); ++v) {
        g.adjacency[v].for_each([&](std::size_t w) { out[v].neighbor_degrees.push_back(out[w].degree); });
        std::sort(out[v].neighbor_degrees.begin(), out[v].neighbor_degrees.end());
    }
    return out;
}

// Vertices of g in an order where each vertex (after the first of its
// component) has an already placed neighbor.
std::vector<std::size_t> search_order(const IndexedGraph& g) {
    std::vector<std::size_t> order;
    VertexSet placed;
    while (order.size() < g.size()) {
        std::size_t start = g.size();
        for (std::size_t v = 0; v < g.size(); ++v)
            if (!placed.test(v) && (start == g.size() || g.adjacency[v].count() > g.adjacency[start].count()))
                start = v;
        std::size_t head = order.size();
        order.push_back(start);
        placed.set(start);
        while (head < order.size()) {
            // most-constrained next: unplaced vertex with most placed neighbors
            std::size_t best = g.size();
            int best_links = -1;
            for (std::size_t i = head; i < order.size(); ++i) {
                VertexSet cand = g.adjacency[order[i]] - placed;
                cand.for_each([&](std::size_t w) {
                    int links = (g.adjacency[w] & placed).count();
                    if (links > best_links) {
                        best_links = links;
                        best = w;
                    }
                });
            }
            if (best == g.size()) break;
            order.push_back(best);
            placed.set(best);
        }
    }
    return order;
}

class Matcher {
public:
    Matcher(const IndexedGraph& g, const IndexedGraph& h)
        : g_(g), h_(h), sg_(signatures(g)), sh_(signatures(h)), order_(search_order(g)),
          map_(g.size(), h.size()) {}

    bool run() { return extend(0); }
    const std::vector<std::size_t>& mapping() const { return map_; }

private:
    bool extend(std::size_t depth) {
        if (depth == order_.size()) return true;
        std::size_t x = order_[depth];
        for (std::size_t y = 0; y < h_.size(); ++y) {
            if (used_.test(y) || !(sg_[x] == sh_[y])) continue;
            if (!consistent(x, y)) continue;
            map_[x] = y;
            used_.set(y);
            mapped_.set(x);
            if (extend(depth + 1)) return true;
            used_.reset(y);
            mapped_.reset(x);
        }
        map_[x] = h_.size();
        return false;
    }

    bool consistent(std::size_t x, std::size_t y) const {
        bool ok = true;
        mapped_.for_each([&](std::size_t z) {
            if (g_.adjacency[x].test(z) != h_.adjacency[y].test(map_[z])) ok = false;
        });
        return ok;
    }

    const IndexedGraph& g_;
    const IndexedGraph& h_;
    std::vector<Signature> sg_, sh_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> map_;
    VertexSet used_, mapped_;
};

std::vector<int> degree_sequence(const std::vector<Signature>& s) {
    std::vector<int> d;
    for (const auto& x : s) d.push_back(x.degree * 2 + (x.loop ? 1 : 0));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

GraphMatch same_graph(const Graph& g, const Graph& h, MatchMode mode, std::size_t vertex_bound) {
    GraphMatch out;
    if (mode == MatchMode::labeled) {
        if (g.vertices() != h.vertices())
            out.reason = "vertex sets differ";
        else if (g.edges() != h.edges())
            out.reason = "edge sets differ";
        else if (g.loops() != h.loops())
            out.reason = "loop sets differ";
        else {
            out.equal = true;
            for (const auto& v : g.vertices()) out.bijection[v] = v;
        }
        return out;
    }
    if (g.num_vertices() != h.num_vertices()) {
        out.reason = "vertex counts differ";
        return out;
    }
    if (g.num_edges() != h.num_edges()) {
        out.reason = "edge counts differ";
        return out;
    }
    if (g.loops().size() != h.loops().size()) {
        out.reason = "loop counts differ";
        return out;
    }
    if (g.num_vertices() > vertex_bound) {
        out.refused = true;
        out.reason = "isomorphism search refused above " + std::to_string(vertex_bound) + " vertices";
        return out;
    }
    IndexedGraph ig = index_graph(g), ih = index_graph(h);
    if (degree_sequence(signatures(ig)) != degree_sequence(signatures(ih))) {
        out.reason = "degree sequences differ";
        return out;
    }
    Matcher matcher(ig, ih);
    if (!matcher.run()) {
        out.reason = "no isomorphism exists";
        return out;
    }
    out.equal = true;
    for (std::size_t v = 0; v < ig.size(); ++v) out.bijection[ig.labels[v]] = ih.labels[matcher.mapping()[v]];
    return out;
}

}  // namespace indcx
