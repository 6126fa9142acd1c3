#include "indcx/graph.hpp"

#include <algorithm>
#include <queue>

#include "indcx/errors.hpp"

namespace indcx {

Edge make_edge(const Label& u, const Label& v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

bool Graph::has_edge(const Label& u, const Label& v) const {
    return u != v && edges_.count(make_edge(u, v)) != 0;
}

const std::set<Label>& Graph::neighbors(const Label& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) throw InputError("unknown vertex '" + v + "'");
    return it->second;
}

GraphBuilder& GraphBuilder::add_vertex(const Label& v) {
    if (v.empty()) throw InputError("vertex labels must be non-empty");
    g_.vertices_.insert(v);
    g_.adjacency_.try_emplace(v);
    return *this;
}

GraphBuilder& GraphBuilder::add_edge(const Label& u, const Label& v) {
    if (u == v) throw InputError("edge pairs '" + u + "' with itself; use a loop");
    if (!g_.has_vertex(u)) throw InputError("edge endpoint '" + u + "' is not a vertex");
    if (!g_.has_vertex(v)) throw InputError("edge endpoint '" + v + "' is not a vertex");
    g_.edges_.insert(make_edge(u, v));
    g_.adjacency_[u].insert(v);
    g_.adjacency_[v].insert(u);
    return *this;
}

GraphBuilder& GraphBuilder::add_loop(const Label& v) {
    if (!g_.has_vertex(v)) throw InputError("loop vertex '" + v + "' is not a vertex");
    g_.loops_.insert(v);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(const Label& u, const Label& v) {
    g_.edges_.erase(make_edge(u, v));
    if (auto it = g_.adjacency_.find(u); it != g_.adjacency_.end()) it->second.erase(v);
    if (auto it = g_.adjacency_.find(v); it != g_.adjacency_.end()) it->second.erase(u);
    return *this;
}

GraphBuilder& GraphBuilder::remove_vertex(const Label& v) {
    auto it = g_.adjacency_.find(v);
    if (it == g_.adjacency_.end()) return *this;
    for (const auto& w : it->second) {
        g_.adjacency_[w].erase(v);
        g_.edges_.erase(make_edge(v, w));
    }
    g_.adjacency_.erase(it);
    g_.vertices_.erase(v);
    g_.loops_.erase(v);
    return *this;
}

Graph make_graph(const std::vector<Label>& vertices, const std::vector<Edge>& edges,
                 const std::vector<Label>& loops) {
    GraphBuilder b;
    std::set<Label> seen;
    for (const auto& v : vertices) {
        if (!seen.insert(v).second) throw InputError("duplicate vertex label '" + v + "'");
        b.add_vertex(v);
    }
    for (const auto& [u, v] : edges) b.add_edge(u, v);
    for (const auto& v : loops) b.add_loop(v);
    return std::move(b).build();
}

std::set<Label> closed_neighborhood(const Graph& g, const Label& v) {
    std::set<Label> out = g.neighbors(v);
    out.insert(v);
    return out;
}

std::set<Label> closed_neighborhood(const Graph& g, const Edge& e) {
    if (!g.has_edge(e.first, e.second))
        throw InputError("edge " + e.first + "-" + e.second + " is not in the graph");
    std::set<Label> out = closed_neighborhood(g, e.first);
    out.merge(closed_neighborhood(g, e.second));
    return out;
}

Graph delete_vertices(const Graph& g, const std::set<Label>& w) {
    GraphBuilder b(g);
    for (const auto& v : w) {
        if (!g.has_vertex(v)) throw InputError("cannot delete unknown vertex '" + v + "'");
        b.remove_vertex(v);
    }
    return std::move(b).build();
}

Graph delete_edge(const Graph& g, const Label& u, const Label& v) {
    if (!g.has_edge(u, v)) throw InputError("cannot delete absent edge " + u + "-" + v);
    return GraphBuilder(g).remove_edge(u, v).build();
}

Graph add_edge(const Graph& g, const Label& u, const Label& v) {
    if (u == v) throw InputError("cannot add an edge from '" + u + "' to itself");
    if (g.has_edge(u, v)) throw InputError("edge " + u + "-" + v + " already present");
    return GraphBuilder(g).add_edge(u, v).build();
}

Graph disjoint_union(const Graph& g, const Graph& h, LabelClash clash) {
    std::map<Label, Label> rename;
    std::set<Label> taken = g.vertices();
    for (const auto& v : h.vertices()) {
        Label name = v;
        if (taken.count(name)) {
            if (clash == LabelClash::reject)
                throw InputError("disjoint union label clash on '" + v + "'");
            while (taken.count(name) || h.has_vertex(name)) name += "'";
        }
        taken.insert(name);
        rename[v] = name;
    }
    GraphBuilder b(g);
    for (const auto& v : h.vertices()) b.add_vertex(rename[v]);
    for (const auto& [u, v] : h.edges()) b.add_edge(rename[u], rename[v]);
    for (const auto& v : h.loops()) b.add_loop(rename[v]);
    return std::move(b).build();
}

Graph edit(const Graph& g, const EditAction& action) {
    struct Visitor {
        const Graph& g;
        Graph operator()(const DeleteVertices& a) const { return delete_vertices(g, a.vertices); }
        Graph operator()(const DeleteEdge& a) const { return delete_edge(g, a.u, a.v); }
        Graph operator()(const AddEdge& a) const { return add_edge(g, a.u, a.v); }
        Graph operator()(const DisjointUnion& a) const { return disjoint_union(g, a.other, a.clash); }
    };
    return std::visit(Visitor{g}, action);
}

Graph induced_subgraph(const Graph& g, const std::set<Label>& keep) {
    std::set<Label> drop;
    for (const auto& v : g.vertices())
        if (!keep.count(v)) drop.insert(v);
    for (const auto& v : keep)
        if (!g.has_vertex(v)) throw InputError("induced subgraph on unknown vertex '" + v + "'");
    return delete_vertices(g, drop);
}

std::vector<std::set<Label>> connected_components(const Graph& g) {
    std::vector<std::set<Label>> out;
    std::set<Label> seen;
    for (const auto& s : g.vertices()) {
        if (seen.count(s)) continue;
        std::set<Label> comp;
        std::queue<Label> q;
        q.push(s);
        seen.insert(s);
        while (!q.empty()) {
            Label v = q.front();
            q.pop();
            comp.insert(v);
            for (const auto& w : g.neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::size_t> IndexedGraph::index_of(const Label& v) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
}

std::size_t IndexedGraph::require(const Label& v) const {
    auto i = index_of(v);
    if (!i) throw InputError("unknown vertex '" + v + "'");
    return *i;
}

IndexedGraph index_graph(const Graph& g) {
    if (g.num_vertices() > VertexSet::capacity)
        throw InputError("graph has " + std::to_string(g.num_vertices()) +
                         " vertices; kernels support at most " +
                         std::to_string(VertexSet::capacity));
    IndexedGraph ig;
    ig.labels.assign(g.vertices().begin(), g.vertices().end());
    ig.adjacency.resize(ig.labels.size());
    for (const auto& [u, v] : g.edges()) {
        std::size_t a = ig.require(u), b = ig.require(v);
        ig.adjacency[a].set(b);
        ig.adjacency[b].set(a);
    }
    for (const auto& v : g.loops()) ig.loops.set(ig.require(v));
    return ig;
}

}  // namespace indcx
