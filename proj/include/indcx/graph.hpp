#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "indcx/vertex_set.hpp"

namespace indcx {

using Label = std::string;

// Unordered pair stored with first < second.
using Edge = std::pair<Label, Label>;

Edge make_edge(const Label& u, const Label& v);

// Finite undirected graph on string labels. Self-adjacency is kept apart from
// the edge set as a loop; a looped vertex is never part of an independent set.
class Graph {
public:
    Graph() = default;

    const std::set<Label>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    const std::set<Label>& loops() const { return loops_; }

    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    bool has_vertex(const Label& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const Label& u, const Label& v) const;
    bool has_loop(const Label& v) const { return loops_.count(v) != 0; }

    // Open neighborhood; never contains v itself (loops are reported by has_loop).
    const std::set<Label>& neighbors(const Label& v) const;
    std::size_t degree(const Label& v) const { return neighbors(v).size(); }

    bool operator==(const Graph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_ && loops_ == o.loops_;
    }

private:
    friend class GraphBuilder;
    std::set<Label> vertices_;
    std::set<Edge> edges_;
    std::set<Label> loops_;
    std::map<Label, std::set<Label>> adjacency_;
};

// Incremental construction with validation. Used by every generator and edit.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(Graph start) : g_(std::move(start)) {}

    GraphBuilder& add_vertex(const Label& v);
    // Tolerates repeats and either orientation. Throws InputError for u == v
    // or unknown endpoints.
    GraphBuilder& add_edge(const Label& u, const Label& v);
    GraphBuilder& add_loop(const Label& v);
    GraphBuilder& remove_edge(const Label& u, const Label& v);
    GraphBuilder& remove_vertex(const Label& v);

    const Graph& peek() const { return g_; }
    Graph build() && { return std::move(g_); }
    Graph build() const& { return g_; }

private:
    Graph g_;
};

Graph make_graph(const std::vector<Label>& vertices, const std::vector<Edge>& edges,
                 const std::vector<Label>& loops = {});

// N[v] = {v} ∪ neighbors(v).
std::set<Label> closed_neighborhood(const Graph& g, const Label& v);
// N[uv] = N[u] ∪ N[v]; the edge must be present.
std::set<Label> closed_neighborhood(const Graph& g, const Edge& e);

Graph delete_vertices(const Graph& g, const std::set<Label>& w);
Graph delete_edge(const Graph& g, const Label& u, const Label& v);
Graph add_edge(const Graph& g, const Label& u, const Label& v);

enum class LabelClash { reject, suffix };

// Labels of h that collide with g get "'" appended until unique when
// clash == suffix.
Graph disjoint_union(const Graph& g, const Graph& h, LabelClash clash = LabelClash::reject);

struct DeleteVertices { std::set<Label> vertices; };
struct DeleteEdge { Label u, v; };
struct AddEdge { Label u, v; };
struct DisjointUnion { Graph other; LabelClash clash = LabelClash::reject; };
using EditAction = std::variant<DeleteVertices, DeleteEdge, AddEdge, DisjointUnion>;

Graph edit(const Graph& g, const EditAction& action);

Graph induced_subgraph(const Graph& g, const std::set<Label>& keep);

// Connected components as vertex sets, ordered by smallest label.
std::vector<std::set<Label>> connected_components(const Graph& g);

// ---------------------------------------------------------------------------
// Grid families

enum class Family { P, C, M, CH, MH1, X4, Y4 };

struct FamilySpec {
    Family family = Family::P;
    int m = 1;
    int n = 1;

    bool operator==(const FamilySpec&) const = default;
};

std::string to_string(Family f);
Family parse_family(const std::string& tag);
std::string to_string(const FamilySpec& spec);

// "r<row>c<col>"
Label grid_label(int row, int col);

// Throws InputError for invalid dimensions.
void validate(const FamilySpec& spec);

Graph generate_family(const FamilySpec& spec);

inline Graph grid_P(int m, int n) { return generate_family({Family::P, m, n}); }
inline Graph grid_C(int m, int n) { return generate_family({Family::C, m, n}); }
inline Graph grid_M(int m, int n) { return generate_family({Family::M, m, n}); }

// ---------------------------------------------------------------------------
// Comparison

enum class MatchMode { labeled, isomorphic };

struct GraphMatch {
    bool equal = false;
    bool refused = false;  // isomorphic search declined: above vertex bound
    std::string reason;
    std::map<Label, Label> bijection;  // g label -> h label

    explicit operator bool() const { return equal; }
};

GraphMatch same_graph(const Graph& g, const Graph& h, MatchMode mode,
                      std::size_t vertex_bound = 40);

// ---------------------------------------------------------------------------
// Index form used by the enumeration, Euler and homology kernels.

struct IndexedGraph {
    std::vector<Label> labels;  // sorted; index = position
    std::vector<VertexSet> adjacency;
    VertexSet loops;

    std::size_t size() const { return labels.size(); }
    VertexSet all() const { return VertexSet::prefix(labels.size()); }
    std::optional<std::size_t> index_of(const Label& v) const;
    std::size_t require(const Label& v) const;
};

// Throws InputError above VertexSet::capacity vertices.
IndexedGraph index_graph(const Graph& g);

}  // namespace indcx
