#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indcx/graph.hpp"
#include "indcx/vertex_set.hpp"

namespace indcx {

// Acyclic matching on I(G) from a binary decomposition of the face poset.
// A node is the family of independent sets containing `in` and avoiding
// `out`. A node splits on a vertex v (faces without v, faces with v); it is a
// leaf when every undecided vertex is gone (single critical face `in`) or when
// some undecided vertex has no undecided neighbor, in which case toggling it
// matches the whole family. The node order makes the union of leaf matchings
// acyclic.
class MatchingTree {
public:
    explicit MatchingTree(IndexedGraph g);

    const IndexedGraph& graph() const { return g_; }

    // Critical faces; throws BudgetExceeded past node_budget tree nodes.
    std::vector<VertexSet> critical_cells(std::size_t node_budget, std::size_t* nodes = nullptr) const;

    // Leaf of an independent set: branch choices from the root ('1' = the
    // branch containing the split vertex) and its partner, none if critical.
    // Leaves ordered by path make the face-to-leaf map order preserving.
    struct Location {
        std::string path;
        std::optional<VertexSet> partner;
    };
    Location locate(const VertexSet& face) const;

    // Matched partner of an independent set; nullopt when it is critical.
    std::optional<VertexSet> partner(const VertexSet& face) const { return locate(face).partner; }

private:
    struct Node {
        VertexSet in, out;
    };
    enum class Leaf { none, critical, free };
    struct Decision {
        Leaf leaf = Leaf::none;
        std::size_t vertex = 0;  // free vertex or split vertex
    };

    Node normalized(Node n) const;
    Decision decide(const Node& n) const;

    IndexedGraph g_;
};

}  // namespace indcx
