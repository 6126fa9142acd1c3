#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "indcx/graph.hpp"
#include "indcx/op_step.hpp"
#include "indcx/vertex_set.hpp"

namespace indcx {

inline constexpr std::size_t default_face_budget = 200000;

using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

// Explicit simplicial complex. Faces are bit sets over the sorted vertex
// universe; the empty face is always present.
class SimplicialComplex {
public:
    SimplicialComplex();  // {∅} on the empty universe
    SimplicialComplex(std::vector<Label> universe, FaceSet faces);

    const std::vector<Label>& universe() const { return universe_; }
    const FaceSet& faces() const { return faces_; }
    std::size_t num_faces() const { return faces_.size(); }
    bool contains(const VertexSet& face) const { return faces_.count(face) != 0; }
    int dimension() const;

    std::vector<Label> labels_of(const VertexSet& face) const;
    VertexSet face_of(const std::vector<Label>& labels) const;

    // All faces sorted by dimension, then by label list.
    std::vector<VertexSet> sorted_faces() const;

private:
    std::vector<Label> universe_;
    FaceSet faces_;
};

// Faces = independent sets; looped vertices are dropped from the universe.
// Throws BudgetExceeded past `budget` faces.
SimplicialComplex independence_complex(const Graph& g, std::size_t budget = default_face_budget);

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l,
                       LabelClash clash = LabelClash::reject);

// Join of n+1 two-point complexes; diamond(-1) = {∅}. Vertices "s<i>+", "s<i>-".
SimplicialComplex diamond(int n);

// Face counts by dimension starting at -1.
std::vector<std::size_t> f_vector(const SimplicialComplex& k);

// Exact equality of faces as label sets.
bool complexes_equal(const SimplicialComplex& k, const SimplicialComplex& l);

bool is_downward_closed(const SimplicialComplex& k);

// One line per face, labels comma separated, "()" for the empty face.
std::vector<std::string> dump_faces(const SimplicialComplex& k);

// ---------------------------------------------------------------------------
// Face-level check of one graph move.

struct CollapseReport {
    bool ok = false;
    bool expansion = false;  // del_edge: I(G) expands into I(G-e); checked as the reverse collapse
    std::string message;
    std::size_t source_faces = 0;
    std::size_t target_faces = 0;
    std::size_t pairs = 0;
    SimplicialComplex residual;
};

// Builds the larger complex, forms the witness toggle matching on the faces
// that must disappear, executes it as elementary collapses (decreasing
// dimension, freeness checked at every removal) and compares the residual with
// the complex of the smaller side. Throws PreconditionError when check_step
// fails and BudgetExceeded past the face budget.
CollapseReport collapse_oracle(const Graph& g, const OpStep& step,
                               std::size_t budget = default_face_budget);

}  // namespace indcx
