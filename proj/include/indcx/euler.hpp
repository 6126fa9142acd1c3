#pragma once

#include <cstddef>
#include <cstdint>

#include "indcx/complex.hpp"
#include "indcx/graph.hpp"

namespace indcx {

// Reduced Euler characteristic, empty face counted at dimension -1.
using ChiValue = std::int64_t;

enum class ChiMethod { enumerate, recursive };

// enumerate: signed count over all independent sets (face budget applies).
// recursive: -I(G,-1) via I(G) = I(G-v) + x I(G \ N[v]) with component
// splitting and a per-call memo keyed on the induced vertex subset.
ChiValue chi_reduced(const Graph& g, ChiMethod method = ChiMethod::recursive,
                     std::size_t budget = default_face_budget);

ChiValue chi_reduced(const SimplicialComplex& k);

// Closed form for the 4-row strip P_{4,n}, n = 6k+i:
// -2k-1, 2k, -2k-1, 2k+1, -2k-2, 2k+1 for i = 0..5.
ChiValue chi_prop_A(int n);

struct EdgeRecursion {
    bool holds = false;
    ChiValue without_edge = 0;  // χ̃(I(G-e))
    ChiValue with_edge = 0;     // χ̃(I(G))
    ChiValue remainder = 0;     // χ̃(I(G \ N[e]))
};

// Euler consequence of the edge-deletion cofiber sequence:
//   χ̃(I(G-e)) = χ̃(I(G)) + χ̃(I(G \ N[e])).
// Both endpoints must be unlooped: a loop keeps I(G-e) = I(G).
EdgeRecursion check_edge_recursion(const Graph& g, const Edge& e);

}  // namespace indcx
