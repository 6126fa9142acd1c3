#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "indcx/complex.hpp"
#include "indcx/graph.hpp"
#include "indcx/shape.hpp"

namespace indcx {

bool is_prime(int p);

// Reduced Betti numbers over GF(p); values[i] is the dimension i-1 entry.
struct BettiProfile {
    int prime = 2;
    std::vector<std::int64_t> values;

    std::int64_t at(int dim) const;
    // Σ (-1)^i β̃_i, which must equal χ̃.
    std::int64_t euler() const;
    // Nonzero entries as "dim:value", space separated; "zero" when all vanish.
    std::string to_string() const;
    // Profile of the k-fold suspension.
    BettiProfile shifted(int k) const;
    bool same_values(const BettiProfile& o) const;
    void trim();
};

// Sparse column over GF(p): (row, coefficient) sorted by row.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

std::size_t rank_mod_p(std::vector<SparseColumn> columns, int p);

// Augmented simplicial chain complex, oriented by the universe order.
BettiProfile reduced_betti(const SimplicialComplex& k, int p = 2);

BettiProfile betti_of_shape(const WedgeShape& s, int p = 2);

// ---------------------------------------------------------------------------
// Discrete Morse route for complexes too large to list.

inline constexpr std::size_t default_morse_budget = 20'000'000;

struct MorseSummary {
    std::size_t tree_nodes = 0;
    std::vector<std::size_t> critical;  // per dimension, starting at -1
};

struct MorseBetti {
    BettiProfile profile;
    MorseSummary summary;
};

// Reduced Betti numbers of I(G) through the acyclic matching of the matching
// tree: Morse complex on critical cells, differential by gradient-path flow.
// Throws BudgetExceeded when the tree exceeds `node_budget` nodes.
MorseBetti morse_betti(const Graph& g, int p = 2, std::size_t node_budget = default_morse_budget);

enum class BettiRoute { explicit_complex, morse_matching };

std::string to_string(BettiRoute r);

struct GraphBetti {
    BettiProfile profile;
    BettiRoute route = BettiRoute::explicit_complex;
};

// Explicit complex when it fits the face budget, matching route otherwise;
// nullopt when both budgets are exceeded.
std::optional<GraphBetti> graph_betti(const Graph& g, int p, std::size_t face_budget = default_face_budget,
                                      std::size_t morse_budget = default_morse_budget);

}  // namespace indcx
