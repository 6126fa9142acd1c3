#pragma once

#include <string>

#include "indcx/graph.hpp"

namespace indcx {

enum class OpKind { del_vertex, del_edge, add_edge };

// One graph move. For del_vertex only `target` is used; for the edge moves
// (target, target2) is the pair. The witness is the vertex that must be
// isolated once the relevant closed neighborhood is removed.
struct OpStep {
    OpKind kind = OpKind::del_vertex;
    Label target;
    Label target2;
    Label witness;

    static OpStep del_vertex(Label v, Label u) { return {OpKind::del_vertex, std::move(v), {}, std::move(u)}; }
    static OpStep del_edge(Label v, Label w, Label u) {
        return {OpKind::del_edge, std::move(v), std::move(w), std::move(u)};
    }
    static OpStep add_edge(Label v, Label w, Label u) {
        return {OpKind::add_edge, std::move(v), std::move(w), std::move(u)};
    }

    bool is_edge_move() const { return kind != OpKind::del_vertex; }
    // Del(v,u) / Del(vw,u) / Add(vw,u), labels separated by ':' inside the pair.
    std::string to_string() const;

    bool operator==(const OpStep&) const = default;
};

std::string to_string(OpKind k);
OpKind parse_op_kind(const std::string& s);

struct StepCheck {
    bool ok = false;
    std::string diagnostic;

    explicit operator bool() const { return ok; }
};

// Del(v,u):  u isolated in G \ N[v].
// Del(vw,u): vw in E(G) and u isolated in G \ N[vw].
// Add(vw,u): vw not in E(G) and u isolated in G \ (N[v] ∪ N[w]).
// "Isolated" means u survives the deletion with no incident edge and no loop.
StepCheck check_step(const Graph& g, const OpStep& step);

// Throws PreconditionError carrying the diagnostic when check_step fails.
Graph apply_step(const Graph& g, const OpStep& step);

}  // namespace indcx
