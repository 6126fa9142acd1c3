#include "indcx/op_step.hpp"

#include "indcx/errors.hpp"

namespace indcx {

std::string to_string(OpKind k) {
    switch (k) {
        case OpKind::del_vertex: return "del_vertex";
        case OpKind::del_edge: return "del_edge";
        case OpKind::add_edge: return "add_edge";
    }
    return "?";
}

OpKind parse_op_kind(const std::string& s) {
    for (OpKind k : {OpKind::del_vertex, OpKind::del_edge, OpKind::add_edge})
        if (to_string(k) == s) return k;
    throw InputError("unknown step op '" + s + "'");
}

std::string OpStep::to_string() const {
    switch (kind) {
        case OpKind::del_vertex: return "Del(" + target + "," + witness + ")";
        case OpKind::del_edge: return "Del(" + target + ":" + target2 + "," + witness + ")";
        case OpKind::add_edge: return "Add(" + target + ":" + target2 + "," + witness + ")";
    }
    return "?";
}

namespace {

StepCheck fail(const OpStep& s, std::string why) {
    return {false, s.to_string() + ": " + std::move(why)};
}

}  // namespace

StepCheck check_step(const Graph& g, const OpStep& step) {
    const Label& u = step.witness;
    if (!g.has_vertex(u)) return fail(step, "witness '" + u + "' is not a vertex");
    if (!g.has_vertex(step.target)) return fail(step, "target '" + step.target + "' is not a vertex");

    std::set<Label> removed;
    if (step.kind == OpKind::del_vertex) {
        if (u == step.target) return fail(step, "witness equals the deleted vertex");
        removed = closed_neighborhood(g, step.target);
    } else {
        const Label& v = step.target;
        const Label& w = step.target2;
        if (!g.has_vertex(w)) return fail(step, "target '" + w + "' is not a vertex");
        if (v == w) return fail(step, "edge endpoints coincide");
        if (u == v || u == w) return fail(step, "witness is an endpoint of the target edge");
        bool present = g.has_edge(v, w);
        if (step.kind == OpKind::del_edge && !present) return fail(step, "edge is not in the graph");
        if (step.kind == OpKind::add_edge && present) return fail(step, "edge is already in the graph");
        removed = closed_neighborhood(g, v);
        removed.merge(closed_neighborhood(g, w));
    }
    if (removed.count(u)) return fail(step, "witness '" + u + "' lies in the removed closed neighborhood");
    if (g.has_loop(u)) return fail(step, "witness '" + u + "' carries a loop");
    for (const auto& x : g.neighbors(u))
        if (!removed.count(x)) return fail(step, "witness '" + u + "' keeps neighbor '" + x + "'");
    return {true, {}};
}

Graph apply_step(const Graph& g, const OpStep& step) {
    if (auto c = check_step(g, step); !c) throw PreconditionError(c.diagnostic);
    switch (step.kind) {
        case OpKind::del_vertex: return delete_vertices(g, {step.target});
        case OpKind::del_edge: return delete_edge(g, step.target, step.target2);
        case OpKind::add_edge: return add_edge(g, step.target, step.target2);
    }
    throw InputError("unhandled op kind");
}

}  // namespace indcx
