#include "indcx/euler.hpp"

#include <unordered_map>

#include "indcx/errors.hpp"

namespace indcx {

namespace {

ChiValue checked_add(ChiValue a, ChiValue b) {
    ChiValue r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Euler characteristic overflow");
    return r;
}

ChiValue checked_mul(ChiValue a, ChiValue b) {
    ChiValue r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Euler characteristic overflow");
    return r;
}

ChiValue enumerate_chi(const IndexedGraph& g, std::size_t budget) {
    ChiValue chi = 0;
    std::size_t faces = 0;
    struct Frame { int size; VertexSet allowed; };
    std::vector<Frame> stack{{0, g.all() - g.loops}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        if (++faces > budget)
            throw BudgetExceeded("enumeration exceeds face budget of " + std::to_string(budget));
        chi += (fr.size % 2 == 1) ? 1 : -1;  // (-1)^(size-1)
        VertexSet allowed = fr.allowed;
        while (!allowed.empty()) {
            std::size_t v = allowed.first();
            allowed.reset(v);
            stack.push_back({fr.size + 1, allowed - g.adjacency[v]});
        }
    }
    return chi;
}

// Evaluates I(G[S], -1) = sum over independent sets of (-1)^|σ|.
class IndependenceAtMinusOne {
public:
    explicit IndependenceAtMinusOne(const IndexedGraph& g) : g_(g) {}

    ChiValue eval(VertexSet s) {
        s -= g_.loops;
        if (s.empty()) return 1;
        if (auto it = memo_.find(s); it != memo_.end()) return it->second;
        VertexSet comp = component_of(s, s.first());
        ChiValue value;
        if (comp == s) {
            value = eval_connected(s);
        } else {
            value = checked_mul(eval(comp), eval(s - comp));
        }
        memo_.emplace(s, value);
        return value;
    }

private:
    ChiValue eval_connected(VertexSet s) {
        std::size_t pivot = s.first();
        int best = -1;
        s.for_each([&](std::size_t v) {
            int d = (g_.adjacency[v] & s).count();
            if (d > best) {
                best = d;
                pivot = v;
            }
        });
        VertexSet without = s;
        without.reset(pivot);
        VertexSet closed = g_.adjacency[pivot];
        closed.set(pivot);
        return checked_add(eval(without), -eval(s - closed));
    }

    VertexSet component_of(VertexSet s, std::size_t start) const {
        VertexSet comp = VertexSet::singleton(start);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](std::size_t v) { next |= g_.adjacency[v]; });
            next = (next & s) - comp;
            comp |= next;
            frontier = next;
        }
        return comp;
    }

    const IndexedGraph& g_;
    std::unordered_map<VertexSet, ChiValue, VertexSetHash> memo_;
};

}  // namespace

ChiValue chi_reduced(const Graph& g, ChiMethod method, std::size_t budget) {
    IndexedGraph ig = index_graph(g);
    if (method == ChiMethod::enumerate) return enumerate_chi(ig, budget);
    IndependenceAtMinusOne poly(ig);
    return -poly.eval(ig.all());
}

ChiValue chi_reduced(const SimplicialComplex& k) {
    ChiValue chi = 0;
    for (const auto& f : k.faces()) chi += (f.count() % 2 == 1) ? 1 : -1;
    return chi;
}

ChiValue chi_prop_A(int n) {
    if (n < 1) throw InputError("chi_prop_A needs n >= 1");
    const ChiValue k = n / 6;
    switch (n % 6) {
        case 0:
        case 2: return -2 * k - 1;
        case 1: return 2 * k;
        case 3:
        case 5: return 2 * k + 1;
        default: return -2 * k - 2;
    }
}

EdgeRecursion check_edge_recursion(const Graph& g, const Edge& e) {
    if (!g.has_edge(e.first, e.second))
        throw InputError("edge " + e.first + "-" + e.second + " is not in the graph");
    if (g.has_loop(e.first) || g.has_loop(e.second))
        throw InputError("edge recursion needs unlooped endpoints; " + e.first + "-" + e.second + " touches a loop");
    EdgeRecursion r;
    r.with_edge = chi_reduced(g);
    r.without_edge = chi_reduced(delete_edge(g, e.first, e.second));
    r.remainder = chi_reduced(delete_vertices(g, closed_neighborhood(g, e)));
    r.holds = r.without_edge == r.with_edge + r.remainder;
    return r;
}

}  // namespace indcx
