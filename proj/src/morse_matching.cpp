#include "indcx/morse_matching.hpp"

#include <map>
#include <unordered_map>

#include "indcx/errors.hpp"
#include "indcx/homology.hpp"

namespace indcx {

MatchingTree::MatchingTree(IndexedGraph g) : g_(std::move(g)) {}

MatchingTree::Node MatchingTree::normalized(Node n) const {
    n.out |= g_.loops;
    n.in.for_each([&](std::size_t v) { n.out |= g_.adjacency[v]; });
    return n;
}

MatchingTree::Decision MatchingTree::decide(const Node& n) const {
    const VertexSet undecided = g_.all() - n.in - n.out;
    if (undecided.empty()) return {Leaf::critical, 0};
    std::size_t pivot = VertexSet::capacity;
    int best = 0;
    std::optional<std::size_t> free;
    undecided.for_each([&](std::size_t v) {
        if (free) return;
        int d = (g_.adjacency[v] & undecided).count();
        if (d == 0) {
            free = v;
        } else if (pivot == VertexSet::capacity || d < best) {
            pivot = v;
            best = d;
        }
    });
    if (free) return {Leaf::free, *free};
    return {Leaf::none, (g_.adjacency[pivot] & undecided).first()};
}

std::vector<VertexSet> MatchingTree::critical_cells(std::size_t node_budget, std::size_t* nodes) const {
    std::vector<VertexSet> out;
    std::vector<Node> stack{normalized(Node{})};
    std::size_t count = 0;
    while (!stack.empty()) {
        Node n = stack.back();
        stack.pop_back();
        if (++count > node_budget)
            throw BudgetExceeded("matching tree exceeds node budget of " + std::to_string(node_budget));
        Decision d = decide(n);
        if (d.leaf == Leaf::critical) {
            out.push_back(n.in);
        } else if (d.leaf == Leaf::none) {
            Node with = n, without = n;
            with.in.set(d.vertex);
            without.out.set(d.vertex);
            stack.push_back(normalized(with));
            stack.push_back(without);
        }
    }
    if (nodes) *nodes = count;
    return out;
}

MatchingTree::Location MatchingTree::locate(const VertexSet& face) const {
    Location loc;
    Node n = normalized(Node{});
    for (;;) {
        Decision d = decide(n);
        if (d.leaf == Leaf::critical) return loc;
        if (d.leaf == Leaf::free) {
            VertexSet p = face;
            p.flip(d.vertex);
            loc.partner = p;
            return loc;
        }
        if (face.test(d.vertex)) {
            loc.path += '1';
            n.in.set(d.vertex);
            n = normalized(n);
        } else {
            loc.path += '0';
            n.out.set(d.vertex);
        }
    }
}

namespace {

using Coef = std::uint64_t;

// Incidence [τ : τ - w] = (-1)^(position of w in τ).
Coef incidence(const VertexSet& tau, std::size_t w, Coef p) {
    return tau.rank(w) % 2 == 0 ? 1 : p - 1;
}

// Morse boundary of one critical cell: the ordinary boundary pushed along
// gradient paths. Faces are consumed in decreasing leaf order; a face matched
// upward is replaced by the rest of its partner's boundary, which lands in
// strictly smaller leaves or on faces matched downward (these carry no flow).
class GradientFlow {
public:
    GradientFlow(const MatchingTree& tree, Coef p) : tree_(tree), p_(p) {}

    std::map<VertexSet, Coef> boundary(const VertexSet& cell) {
        std::map<Key, Coef> chain;
        auto add = [&](const VertexSet& f, Coef c) {
            if (c % p_ == 0) return;
            Key key{location(f).path, f};
            Coef& slot = chain[key];
            slot = (slot + c) % p_;
            if (slot == 0) chain.erase(key);
        };
        cell.for_each([&](std::size_t w) {
            VertexSet f = cell;
            f.reset(w);
            add(f, incidence(cell, w, p_));
        });
        std::map<VertexSet, Coef> out;
        while (!chain.empty()) {
            auto it = std::prev(chain.end());
            const VertexSet alpha = it->first.second;
            const Coef c = it->second;
            chain.erase(it);
            const auto& partner = location(alpha).partner;
            if (!partner) {
                out[alpha] = c;
                continue;
            }
            if (partner->count() < alpha.count()) continue;
            const VertexSet tau = *partner;
            const std::size_t u = (tau - alpha).first();
            // chain -= c * [τ:α]^{-1} ∂τ, and [τ:α]^{-1} = [τ:α].
            const Coef factor = c * incidence(tau, u, p_) % p_;
            tau.for_each([&](std::size_t w) {
                if (w == u) return;
                VertexSet beta = tau;
                beta.reset(w);
                add(beta, (p_ - factor) * incidence(tau, w, p_) % p_);
            });
        }
        return out;
    }

private:
    using Key = std::pair<std::string, VertexSet>;

    const MatchingTree::Location& location(const VertexSet& f) {
        auto it = cache_.find(f);
        if (it == cache_.end()) it = cache_.emplace(f, tree_.locate(f)).first;
        return it->second;
    }

    const MatchingTree& tree_;
    Coef p_;
    std::unordered_map<VertexSet, MatchingTree::Location, VertexSetHash> cache_;
};

}  // namespace

MorseBetti morse_betti(const Graph& g, int p, std::size_t node_budget) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
    MatchingTree tree(index_graph(g));
    MorseBetti out;
    std::vector<VertexSet> critical = tree.critical_cells(node_budget, &out.summary.tree_nodes);

    int top = -1;
    for (const auto& c : critical) top = std::max(top, c.count() - 1);
    // by_size[s]: critical cells with s vertices (dimension s-1)
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(top + 2));
    for (const auto& c : critical) by_size[static_cast<std::size_t>(c.count())].push_back(c);
    std::vector<std::unordered_map<VertexSet, std::uint32_t, VertexSetHash>> index(by_size.size());
    for (std::size_t s = 0; s < by_size.size(); ++s) {
        std::sort(by_size[s].begin(), by_size[s].end());
        for (std::size_t i = 0; i < by_size[s].size(); ++i) index[s].emplace(by_size[s][i], static_cast<std::uint32_t>(i));
        out.summary.critical.push_back(by_size[s].size());
    }

    GradientFlow flow(tree, static_cast<Coef>(p));
    std::vector<std::size_t> rank(by_size.size() + 1, 0);
    for (std::size_t s = 1; s < by_size.size(); ++s) {
        if (by_size[s].empty() || by_size[s - 1].empty()) continue;
        std::vector<SparseColumn> cols;
        for (const auto& c : by_size[s]) {
            SparseColumn col;
            for (const auto& [face, coef] : flow.boundary(c))
                col.push_back({index[s - 1].at(face), static_cast<std::uint32_t>(coef)});
            cols.push_back(std::move(col));
        }
        rank[s] = rank_mod_p(std::move(cols), p);
    }
    out.profile.prime = p;
    for (std::size_t s = 0; s < by_size.size(); ++s)
        out.profile.values.push_back(static_cast<std::int64_t>(by_size[s].size() - rank[s] - rank[s + 1]));
    out.profile.trim();
    return out;
}

}  // namespace indcx
