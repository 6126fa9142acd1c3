#include "indcx/complex.hpp"

#include <algorithm>
#include <map>

#include "indcx/errors.hpp"

namespace indcx {

SimplicialComplex::SimplicialComplex() { faces_.insert(VertexSet{}); }

SimplicialComplex::SimplicialComplex(std::vector<Label> universe, FaceSet faces)
    : universe_(std::move(universe)), faces_(std::move(faces)) {
    if (universe_.size() > VertexSet::capacity) throw InputError("complex universe too large");
    if (!std::is_sorted(universe_.begin(), universe_.end()) ||
        std::adjacent_find(universe_.begin(), universe_.end()) != universe_.end())
        throw InputError("complex universe must be sorted and duplicate free");
    faces_.insert(VertexSet{});
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (const auto& f : faces_) d = std::max(d, f.count() - 1);
    return d;
}

std::vector<Label> SimplicialComplex::labels_of(const VertexSet& face) const {
    std::vector<Label> out;
    face.for_each([&](std::size_t i) { out.push_back(universe_.at(i)); });
    return out;
}

VertexSet SimplicialComplex::face_of(const std::vector<Label>& labels) const {
    VertexSet f;
    for (const auto& l : labels) {
        auto it = std::lower_bound(universe_.begin(), universe_.end(), l);
        if (it == universe_.end() || *it != l) throw InputError("label '" + l + "' not in complex");
        f.set(static_cast<std::size_t>(it - universe_.begin()));
    }
    return f;
}

std::vector<VertexSet> SimplicialComplex::sorted_faces() const {
    std::vector<std::pair<std::pair<int, std::vector<Label>>, VertexSet>> keyed;
    keyed.reserve(faces_.size());
    for (const auto& f : faces_) keyed.push_back({{f.count(), labels_of(f)}, f});
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<VertexSet> out;
    out.reserve(keyed.size());
    for (auto& k : keyed) out.push_back(k.second);
    return out;
}

SimplicialComplex independence_complex(const Graph& g, std::size_t budget) {
    IndexedGraph ig = index_graph(g);
    std::vector<Label> universe;
    std::vector<std::size_t> keep;  // universe index -> graph index
    for (std::size_t v = 0; v < ig.size(); ++v)
        if (!ig.loops.test(v)) {
            universe.push_back(ig.labels[v]);
            keep.push_back(v);
        }
    const std::size_t n = keep.size();
    std::vector<VertexSet> adj(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (ig.adjacency[keep[a]].test(keep[b])) adj[a].set(b);

    FaceSet faces;
    // Each frame: a face and the vertices that may still extend it (all above its max index).
    struct Frame { VertexSet face, allowed; };
    std::vector<Frame> stack{{VertexSet{}, VertexSet::prefix(n)}};
    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        faces.insert(fr.face);
        if (faces.size() > budget)
            throw BudgetExceeded("independence complex exceeds face budget of " + std::to_string(budget));
        VertexSet allowed = fr.allowed;
        while (!allowed.empty()) {
            std::size_t v = allowed.first();
            allowed.reset(v);
            VertexSet next = fr.face;
            next.set(v);
            stack.push_back({next, allowed - adj[v]});
        }
    }
    return SimplicialComplex(std::move(universe), std::move(faces));
}

namespace {

// Re-express the faces of k over a larger sorted universe.
FaceSet remap(const SimplicialComplex& k, const std::vector<Label>& universe,
              const std::map<Label, Label>& rename = {}) {
    std::vector<std::size_t> pos(k.universe().size());
    for (std::size_t i = 0; i < k.universe().size(); ++i) {
        Label l = k.universe()[i];
        if (auto it = rename.find(l); it != rename.end()) l = it->second;
        pos[i] = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), l) - universe.begin());
    }
    FaceSet out;
    out.reserve(k.num_faces());
    for (const auto& f : k.faces()) {
        VertexSet g;
        f.for_each([&](std::size_t i) { g.set(pos[i]); });
        out.insert(g);
    }
    return out;
}

}  // namespace

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l, LabelClash clash) {
    std::set<Label> taken(k.universe().begin(), k.universe().end());
    std::map<Label, Label> rename;
    for (const auto& v : l.universe()) {
        Label name = v;
        if (taken.count(name)) {
            if (clash == LabelClash::reject) throw InputError("join universe clash on '" + v + "'");
            while (taken.count(name) || std::binary_search(l.universe().begin(), l.universe().end(), name))
                name += "'";
        }
        taken.insert(name);
        rename[v] = name;
    }
    std::vector<Label> universe(taken.begin(), taken.end());
    FaceSet fk = remap(k, universe), fl = remap(l, universe, rename);
    FaceSet faces;
    faces.reserve(fk.size() * fl.size());
    for (const auto& a : fk)
        for (const auto& b : fl) faces.insert(a | b);
    return SimplicialComplex(std::move(universe), std::move(faces));
}

SimplicialComplex diamond(int n) {
    if (n < -1) throw InputError("diamond needs n >= -1");
    SimplicialComplex out;
    for (int i = 0; i <= n; ++i) {
        std::string s = "s" + std::to_string(i);
        std::vector<Label> u{s + "+", s + "-"};
        std::sort(u.begin(), u.end());
        FaceSet pts{VertexSet{}, VertexSet::singleton(0), VertexSet::singleton(1)};
        out = join(out, SimplicialComplex(u, pts));
    }
    return out;
}

std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
    std::vector<std::size_t> out(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (const auto& f : k.faces()) ++out[static_cast<std::size_t>(f.count())];
    return out;
}

bool complexes_equal(const SimplicialComplex& k, const SimplicialComplex& l) {
    if (k.num_faces() != l.num_faces()) return false;
    if (k.universe() == l.universe()) return k.faces() == l.faces();
    std::set<Label> all(k.universe().begin(), k.universe().end());
    all.insert(l.universe().begin(), l.universe().end());
    std::vector<Label> universe(all.begin(), all.end());
    if (universe.size() > VertexSet::capacity) return false;
    return remap(k, universe) == remap(l, universe);
}

bool is_downward_closed(const SimplicialComplex& k) {
    for (const auto& f : k.faces()) {
        bool ok = true;
        f.for_each([&](std::size_t i) {
            VertexSet g = f;
            g.reset(i);
            if (!k.contains(g)) ok = false;
        });
        if (!ok) return false;
    }
    return k.contains(VertexSet{});
}

std::vector<std::string> dump_faces(const SimplicialComplex& k) {
    std::vector<std::string> out;
    for (const auto& f : k.sorted_faces()) {
        if (f.empty()) {
            out.push_back("()");
            continue;
        }
        std::string line;
        for (const auto& l : k.labels_of(f)) {
            if (!line.empty()) line += ',';
            line += l;
        }
        out.push_back(std::move(line));
    }
    return out;
}

}  // namespace indcx
