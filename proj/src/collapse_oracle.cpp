#include <algorithm>

#include "indcx/complex.hpp"
#include "indcx/errors.hpp"

namespace indcx {

CollapseReport collapse_oracle(const Graph& g, const OpStep& step, std::size_t budget) {
    if (auto c = check_step(g, step); !c) throw PreconditionError(c.diagnostic);

    CollapseReport rep;
    rep.expansion = step.kind == OpKind::del_edge;
    const Graph edited = apply_step(g, step);
    // The collapse always runs from the complex of `big` onto that of `small`.
    const Graph& big = rep.expansion ? edited : g;
    const Graph& small = rep.expansion ? g : edited;

    SimplicialComplex source = independence_complex(big, budget);
    SimplicialComplex target = independence_complex(small, budget);
    rep.source_faces = source.num_faces();
    rep.target_faces = target.num_faces();

    auto bail = [&](std::string msg) {
        rep.message = std::move(msg);
        rep.residual = source;
        return rep;
    };

    const auto& uni = source.universe();
    auto index = [&](const Label& l) {
        return static_cast<std::size_t>(std::lower_bound(uni.begin(), uni.end(), l) - uni.begin());
    };
    auto in_universe = [&](const Label& l) { return std::binary_search(uni.begin(), uni.end(), l); };
    if (!in_universe(step.witness)) return bail("witness is looped and lies outside the complex");

    VertexSet key;
    bool key_possible = in_universe(step.target) && (!step.is_edge_move() || in_universe(step.target2));
    if (key_possible) {
        key.set(index(step.target));
        if (step.is_edge_move()) key.set(index(step.target2));
    }
    const std::size_t u = index(step.witness);

    // Pairs (sigma, sigma + u) over faces containing the key and missing u.
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    std::size_t upper_faces = 0;
    if (key_possible) {
        for (const auto& f : source.faces()) {
            if (!key.subset_of(f)) continue;
            if (f.test(u)) {
                ++upper_faces;
                VertexSet lower = f;
                lower.reset(u);
                if (!source.contains(lower)) return bail("face lost its witness-free partner");
                continue;
            }
            VertexSet upper = f;
            upper.set(u);
            if (!source.contains(upper)) return bail("matched partner of a key face is not a face");
            pairs.emplace_back(f, upper);
        }
    }
    rep.pairs = pairs.size();
    if (upper_faces != pairs.size()) return bail("matching does not cover the witness faces");

    // The matched faces must be exactly the faces that disappear.
    const std::vector<Label>& small_uni = target.universe();
    std::size_t vanishing = 0;
    for (const auto& f : source.faces()) {
        bool survives = true;
        std::vector<Label> labels = source.labels_of(f);
        VertexSet t;
        for (const auto& l : labels) {
            auto it = std::lower_bound(small_uni.begin(), small_uni.end(), l);
            if (it == small_uni.end() || *it != l) {
                survives = false;
                break;
            }
            t.set(static_cast<std::size_t>(it - small_uni.begin()));
        }
        survives = survives && target.contains(t);
        bool matched = key_possible && key.subset_of(f);
        if (survives == matched) return bail("matched faces differ from the faces that must disappear");
        if (!survives) ++vanishing;
    }
    if (vanishing != 2 * pairs.size()) return bail("vanishing face count mismatch");
    if (source.num_faces() - vanishing != target.num_faces())
        return bail("target complex has faces missing from the source");

    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.second.count() > b.second.count(); });
    FaceSet current = source.faces();
    const std::size_t n = uni.size();
    for (const auto& [sigma, tau] : pairs) {
        for (std::size_t x = 0; x < n; ++x) {
            if (tau.test(x)) continue;
            VertexSet up = tau;
            up.set(x);
            if (current.count(up)) return bail("collapse blocked: upper face is not maximal");
            if (sigma.test(x) || x == u) continue;
            VertexSet side = sigma;
            side.set(x);
            if (current.count(side)) return bail("collapse blocked: lower face has a second coface");
        }
        current.erase(tau);
        current.erase(sigma);
    }

    rep.residual = SimplicialComplex(uni, std::move(current));
    if (!complexes_equal(rep.residual, target)) return bail("residual differs from the target complex");
    rep.ok = true;
    rep.message = std::to_string(pairs.size()) + " elementary collapses";
    return rep;
}

}  // namespace indcx
