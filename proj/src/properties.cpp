#include <random>

#include "indcx/errors.hpp"
#include "indcx/verify.hpp"

namespace indcx {

namespace {

using Rng = std::mt19937_64;

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Graph random_graph(Rng& rng, int n, double p, double loop_p, const std::string& prefix) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex(prefix + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng, p)) b.add_edge(prefix + std::to_string(i), prefix + std::to_string(j));
    for (int i = 0; i < n; ++i)
        if (coin(rng, loop_p)) b.add_loop(prefix + std::to_string(i));
    return std::move(b).build();
}

std::vector<Label> patch_labels(PatchRole role) {
    switch (role) {
        case PatchRole::edge: return {"u", "v"};
        case PatchRole::p22: return {"a", "ab", "b", "bb"};
        case PatchRole::p32: return {"a1", "a2", "a3", "b1", "b2", "b3"};
    }
    return {};
}

}  // namespace

Graph random_host(PatchRole role, bool relaxed, std::uint64_t seed, MarkedPatch* patch) {
    Rng rng(seed);
    const std::vector<Label> pl = patch_labels(role);
    GraphBuilder b;
    for (const auto& v : pl) b.add_vertex(v);
    switch (role) {
        case PatchRole::edge: b.add_edge("u", "v"); break;
        case PatchRole::p22:
            if (!relaxed) b.add_edge("a", "ab");
            b.add_edge("b", "bb").add_edge("a", "b").add_edge("ab", "bb");
            break;
        case PatchRole::p32:
            b.add_edge("a1", "a2").add_edge("a2", "a3").add_edge("b1", "b2").add_edge("b2", "b3");
            b.add_edge("a1", "b1").add_edge("a2", "b2").add_edge("a3", "b3");
            break;
    }
    const int extra = pick(rng, 0, 10);
    const double p = 0.15 + 0.3 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    for (int i = 0; i < extra; ++i) b.add_vertex("e" + std::to_string(i));
    for (int i = 0; i < extra; ++i) {
        for (int j = i + 1; j < extra; ++j)
            if (coin(rng, p)) b.add_edge("e" + std::to_string(i), "e" + std::to_string(j));
        for (const auto& v : pl)
            if (coin(rng, p)) b.add_edge("e" + std::to_string(i), v);
    }
    if (patch) *patch = MarkedPatch{role, pl, relaxed};
    return std::move(b).build();
}

std::vector<CheckLine> theorem_property_suite(const PropertyOptions& o) {
    std::vector<CheckLine> out;
    const PatchRole roles[] = {PatchRole::edge, PatchRole::p22, PatchRole::p32};
    const char* names[] = {"thm1", "thm2", "thm3"};
    const int shifts[] = {1, 1, 3};
    for (int t = 0; t < 3; ++t) {
        int passed = 0, betti_compared = 0, relaxed_count = 0;
        std::vector<CheckLine> failures;
        for (int i = 0; i < o.random_hosts; ++i) {
            const std::uint64_t seed = mix(o.seed ^ mix(static_cast<std::uint64_t>(t * 1000003 + i)));
            const bool relaxed = roles[t] == PatchRole::p22 && i % 2 == 1;
            relaxed_count += relaxed;
            MarkedPatch patch;
            Graph g = random_host(roles[t], relaxed, seed, &patch);
            Replacement rep = make_replacement(g, patch);
            ReplayReport r = replay(rep.certificate, {CheckLevel::chi});
            const ChiValue cg = chi_reduced(g), ch = chi_reduced(rep.host);
            bool ok = r.passed() && ch == -cg;
            std::string detail = "replay=" + to_string(r.status) + " chi(G)=" + std::to_string(cg) +
                                 " chi(H)=" + std::to_string(ch);
            auto bg = graph_betti(g, 2, o.face_budget), bh = graph_betti(rep.host, 2, o.face_budget);
            if (bg && bh) {
                ++betti_compared;
                const bool shift_ok = bh->profile.same_values(bg->profile.shifted(shifts[t]));
                ok = ok && shift_ok;
                detail += " betti(G)=" + bg->profile.to_string() + " betti(H)=" + bh->profile.to_string();
            }
            if (ok)
                ++passed;
            else
                failures.push_back({"THEOREM", std::string(names[t]) + " host " + std::to_string(i), false, detail});
        }
        out.push_back({"THEOREM", names[t], passed == o.random_hosts,
                       std::to_string(passed) + "/" + std::to_string(o.random_hosts) + " hosts, betti shift " +
                           std::to_string(shifts[t]) + " compared on " + std::to_string(betti_compared) +
                           (roles[t] == PatchRole::p22 ? ", relaxed " + std::to_string(relaxed_count) : "")});
        out.insert(out.end(), failures.begin(), failures.end());
    }
    return out;
}

namespace {

std::vector<OpStep> valid_steps(const Graph& g) {
    std::vector<OpStep> out;
    const std::vector<Label> vs(g.vertices().begin(), g.vertices().end());
    for (const auto& u : vs) {
        for (const auto& v : vs) {
            if (v == u) continue;
            if (OpStep s = OpStep::del_vertex(v, u); check_step(g, s)) out.push_back(s);
            for (const auto& w : vs) {
                if (w <= v || w == u) continue;
                OpStep s = g.has_edge(v, w) ? OpStep::del_edge(v, w, u) : OpStep::add_edge(v, w, u);
                if (check_step(g, s)) out.push_back(s);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<CheckLine> lemma_oracle_suite(const PropertyOptions& o) {
    std::vector<CheckLine> out, failures;
    Rng rng(mix(o.seed ^ 0x4C454D4Dull));
    int passed = 0, counts[3] = {0, 0, 0};
    for (int i = 0; i < o.lemma_instances; ++i) {
        Graph g;
        std::vector<OpStep> steps;
        while (steps.empty()) {
            g = random_graph(rng, pick(rng, 2, 9), 0.1 + 0.5 * std::uniform_real_distribution<double>(0, 1)(rng), 0.05, "v");
            steps = valid_steps(g);
        }
        // Spread instances over the three move kinds when available.
        const OpKind want = static_cast<OpKind>(i % 3);
        std::vector<OpStep> of_kind;
        for (const auto& s : steps)
            if (s.kind == want) of_kind.push_back(s);
        const auto& pool = of_kind.empty() ? steps : of_kind;
        const OpStep step = pool[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
        ++counts[static_cast<int>(step.kind)];
        CollapseReport rep = collapse_oracle(g, step, o.face_budget);
        const Graph smaller_side = step.kind == OpKind::del_edge ? g : apply_step(g, step);
        const bool ok = rep.ok && complexes_equal(rep.residual, independence_complex(smaller_side, o.face_budget));
        if (ok)
            ++passed;
        else
            failures.push_back({"LEMMA", "instance " + std::to_string(i), false, step.to_string() + ": " + rep.message});
    }
    out.push_back({"LEMMA", "collapse-oracle", passed == o.lemma_instances,
                   std::to_string(passed) + "/" + std::to_string(o.lemma_instances) + " instances (del_vertex " +
                       std::to_string(counts[0]) + ", del_edge " + std::to_string(counts[1]) + ", add_edge " +
                       std::to_string(counts[2]) + ")"});
    out.insert(out.end(), failures.begin(), failures.end());
    return out;
}

std::vector<CheckLine> euler_identity_suite(const PropertyOptions& o) {
    std::vector<CheckLine> out;
    Rng rng(mix(o.seed ^ 0x45554C52ull));
    auto real = [&]() { return std::uniform_real_distribution<double>(0, 1)(rng); };

    int join_ok = 0;
    for (int i = 0; i < o.euler_instances; ++i) {
        Graph g = random_graph(rng, pick(rng, 0, 6), real(), 0.05, "g");
        Graph h = random_graph(rng, pick(rng, 0, 6), real(), 0.05, "h");
        Graph u = disjoint_union(g, h);
        const bool ok = chi_reduced(u) == -chi_reduced(g) * chi_reduced(h) &&
                        complexes_equal(independence_complex(u), join(independence_complex(g), independence_complex(h)));
        join_ok += ok;
    }
    out.push_back({"EULER", "join-identity", join_ok == o.euler_instances,
                   std::to_string(join_ok) + "/" + std::to_string(o.euler_instances)});

    int edge_ok = 0;
    for (int i = 0; i < o.euler_instances; ++i) {
        Graph g;
        g = random_graph(rng, pick(rng, 2, 9), 0.2 + 0.5 * real(), 0.05, "v");
        std::vector<Edge> es;
        for (const auto& e : g.edges())
            if (!g.has_loop(e.first) && !g.has_loop(e.second)) es.push_back(e);
        if (es.empty()) {
            --i;
            continue;
        }
        const Edge e = es[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(es.size()) - 1))];
        EdgeRecursion r = check_edge_recursion(g, e);
        const bool independent =
            chi_reduced(delete_edge(g, e.first, e.second), ChiMethod::enumerate) ==
            chi_reduced(g, ChiMethod::enumerate) +
                chi_reduced(delete_vertices(g, closed_neighborhood(g, e)), ChiMethod::enumerate);
        edge_ok += r.holds && independent;
    }
    out.push_back({"EULER", "edge-identity", edge_ok == o.euler_instances,
                   std::to_string(edge_ok) + "/" + std::to_string(o.euler_instances)});

    int agree = 0;
    for (int i = 0; i < o.chi_agreement; ++i) {
        Graph g = random_graph(rng, pick(rng, 0, 12), real(), 0.05, "v");
        agree += chi_reduced(g, ChiMethod::enumerate) == chi_reduced(g, ChiMethod::recursive);
    }
    out.push_back({"EULER", "enumerate-vs-recursive", agree == o.chi_agreement,
                   std::to_string(agree) + "/" + std::to_string(o.chi_agreement)});
    return out;
}

}  // namespace indcx
