#include "indcx/errors.hpp"
#include "indcx/morse_ops.hpp"

namespace indcx {

CheckLevel parse_check_level(const std::string& s) {
    if (s == "none") return CheckLevel::none;
    if (s == "chi") return CheckLevel::chi;
    if (s == "betti") return CheckLevel::betti;
    throw InputError("unknown check level '" + s + "' (none, chi, betti)");
}

std::string to_string(ReplayStatus s) {
    switch (s) {
        case ReplayStatus::pass: return "PASS";
        case ReplayStatus::precondition_failure: return "PRECONDITION_FAILURE";
        case ReplayStatus::invariant_violation: return "INVARIANT_VIOLATION";
        case ReplayStatus::final_mismatch: return "FINAL_MISMATCH";
    }
    return "?";
}

namespace {

std::optional<BettiProfile> try_betti(const Graph& g, const ReplayOptions& o) {
    auto b = graph_betti(g, 2, o.face_budget, o.morse_budget);
    if (!b) return std::nullopt;
    return b->profile;
}

}  // namespace

ReplayReport replay(const Certificate& cert, const ReplayOptions& options) {
    ReplayReport report;
    Graph g = cert.initial;
    const bool want_chi = options.check != CheckLevel::none;
    const bool want_betti = options.check == CheckLevel::betti;
    if (want_chi) report.chi_initial = chi_reduced(g);
    if (want_betti) {
        report.betti_initial = try_betti(g, options);
        if (!report.betti_initial) report.betti_skipped = true;
    }

    auto fail = [&](ReplayStatus s, std::size_t i, std::string msg) {
        report.status = s;
        report.failed_step = i;
        report.message = std::move(msg);
        report.final_graph = g;
        return report;
    };

    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const OpStep& step = cert.steps[i];
        StepRecord rec;
        rec.step = step;
        StepCheck check = check_step(g, step);
        rec.precondition = check.ok;
        rec.diagnostic = check.diagnostic;
        report.steps.push_back(rec);
        if (!check.ok) return fail(ReplayStatus::precondition_failure, i, "step " + std::to_string(i + 1) + ": " + check.diagnostic);
        g = apply_step(g, step);
        StepRecord& last = report.steps.back();
        if (want_chi) {
            last.chi_after = chi_reduced(g);
            if (*last.chi_after != *report.chi_initial)
                return fail(ReplayStatus::invariant_violation, i,
                            "step " + std::to_string(i + 1) + " " + step.to_string() + ": chi changed from " +
                                std::to_string(*report.chi_initial) + " to " + std::to_string(*last.chi_after));
        }
        if (want_betti && report.betti_initial) {
            last.betti_after = try_betti(g, options);
            if (!last.betti_after) {
                report.betti_skipped = true;
            } else if (!last.betti_after->same_values(*report.betti_initial)) {
                return fail(ReplayStatus::invariant_violation, i,
                            "step " + std::to_string(i + 1) + " " + step.to_string() + ": GF(2) Betti changed from " +
                                report.betti_initial->to_string() + " to " + last.betti_after->to_string());
            }
        }
    }
    report.final_graph = g;
    GraphMatch m = same_graph(g, cert.expected_final, MatchMode::labeled);
    if (!m.equal)
        return fail(ReplayStatus::final_mismatch, cert.steps.size(), "final graph differs from expected: " + m.reason);
    return report;
}

}  // namespace indcx
