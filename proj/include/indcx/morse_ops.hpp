#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "indcx/complex.hpp"
#include "indcx/euler.hpp"
#include "indcx/graph.hpp"
#include "indcx/homology.hpp"
#include "indcx/op_step.hpp"

namespace indcx {

// Ordered script of moves. Every intermediate graph has an independence
// complex of the same simple homotopy type as the initial one.
struct Certificate {
    std::string name;
    Graph initial;
    std::optional<FamilySpec> initial_family;  // set when `initial` was generated
    std::vector<OpStep> steps;
    Graph expected_final;
    std::string note;
};

enum class CheckLevel { none, chi, betti };

CheckLevel parse_check_level(const std::string& s);

enum class ReplayStatus { pass, precondition_failure, invariant_violation, final_mismatch };

std::string to_string(ReplayStatus s);

struct StepRecord {
    OpStep step;
    bool precondition = false;
    std::string diagnostic;
    std::optional<ChiValue> chi_after;
    std::optional<BettiProfile> betti_after;
};

struct ReplayReport {
    ReplayStatus status = ReplayStatus::pass;
    std::size_t failed_step = 0;  // index of the failing step when status is not pass
    std::string message;
    std::optional<ChiValue> chi_initial;
    std::optional<BettiProfile> betti_initial;
    bool betti_skipped = false;  // some intermediate graph exceeded both Betti budgets
    std::vector<StepRecord> steps;
    Graph final_graph;

    bool passed() const { return status == ReplayStatus::pass; }
};

struct ReplayOptions {
    CheckLevel check = CheckLevel::chi;
    std::size_t face_budget = default_face_budget;
    std::size_t morse_budget = default_morse_budget;
};

// Folds apply_step over the steps, checking χ̃ (and the GF(2) profile) at
// every intermediate graph, then compares the result with the expected final
// graph by labeled equality. Never throws for a failing certificate.
ReplayReport replay(const Certificate& cert, const ReplayOptions& options = {});

// ---------------------------------------------------------------------------
// Replacement theorems

enum class PatchRole { edge, p22, p32 };

std::string to_string(PatchRole r);

// edge: (u, v).  p22: (a, ā, b, b̄) with columns a–ā, b–b̄ and rows a–b, ā–b̄.
// p32: (a1, a2, a3, b1, b2, b3) with columns a1–a2–a3, b1–b2–b3 and rows a_r–b_r.
struct MarkedPatch {
    PatchRole role = PatchRole::edge;
    std::vector<Label> labels;
    bool relaxed = false;  // p22 only: a–ā may be missing
};

// Labels distinct, present and unlooped; induced subgraph exactly the patch.
StepCheck validate_patch(const Graph& g, const MarkedPatch& patch);

struct Replacement {
    Graph host;             // H
    Certificate certificate;  // reduces H to G ⊔ (detached factor)
};

// Builds H by replacing the patch with the longer strip, interior labels
// prefixed by `prefix`, and the certificate reducing H back to G plus an edge
// (edge, p22) or an 8-cycle (p32). Throws PreconditionError when the patch is
// invalid and InputError on interior label collisions.
Replacement make_replacement(const Graph& g, const MarkedPatch& patch, const std::string& prefix = "h_");

// ---------------------------------------------------------------------------
// Builtin certificates

// Ids: thm1-generic, thm2-generic, thm3-generic, p42, c32, m32, c33, c34,
// m33, m34, ch1(n), p4n-to-x(n), y-recursion(n).
Certificate builtin_certificate(const std::string& id);

// Every fixed id plus the parameterized ids at their acceptance ranges.
std::vector<std::string> builtin_ids();

// Parameterized id templates with their admissible n.
struct ParamRange {
    std::string stem;
    int lo = 1;
    int hi = 1;
};
std::vector<ParamRange> builtin_param_ranges();

// Auxiliary graph on a..h whose independence complex is a wedge of five
// circles; the m34 certificate ends at it (relabeled) plus a separate edge.
Graph m34_auxiliary_graph();

}  // namespace indcx
