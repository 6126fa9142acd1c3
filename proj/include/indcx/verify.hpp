#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "indcx/homology.hpp"
#include "indcx/io.hpp"
#include "indcx/morse_ops.hpp"
#include "indcx/shape.hpp"

namespace indcx {

enum class CorollaryFamily { C1, C2, C3, M2, M3, CH1 };

std::string to_string(CorollaryFamily f);
CorollaryFamily parse_corollary_family(const std::string& tag);
FamilySpec graph_spec(CorollaryFamily f, int n);

// Homotopy type claimed for I(G) with G the family member at n >= 1.
WedgeShape expected_shape(CorollaryFamily f, int n);

struct BettiCheck {
    int prime = 2;
    std::optional<BettiProfile> profile;  // empty when both budgets were exceeded
    std::optional<BettiRoute> route;
    bool match = false;
};

struct VerifyReport {
    std::string case_id;  // "C3 4"
    WedgeShape expected;
    ChiValue chi = 0;
    bool chi_match = false;
    std::vector<BettiCheck> betti;
    bool betti_skipped = false;
    bool pass = false;

    // "FAMILY n verdict chi=<v> betti=<...>"
    std::string line() const;
    Json to_json() const;
};

struct CaseOptions {
    std::vector<int> primes{2, 3};
    bool betti = true;
    std::size_t face_budget = default_face_budget;
    std::size_t morse_budget = default_morse_budget;
};

VerifyReport verify_case(CorollaryFamily f, int n, const CaseOptions& options = {});

// Generic pass/fail line for identity and property checks.
struct CheckLine {
    std::string suite;
    std::string id;
    bool pass = false;
    std::string detail;

    std::string line() const;
    Json to_json() const;
};

// Closed form, parity, and the recursions through the P4 and Y certificates.
std::vector<CheckLine> verify_appendix(int n_max);

// Shape algebra: recursion consistency and certificate-to-shape coherence.
std::vector<CheckLine> verify_shape_recursions(int n_max);

// Replacement on the seam of each family member reproduces the next member
// up to isomorphism (C1 n -> n+3, C2/M2 n -> M2/C2 n+2, C3/M3 n -> M3/C3 n+4).
std::vector<CheckLine> verify_replacement_recursions(int n_max_two_row, int n_max_three_row);

// Builtin certificates replayed with χ̃ and Betti checks. `corrupt` names a
// builtin whose middle step gets its own target as witness (fault injection);
// replay must fail at exactly that step.
std::vector<CheckLine> verify_certificates(const std::string& corrupt = "", CheckLevel level = CheckLevel::betti);

// ---------------------------------------------------------------------------
// Seeded property suites

struct PropertyOptions {
    std::uint64_t seed = 20240501;
    int random_hosts = 20;       // per theorem
    int lemma_instances = 200;
    int euler_instances = 100;   // join and edge identities
    int chi_agreement = 200;     // enumerate vs recursive
    std::size_t face_budget = default_face_budget;
};

// Random host graphs around a valid patch: the patch vertices with exactly the
// required edges, up to ten extra vertices joined to each other and to the
// patch freely. Thm 2 hosts drop the a–ā edge half of the time (relaxed form).
Graph random_host(PatchRole role, bool relaxed, std::uint64_t seed, MarkedPatch* patch);

std::vector<CheckLine> theorem_property_suite(const PropertyOptions& o);
std::vector<CheckLine> lemma_oracle_suite(const PropertyOptions& o);
std::vector<CheckLine> euler_identity_suite(const PropertyOptions& o);

// ---------------------------------------------------------------------------
// Suite driver

struct SuiteConfig {
    int c1_max = 16, c2_max = 16, m2_max = 16, ch1_max = 10;
    int c3_max = 12, m3_max = 12;
    int c3_betti_max = 12, m3_betti_max = 12;
    int appendix_max = 14;
    int replacement_two_row_max = 8, replacement_three_row_max = 8;
    std::vector<int> primes{2, 3};
    bool chi_only = false;
    int workers = 0;  // corollary case threads; 0 = hardware concurrency
    std::size_t face_budget = default_face_budget;
    std::size_t morse_budget = default_morse_budget;
    std::string corrupt_certificate;
    PropertyOptions properties;
};

// key = value lines; '#' starts a comment. Throws InputError on unknown keys
// or bad values.
SuiteConfig parse_suite_config(const std::string& text);

enum class SuitePart { corollaries, appendix, all, selftest };

SuitePart parse_suite_part(const std::string& s);

struct SuiteSummary {
    std::vector<std::string> lines;
    Json json;
    std::size_t passed = 0, failed = 0, skipped = 0;

    bool ok() const { return failed == 0; }
};

SuiteSummary run_suite(const SuiteConfig& config, SuitePart part);

}  // namespace indcx
