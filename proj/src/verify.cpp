#include "indcx/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <sstream>

#include "indcx/errors.hpp"

namespace indcx {

std::string to_string(CorollaryFamily f) {
    switch (f) {
        case CorollaryFamily::C1: return "C1";
        case CorollaryFamily::C2: return "C2";
        case CorollaryFamily::C3: return "C3";
        case CorollaryFamily::M2: return "M2";
        case CorollaryFamily::M3: return "M3";
        case CorollaryFamily::CH1: return "CH1";
    }
    return "?";
}

CorollaryFamily parse_corollary_family(const std::string& tag) {
    for (auto f : {CorollaryFamily::C1, CorollaryFamily::C2, CorollaryFamily::C3, CorollaryFamily::M2,
                   CorollaryFamily::M3, CorollaryFamily::CH1})
        if (to_string(f) == tag) return f;
    throw InputError("unknown corollary family '" + tag + "' (C1, C2, C3, M2, M3, CH1)");
}

FamilySpec graph_spec(CorollaryFamily f, int n) {
    switch (f) {
        case CorollaryFamily::C1: return {Family::C, 1, n};
        case CorollaryFamily::C2: return {Family::C, 2, n};
        case CorollaryFamily::C3: return {Family::C, 3, n};
        case CorollaryFamily::M2: return {Family::M, 2, n};
        case CorollaryFamily::M3: return {Family::M, 3, n};
        case CorollaryFamily::CH1: return {Family::CH, 1, n};
    }
    throw InputError("unknown corollary family");
}

WedgeShape expected_shape(CorollaryFamily f, int n) {
    if (n < 1) throw InputError("expected_shape needs n >= 1");
    auto w = [](int m, int d) { return WedgeShape::wedge(m, d); };
    switch (f) {
        case CorollaryFamily::C1: {
            const int k = n / 3;
            switch (n % 3) {
                case 0: return w(2, k - 1);
                case 1: return w(1, k - 1);
                default: return w(1, k);
            }
        }
        case CorollaryFamily::C2: {
            const int k = n / 4;
            switch (n % 4) {
                case 0: return w(3, 2 * k - 1);
                case 1: return w(1, 2 * k - 1);
                case 2: return w(1, 2 * k);
                default: return w(1, 2 * k + 1);
            }
        }
        case CorollaryFamily::M2: {
            const int k = n / 4;
            switch (n % 4) {
                case 0: return w(1, 2 * k - 1);
                case 1: return w(1, 2 * k);
                case 2: return w(3, 2 * k);
                default: return w(1, 2 * k);
            }
        }
        case CorollaryFamily::C3: {
            const int k = n / 8;
            switch (n % 8) {
                case 0: return w(5, 6 * k - 1);
                case 1: return w(1, 6 * k - 1);
                case 2:
                case 3: return w(1, 6 * k + 1);
                case 4: return w(3, 6 * k + 2);
                case 5:
                case 6: return w(1, 6 * k + 3);
                default: return w(1, 6 * k + 5);
            }
        }
        case CorollaryFamily::M3: {
            const int k = n / 8;
            switch (n % 8) {
                case 0: return w(3, 6 * k - 1);
                case 1:
                case 2: return w(1, 6 * k);
                case 3: return w(1, 6 * k + 2);
                case 4: return w(5, 6 * k + 2);
                case 5: return w(1, 6 * k + 2);
                default: return w(1, 6 * k + 4);
            }
        }
        case CorollaryFamily::CH1:
            return n % 2 == 0 ? w(2, n - 1) : WedgeShape::point();
    }
    throw InputError("unknown corollary family");
}

namespace {

std::string compact(const BettiProfile& b) {
    std::string s = b.to_string();
    std::replace(s.begin(), s.end(), ' ', ',');
    return s;
}

}  // namespace

std::string VerifyReport::line() const {
    std::ostringstream out;
    out << case_id << ' ' << (pass ? "PASS" : "FAIL") << " chi=" << chi << " betti=";
    if (betti.empty()) {
        out << "skipped";
    } else {
        for (std::size_t i = 0; i < betti.size(); ++i) {
            if (i) out << ';';
            out << "GF" << betti[i].prime << '{' << (betti[i].profile ? compact(*betti[i].profile) : "skipped") << '}';
        }
    }
    out << " expected=" << expected.to_string();
    return out.str();
}

Json VerifyReport::to_json() const {
    Json j;
    j["case"] = case_id;
    j["expected"] = expected.to_string();
    j["chi"] = chi;
    j["chi_match"] = chi_match;
    j["betti"] = Json::array();
    for (const auto& b : betti) {
        Json e;
        e["prime"] = b.prime;
        e["profile"] = b.profile ? Json(b.profile->to_string()) : Json(nullptr);
        e["route"] = b.route ? Json(to_string(*b.route)) : Json(nullptr);
        e["match"] = b.match;
        j["betti"].push_back(e);
    }
    j["betti_skipped"] = betti_skipped;
    j["verdict"] = pass ? "PASS" : "FAIL";
    return j;
}

VerifyReport verify_case(CorollaryFamily f, int n, const CaseOptions& options) {
    VerifyReport r;
    r.case_id = to_string(f) + " " + std::to_string(n);
    r.expected = expected_shape(f, n);
    Graph g = generate_family(graph_spec(f, n));
    r.chi = chi_reduced(g);
    r.chi_match = r.chi == r.expected.chi();
    bool betti_ok = true;
    if (options.betti) {
        for (int p : options.primes) {
            BettiCheck c;
            c.prime = p;
            if (auto b = graph_betti(g, p, options.face_budget, options.morse_budget)) {
                c.profile = b->profile;
                c.route = b->route;
                c.match = b->profile.same_values(betti_of_shape(r.expected, p));
            } else {
                r.betti_skipped = true;
            }
            if (c.profile && !c.match) betti_ok = false;
            r.betti.push_back(c);
        }
    } else {
        r.betti_skipped = true;
    }
    r.pass = r.chi_match && betti_ok;
    return r;
}

std::string CheckLine::line() const {
    std::string s = suite + " " + id + " " + (pass ? "PASS" : "FAIL");
    if (!detail.empty()) s += " " + detail;
    return s;
}

Json CheckLine::to_json() const {
    return Json{{"suite", suite}, {"id", id}, {"verdict", pass ? "PASS" : "FAIL"}, {"detail", detail}};
}

namespace {

CheckLine check(std::string suite, std::string id, bool pass, std::string detail = {}) {
    return {std::move(suite), std::move(id), pass, std::move(detail)};
}

std::string eq(const std::string& a, ChiValue x, const std::string& b, ChiValue y) {
    return a + "=" + std::to_string(x) + " " + b + "=" + std::to_string(y);
}

ChiValue chi_of(FamilySpec s) { return chi_reduced(generate_family(s)); }

}  // namespace

std::vector<CheckLine> verify_appendix(int n_max) {
    if (n_max < 4) throw InputError("appendix checks need n_max >= 4");
    std::vector<CheckLine> out;
    const std::string S = "APPENDIX";
    auto P = [](int n) { return chi_of({Family::P, 4, n}); };
    auto X = [](int n) { return chi_of({Family::X4, 4, n}); };
    auto Y = [](int n) { return chi_of({Family::Y4, 4, n}); };
    for (int n = 1; n <= n_max; ++n) {
        const ChiValue direct = P(n), closed = chi_prop_A(n);
        out.push_back(check(S, "closed-form " + std::to_string(n), direct == closed, eq("chi", direct, "closed", closed)));
        const bool parity = (n % 2 == 1) ? direct >= 0 : direct < 0;
        out.push_back(check(S, "parity " + std::to_string(n), parity, "chi=" + std::to_string(direct)));
    }
    for (int n = 3; n <= n_max; ++n) {
        Certificate c = builtin_certificate("p4n-to-x(" + std::to_string(n) + ")");
        ReplayReport r = replay(c, {CheckLevel::chi});
        const ChiValue fin = chi_reduced(r.final_graph), p = P(n), x = X(n - 2);
        const bool ok = r.passed() && p == x && fin == p;
        out.push_back(check(S, "x-reduction " + std::to_string(n), ok,
                            "replay=" + to_string(r.status) + " " + eq("P4", p, "X", x)));
    }
    for (int n = 4; n <= n_max; ++n) {
        const ChiValue p = P(n), p2 = P(n - 2), y3 = Y(n - 3);
        Graph xg = generate_family({Family::X4, 4, n - 2});
        EdgeRecursion e = check_edge_recursion(xg, make_edge(grid_label(1, 1), grid_label(4, 1)));
        const bool ok = p == p2 - y3 && e.holds && e.without_edge == p2 && e.remainder == y3;
        out.push_back(check(S, "p4-recursion " + std::to_string(n), ok,
                            eq("P4(n)", p, "P4(n-2)", p2) + " Y(n-3)=" + std::to_string(y3)));
    }
    for (int n = 4; n <= n_max; ++n) {
        Certificate c = builtin_certificate("y-recursion(" + std::to_string(n) + ")");
        ReplayReport r = replay(c, {CheckLevel::chi});
        const ChiValue y = Y(n), y3 = Y(n - 3);
        out.push_back(check(S, "y-recursion " + std::to_string(n), r.passed() && y == -y3,
                            "replay=" + to_string(r.status) + " " + eq("Y(n)", y, "Y(n-3)", y3)));
    }
    const ChiValue base[] = {1, 0, 1};
    for (int n = 1; n <= 3; ++n)
        out.push_back(check(S, "y-base " + std::to_string(n), Y(n) == base[n - 1], eq("chi", Y(n), "expected", base[n - 1])));
    return out;
}

std::vector<CheckLine> verify_shape_recursions(int n_max) {
    std::vector<CheckLine> out;
    const std::string S = "SHAPE";
    using F = CorollaryFamily;
    struct Rule { F to; F from; int step; int shift; };
    const Rule rules[] = {{F::C1, F::C1, 3, 1}, {F::C2, F::M2, 2, 1}, {F::M2, F::C2, 2, 1},
                          {F::C3, F::M3, 4, 3}, {F::M3, F::C3, 4, 3}, {F::CH1, F::CH1, 2, 2}};
    for (const auto& r : rules) {
        bool ok = true;
        std::string bad;
        for (int n = 1; n <= n_max; ++n) {
            if (!(expected_shape(r.to, n + r.step) == shape_suspend(expected_shape(r.from, n), r.shift))) {
                ok = false;
                bad += " n=" + std::to_string(n);
            }
        }
        out.push_back(check(S, to_string(r.to) + "(n+" + std::to_string(r.step) + ")=S^" + std::to_string(r.shift) + to_string(r.from) + "(n)",
                            ok, "n=1.." + std::to_string(n_max) + bad));
    }
    // c34 ends at C(2,4) plus an edge: one suspension of the C2 shape is the C3 shape.
    Certificate c = builtin_certificate("c34");
    ReplayReport rep = replay(c, {CheckLevel::chi});
    GraphBuilder rest(rep.final_graph);
    rest.remove_vertex(grid_label(1, 2)).remove_vertex(grid_label(1, 3));
    const bool is_c24 = same_graph(std::move(rest).build(), grid_C(2, 4), MatchMode::isomorphic).equal;
    const WedgeShape lifted = shape_suspend(expected_shape(F::C2, 4), 1);
    out.push_back(check(S, "c34-coherence", rep.passed() && is_c24 && lifted == expected_shape(F::C3, 4),
                        "S(" + expected_shape(F::C2, 4).to_string() + ")=" + lifted.to_string()));
    return out;
}

std::vector<CheckLine> verify_replacement_recursions(int two_row_max, int three_row_max) {
    std::vector<CheckLine> out;
    const std::string S = "REPLACE";
    auto L = [](int r, int c) { return grid_label(r, c); };
    auto run = [&](const std::string& id, const Graph& g, const MarkedPatch& patch, const Graph& target) {
        Replacement rep = make_replacement(g, patch);
        ReplayReport r = replay(rep.certificate, {CheckLevel::chi});
        GraphMatch m = same_graph(rep.host, target, MatchMode::isomorphic);
        out.push_back(check(S, id, r.passed() && m.equal,
                            "replay=" + to_string(r.status) + (m.equal ? " isomorphic" : " " + m.reason)));
    };
    for (int n = 3; n <= two_row_max; ++n)
        run("C1 " + std::to_string(n) + "->" + std::to_string(n + 3), grid_C(1, n), {PatchRole::edge, {L(1, n), L(1, 1)}},
            grid_C(1, n + 3));
    for (int n = 3; n <= two_row_max; ++n) {
        run("C2 " + std::to_string(n) + "->M2 " + std::to_string(n + 2), grid_C(2, n),
            {PatchRole::p22, {L(1, n), L(2, n), L(1, 1), L(2, 1)}}, grid_M(2, n + 2));
        run("M2 " + std::to_string(n) + "->C2 " + std::to_string(n + 2), grid_M(2, n),
            {PatchRole::p22, {L(1, n), L(2, n), L(2, 1), L(1, 1)}}, grid_C(2, n + 2));
    }
    for (int n = 3; n <= three_row_max; ++n) {
        run("C3 " + std::to_string(n) + "->M3 " + std::to_string(n + 4), grid_C(3, n),
            {PatchRole::p32, {L(1, n), L(2, n), L(3, n), L(1, 1), L(2, 1), L(3, 1)}}, grid_M(3, n + 4));
        run("M3 " + std::to_string(n) + "->C3 " + std::to_string(n + 4), grid_M(3, n),
            {PatchRole::p32, {L(1, n), L(2, n), L(3, n), L(3, 1), L(2, 1), L(1, 1)}}, grid_C(3, n + 4));
    }
    return out;
}

std::vector<CheckLine> verify_certificates(const std::string& corrupt, CheckLevel level) {
    std::vector<CheckLine> out;
    std::vector<std::string> ids = builtin_ids();
    if (!corrupt.empty() && std::find(ids.begin(), ids.end(), corrupt) == ids.end()) ids.push_back(corrupt);
    for (const auto& id : ids) {
        Certificate c = builtin_certificate(id);
        if (id == corrupt) {
            OpStep& s = c.steps[c.steps.size() / 2];
            s.witness = s.target;
        }
        ReplayReport r = replay(c, {level});
        std::string detail = "steps=" + std::to_string(c.steps.size());
        if (r.chi_initial) detail += " chi=" + std::to_string(*r.chi_initial);
        if (r.betti_initial) detail += " betti=" + compact(*r.betti_initial);
        if (r.betti_skipped) detail += " betti-partly-skipped";
        if (!r.passed()) detail += " " + to_string(r.status) + " at step " + std::to_string(r.failed_step + 1) + ": " + r.message;
        out.push_back(check("CERT", id, r.passed(), detail));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

int parse_int(const std::string& key, const std::string& v, int lo, int hi) {
    try {
        std::size_t pos = 0;
        long long x = std::stoll(v, &pos);
        if (pos != v.size() || x < lo || x > hi) throw std::out_of_range(v);
        return static_cast<int>(x);
    } catch (const std::exception&) {
        throw InputError("config key '" + key + "' needs an integer in " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        unsigned long long x = std::stoull(v, &pos);
        if (pos != v.size() || v.find('-') != std::string::npos) throw std::out_of_range(v);
        return x;
    } catch (const std::exception&) {
        throw InputError("config key '" + key + "' needs an unsigned integer");
    }
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw InputError("config key '" + key + "' needs true or false");
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

SuiteConfig parse_suite_config(const std::string& text) {
    SuiteConfig c;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto eqpos = line.find('=');
        if (eqpos == std::string::npos) throw InputError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eqpos)), v = trim(line.substr(eqpos + 1));
        if (key == "c1_max") c.c1_max = parse_int(key, v, 0, 128);
        else if (key == "c2_max") c.c2_max = parse_int(key, v, 0, 64);
        else if (key == "m2_max") c.m2_max = parse_int(key, v, 0, 64);
        else if (key == "ch1_max") c.ch1_max = parse_int(key, v, 0, 32);
        else if (key == "c3_max") c.c3_max = parse_int(key, v, 0, 42);
        else if (key == "m3_max") c.m3_max = parse_int(key, v, 0, 42);
        else if (key == "c3_betti_max") c.c3_betti_max = parse_int(key, v, 0, 42);
        else if (key == "m3_betti_max") c.m3_betti_max = parse_int(key, v, 0, 42);
        else if (key == "appendix_max") c.appendix_max = parse_int(key, v, 4, 32);
        else if (key == "replacement_two_row_max") c.replacement_two_row_max = parse_int(key, v, 0, 18);
        else if (key == "replacement_three_row_max") c.replacement_three_row_max = parse_int(key, v, 0, 9);
        else if (key == "chi_only") c.chi_only = parse_bool(key, v);
        else if (key == "workers") c.workers = parse_int(key, v, 0, 64);
        else if (key == "face_budget") c.face_budget = c.properties.face_budget = parse_u64(key, v);
        else if (key == "morse_budget") c.morse_budget = parse_u64(key, v);
        else if (key == "corrupt_certificate") c.corrupt_certificate = v;
        else if (key == "seed") c.properties.seed = parse_u64(key, v);
        else if (key == "random_hosts") c.properties.random_hosts = parse_int(key, v, 0, 100000);
        else if (key == "lemma_instances") c.properties.lemma_instances = parse_int(key, v, 0, 1000000);
        else if (key == "euler_instances") c.properties.euler_instances = parse_int(key, v, 0, 1000000);
        else if (key == "chi_agreement") c.properties.chi_agreement = parse_int(key, v, 0, 1000000);
        else if (key == "primes") {
            c.primes.clear();
            std::istringstream ps(v);
            for (std::string p; std::getline(ps, p, ',');) {
                int x = parse_int(key, trim(p), 2, 65521);
                if (!is_prime(x)) throw InputError("config key 'primes': " + std::to_string(x) + " is not prime");
                c.primes.push_back(x);
            }
            if (c.primes.empty()) throw InputError("config key 'primes' is empty");
        } else {
            throw InputError("unknown config key '" + key + "'");
        }
    }
    if (!c.corrupt_certificate.empty()) builtin_certificate(c.corrupt_certificate);  // validates the id
    return c;
}

SuitePart parse_suite_part(const std::string& s) {
    if (s == "corollaries") return SuitePart::corollaries;
    if (s == "appendix") return SuitePart::appendix;
    if (s == "all") return SuitePart::all;
    if (s == "selftest") return SuitePart::selftest;
    throw InputError("unknown suite '" + s + "' (corollaries, appendix, all)");
}

SuiteSummary run_suite(const SuiteConfig& config, SuitePart part) {
    SuiteSummary s;
    s.json["cases"] = Json::array();
    s.json["checks"] = Json::array();
    auto add_checks = [&](const std::vector<CheckLine>& lines) {
        for (const auto& l : lines) {
            s.lines.push_back(l.line());
            s.json["checks"].push_back(l.to_json());
            (l.pass ? s.passed : s.failed)++;
        }
    };
    const bool cor = part == SuitePart::corollaries || part == SuitePart::all;
    const bool app = part == SuitePart::appendix || part == SuitePart::all;
    const bool certs = part == SuitePart::all || part == SuitePart::selftest;
    const bool props = part == SuitePart::all || part == SuitePart::selftest;

    if (cor) {
        using F = CorollaryFamily;
        struct Range { F f; int max; int betti_max; };
        const Range ranges[] = {{F::C1, config.c1_max, config.c1_max},   {F::C2, config.c2_max, config.c2_max},
                                {F::C3, config.c3_max, config.c3_betti_max}, {F::M2, config.m2_max, config.m2_max},
                                {F::M3, config.m3_max, config.m3_betti_max}, {F::CH1, config.ch1_max, config.ch1_max}};
        struct Job { F f; int n; CaseOptions o; };
        std::vector<Job> jobs;
        for (const auto& r : ranges)
            for (int n = 1; n <= r.max; ++n) {
                CaseOptions o;
                o.primes = config.primes;
                o.betti = !config.chi_only && n <= r.betti_max;
                o.face_budget = config.face_budget;
                o.morse_budget = config.morse_budget;
                jobs.push_back({r.f, n, o});
            }
        // Cases are independent; workers fill slots and output keeps job order.
        std::vector<VerifyReport> reports(jobs.size());
        std::vector<std::exception_ptr> errors(jobs.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next++) < jobs.size();) {
                try {
                    reports[i] = verify_case(jobs[i].f, jobs[i].n, jobs[i].o);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        const std::size_t workers = config.workers > 0
                                        ? static_cast<std::size_t>(config.workers)
                                        : std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
        std::vector<std::thread> pool;
        for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
        for (auto& t : pool) t.join();
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            if (errors[i]) std::rethrow_exception(errors[i]);
            const VerifyReport& rep = reports[i];
            s.lines.push_back(rep.line());
            s.json["cases"].push_back(rep.to_json());
            (rep.pass ? s.passed : s.failed)++;
            if (rep.betti_skipped) ++s.skipped;
        }
        add_checks(verify_shape_recursions(16));
        add_checks(verify_replacement_recursions(config.replacement_two_row_max, config.replacement_three_row_max));
    }
    if (app) add_checks(verify_appendix(config.appendix_max));
    if (certs) add_checks(verify_certificates(config.corrupt_certificate, config.chi_only ? CheckLevel::chi : CheckLevel::betti));
    if (props) {
        add_checks(theorem_property_suite(config.properties));
        add_checks(lemma_oracle_suite(config.properties));
        add_checks(euler_identity_suite(config.properties));
    }
    s.json["passed"] = s.passed;
    s.json["failed"] = s.failed;
    s.json["betti_skipped"] = s.skipped;
    s.json["ok"] = s.ok();
    return s;
}

}  // namespace indcx
