#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "indcx/errors.hpp"
#include "indcx/io.hpp"
#include "indcx/verify.hpp"

using namespace indcx;

namespace {

enum Exit { ok = 0, verification_failure = 1, precondition_violation = 2, input_error = 3 };

struct Globals {
    std::size_t budget = default_face_budget;
    std::size_t morse_budget = default_morse_budget;
    std::uint64_t seed = PropertyOptions{}.seed;
    bool seed_given = false;
    std::string config;
    bool json = false;
};

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

Certificate load_certificate(const std::string& arg) {
    static const std::string prefix = "builtin:";
    if (arg.rfind(prefix, 0) == 0) return builtin_certificate(arg.substr(prefix.size()));
    Json j = read_json(arg);
    // make-cert output wraps the certificate next to the host graph.
    if (j.is_object() && j.contains("certificate")) return certificate_from_json(j["certificate"]);
    return certificate_from_json(j);
}

SuiteConfig load_config(const Globals& g) {
    SuiteConfig c;
    if (!g.config.empty()) {
        std::ifstream in(g.config);
        if (!in) throw InputError("cannot open config '" + g.config + "'");
        std::stringstream text;
        text << in.rdbuf();
        c = parse_suite_config(text.str());
    }
    if (g.seed_given) c.properties.seed = g.seed;
    return c;
}

int emit_suite(const SuiteSummary& s, const Globals& g) {
    if (g.json) {
        print(s.json);
    } else {
        for (const auto& l : s.lines) std::cout << l << '\n';
        std::cout << "SUMMARY passed=" << s.passed << " failed=" << s.failed << " betti_skipped=" << s.skipped << '\n';
    }
    return s.ok() ? ok : verification_failure;
}

Json replay_json(const Certificate& c, const ReplayReport& r) {
    Json j;
    j["name"] = c.name;
    j["verdict"] = to_string(r.status);
    j["message"] = r.message;
    if (r.chi_initial) j["chi"] = *r.chi_initial;
    if (r.betti_initial) j["betti"] = r.betti_initial->to_string();
    j["betti_skipped"] = r.betti_skipped;
    j["steps"] = Json::array();
    for (const auto& s : r.steps) {
        Json e;
        e["step"] = s.step.to_string();
        e["precondition"] = s.precondition;
        if (!s.diagnostic.empty()) e["diagnostic"] = s.diagnostic;
        if (s.chi_after) e["chi"] = *s.chi_after;
        if (s.betti_after) e["betti"] = s.betti_after->to_string();
        j["steps"].push_back(e);
    }
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence complex certificates: replay, replacement and verification"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--budget", g.budget, "Face budget for explicit complexes");
    app.add_option("--morse-budget", g.morse_budget, "Node budget for the matching-tree Betti route");
    app.add_option("--seed", g.seed, "Seed for randomized suites")->each([&](const std::string&) { g.seed_given = true; });
    app.add_option("--config", g.config, "Suite configuration file (key = value)");
    app.add_flag("--json", g.json, "Machine-readable output");

    std::vector<std::string> gen_args;
    auto* gen = app.add_subcommand("gen", "Emit a family graph as JSON");
    gen->add_option("args", gen_args, "<family> <m> <n>, or <family> <n> for MH1, X4, Y4")->required()->expected(2, 3);

    std::string graph_arg, method = "recursive";
    int prime = 2;
    auto* chi = app.add_subcommand("chi", "Reduced Euler characteristic of I(G)");
    chi->add_option("graph", graph_arg, "Graph JSON file, '-' or family shorthand like C(3,4)")->required();
    chi->add_option("--method", method, "enumerate or recursive")->check(CLI::IsMember({"enumerate", "recursive"}));

    auto* betti = app.add_subcommand("betti", "Reduced Betti numbers of I(G) over GF(p)");
    betti->add_option("graph", graph_arg, "Graph JSON file, '-' or family shorthand")->required();
    betti->add_option("--p", prime, "Prime field characteristic");

    auto* complex = app.add_subcommand("complex", "Dump the faces of I(G)");
    complex->add_option("graph", graph_arg, "Graph JSON file, '-' or family shorthand")->required();

    std::string cert_arg, check = "chi";
    auto* rep = app.add_subcommand("replay", "Replay a certificate");
    rep->add_option("certificate", cert_arg, "Certificate JSON file, '-' or builtin:<id>")->required();
    rep->add_option("--check", check, "none, chi or betti")->check(CLI::IsMember({"none", "chi", "betti"}));

    std::string theorem, prefix = "h_";
    std::vector<std::string> patch_labels;
    bool relaxed = false;
    auto* mk = app.add_subcommand("make-cert", "Build a replacement graph H and its certificate");
    mk->add_option("theorem", theorem, "thm1, thm2 or thm3")->required()->check(CLI::IsMember({"thm1", "thm2", "thm3"}));
    mk->add_option("graph", graph_arg, "Host graph")->required();
    mk->add_option("--patch", patch_labels, "Patch labels: u v | a a' b b' | a1 a2 a3 b1 b2 b3")->required()->delimiter(',');
    mk->add_flag("--relaxed", relaxed, "thm2 only: allow the a-a' edge to be missing");
    mk->add_option("--prefix", prefix, "Prefix for new interior labels");

    std::string suite;
    auto* ver = app.add_subcommand("verify", "Run verification suites");
    ver->add_option("suite", suite, "corollaries, appendix or all")->required()->check(CLI::IsMember({"corollaries", "appendix", "all"}));

    auto* self = app.add_subcommand("selftest", "Run the seeded property suites and certificate replays");

    std::string cert_id;
    bool list = false;
    auto* cert = app.add_subcommand("cert", "Export a builtin certificate as JSON");
    cert->add_option("id", cert_id, "Builtin id, e.g. c33 or ch1(3)");
    cert->add_flag("--list", list, "List builtin ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        if (*gen) {
            FamilySpec s;
            s.family = parse_family(gen_args[0]);
            auto num = [](const std::string& v) {
                try {
                    std::size_t pos = 0;
                    int x = std::stoi(v, &pos);
                    if (pos != v.size()) throw std::invalid_argument(v);
                    return x;
                } catch (const std::exception&) {
                    throw InputError("'" + v + "' is not an integer");
                }
            };
            if (gen_args.size() == 3) {
                s.m = num(gen_args[1]);
                s.n = num(gen_args[2]);
            } else {
                if (s.family != Family::MH1 && s.family != Family::X4 && s.family != Family::Y4)
                    throw InputError("family " + gen_args[0] + " needs <m> <n>");
                s.n = num(gen_args[1]);
            }
            print(graph_to_json(generate_family(s)));
            return ok;
        }
        if (*chi) {
            ChiValue v = chi_reduced(load_graph(graph_arg), method == "enumerate" ? ChiMethod::enumerate : ChiMethod::recursive,
                                     g.budget);
            if (g.json)
                print(Json{{"chi", v}});
            else
                std::cout << v << '\n';
            return ok;
        }
        if (*betti) {
            auto b = graph_betti(load_graph(graph_arg), prime, g.budget, g.morse_budget);
            if (!b) throw BudgetExceeded("both the face budget and the matching-tree budget were exceeded");
            if (g.json)
                print(Json{{"prime", prime}, {"betti", b->profile.values}, {"route", to_string(b->route)}});
            else
                std::cout << b->profile.to_string() << '\n';
            return ok;
        }
        if (*complex) {
            for (const auto& line : dump_faces(independence_complex(load_graph(graph_arg), g.budget)))
                std::cout << line << '\n';
            return ok;
        }
        if (*rep) {
            Certificate c = load_certificate(cert_arg);
            ReplayReport r = replay(c, {parse_check_level(check), g.budget, g.morse_budget});
            if (g.json) {
                print(replay_json(c, r));
            } else {
                std::cout << c.name << ' ' << to_string(r.status) << " steps=" << c.steps.size();
                if (r.chi_initial) std::cout << " chi=" << *r.chi_initial;
                if (r.betti_initial) std::cout << " betti=" << r.betti_initial->to_string();
                std::cout << '\n';
                if (!r.passed()) std::cout << r.message << '\n';
            }
            if (r.status == ReplayStatus::precondition_failure) return precondition_violation;
            return r.passed() ? ok : verification_failure;
        }
        if (*mk) {
            PatchRole role = theorem == "thm1" ? PatchRole::edge : theorem == "thm2" ? PatchRole::p22 : PatchRole::p32;
            Replacement r = make_replacement(load_graph(graph_arg), {role, patch_labels, relaxed}, prefix);
            print(Json{{"host", graph_to_json(r.host)}, {"certificate", certificate_to_json(r.certificate)}});
            return ok;
        }
        if (*ver) return emit_suite(run_suite(load_config(g), parse_suite_part(suite)), g);
        if (*self) return emit_suite(run_suite(load_config(g), SuitePart::selftest), g);
        if (*cert) {
            if (list) {
                for (const auto& id : builtin_ids()) std::cout << id << '\n';
                return ok;
            }
            if (cert_id.empty()) throw InputError("cert needs an id or --list");
            print(certificate_to_json(builtin_certificate(cert_id)));
            return ok;
        }
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return precondition_violation;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return input_error;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
