#include "indcx/io.hpp"

#include <fstream>
#include <iostream>
#include <regex>

#include "indcx/errors.hpp"

namespace indcx {

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : g.vertices()) j["vertices"].push_back(v);
    j["edges"] = Json::array();
    for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
    j["loops"] = Json::array();
    for (const auto& v : g.loops()) j["loops"].push_back(v);
    return j;
}

namespace {

std::vector<Label> label_list(const Json& j, const char* key) {
    std::vector<Label> out;
    if (!j.contains(key)) return out;
    if (!j[key].is_array()) throw InputError(std::string("'") + key + "' must be an array");
    for (const auto& x : j[key]) {
        if (!x.is_string()) throw InputError(std::string("'") + key + "' entries must be strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

}  // namespace

Graph graph_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("graph document must be a JSON object");
    if (j.contains("family")) return generate_family(family_from_json(j));
    if (!j.contains("vertices")) throw InputError("graph document needs 'vertices'");
    std::vector<Edge> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw InputError("'edges' must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                throw InputError("each edge must be a pair of labels");
            edges.push_back({e[0].get<std::string>(), e[1].get<std::string>()});
        }
    }
    return make_graph(label_list(j, "vertices"), edges, label_list(j, "loops"));
}

Json family_to_json(const FamilySpec& spec) {
    Json j;
    j["family"] = to_string(spec.family);
    if (spec.family != Family::MH1 && spec.family != Family::X4 && spec.family != Family::Y4) j["m"] = spec.m;
    j["n"] = spec.n;
    return j;
}

FamilySpec family_from_json(const Json& j) {
    if (!j.contains("family") || !j["family"].is_string()) throw InputError("family reference needs a 'family' tag");
    FamilySpec s;
    s.family = parse_family(j["family"].get<std::string>());
    auto dim = [&](const char* key, int fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number_integer()) throw InputError(std::string("'") + key + "' must be an integer");
        return j[key].get<int>();
    };
    s.m = dim("m", s.family == Family::X4 || s.family == Family::Y4 ? 4 : s.family == Family::MH1 ? 2 : 0);
    s.n = dim("n", 0);
    validate(s);
    return s;
}

std::optional<FamilySpec> parse_family_shorthand(const std::string& text) {
    static const std::regex two(R"(\s*([A-Z]+[0-9]*)\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    static const std::regex one(R"(\s*([A-Z]+[0-9]*)\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    Json j;
    if (std::regex_match(text, m, two)) {
        j = {{"family", m[1].str()}, {"m", std::stoi(m[2].str())}, {"n", std::stoi(m[3].str())}};
    } else if (std::regex_match(text, m, one)) {
        j = {{"family", m[1].str()}, {"n", std::stoi(m[2].str())}};
    } else {
        return std::nullopt;
    }
    return family_from_json(j);
}

Json step_to_json(const OpStep& s) {
    Json j;
    j["op"] = to_string(s.kind);
    if (s.is_edge_move())
        j["target"] = {s.target, s.target2};
    else
        j["target"] = s.target;
    j["witness"] = s.witness;
    return j;
}

OpStep step_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("op") || !j.contains("target") || !j.contains("witness"))
        throw InputError("step needs 'op', 'target' and 'witness'");
    if (!j["op"].is_string() || !j["witness"].is_string()) throw InputError("step 'op' and 'witness' must be strings");
    OpStep s;
    s.kind = parse_op_kind(j["op"].get<std::string>());
    s.witness = j["witness"].get<std::string>();
    const Json& t = j["target"];
    if (s.is_edge_move()) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
            throw InputError(to_string(s.kind) + " target must be a pair of labels");
        s.target = t[0].get<std::string>();
        s.target2 = t[1].get<std::string>();
    } else {
        if (!t.is_string()) throw InputError("del_vertex target must be a label");
        s.target = t.get<std::string>();
    }
    return s;
}

Json certificate_to_json(const Certificate& c) {
    Json j;
    j["name"] = c.name;
    j["initial"] = c.initial_family ? family_to_json(*c.initial_family) : graph_to_json(c.initial);
    j["steps"] = Json::array();
    for (const auto& s : c.steps) j["steps"].push_back(step_to_json(s));
    j["expected_final"] = graph_to_json(c.expected_final);
    j["note"] = c.note;
    return j;
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object()) throw InputError("certificate must be a JSON object");
    for (const char* key : {"initial", "steps", "expected_final"})
        if (!j.contains(key)) throw InputError(std::string("certificate needs '") + key + "'");
    Certificate c;
    if (j.contains("name") && j["name"].is_string()) c.name = j["name"].get<std::string>();
    if (j.contains("note") && j["note"].is_string()) c.note = j["note"].get<std::string>();
    if (j["initial"].is_object() && j["initial"].contains("family")) c.initial_family = family_from_json(j["initial"]);
    c.initial = graph_from_json(j["initial"]);
    if (!j["steps"].is_array()) throw InputError("'steps' must be an array");
    for (const auto& s : j["steps"]) c.steps.push_back(step_from_json(s));
    c.expected_final = graph_from_json(j["expected_final"]);
    return c;
}

Json read_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open '" + path + "'");
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
}

Graph load_graph(const std::string& arg) {
    if (auto spec = parse_family_shorthand(arg)) return generate_family(*spec);
    return graph_from_json(read_json(arg));
}

}  // namespace indcx
