#pragma once

#include <string>

#include <json.hpp>

#include "indcx/graph.hpp"
#include "indcx/morse_ops.hpp"

namespace indcx {

using Json = nlohmann::ordered_json;

// {"vertices":[...], "edges":[[a,b],...], "loops":[...]}, arrays sorted.
Json graph_to_json(const Graph& g);
// Accepts a graph document or a family reference {"family":"C","m":3,"n":4}.
Graph graph_from_json(const Json& j);

Json family_to_json(const FamilySpec& spec);
FamilySpec family_from_json(const Json& j);
// "C(3,4)", "P(4,10)", "X4(5)"; nullopt if the text is not of that form.
std::optional<FamilySpec> parse_family_shorthand(const std::string& text);

Json step_to_json(const OpStep& s);
OpStep step_from_json(const Json& j);

Json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

// Reads a JSON document from a path, or from stdin when path is "-".
Json read_json(const std::string& path);

// Graph argument of the command line: family shorthand, "-" or a JSON file.
Graph load_graph(const std::string& arg);

}  // namespace indcx
