#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "indcx/errors.hpp"
#include "indcx/graph.hpp"
#include "indcx/op_step.hpp"

namespace indcx::script {

using Resolver = std::function<Label(const std::string&)>;

// Column token with a row decoration: "3" row 1, "3b" row 2, "3h" row 3, "3t" row 4.
inline Label grid_token(const std::string& t) {
    std::size_t pos = 0;
    int col = std::stoi(t, &pos);
    std::string deco = t.substr(pos);
    int row = deco.empty() ? 1 : deco == "b" ? 2 : deco == "h" ? 3 : deco == "t" ? 4 : 0;
    if (row == 0) throw InputError("bad grid token '" + t + "'");
    return grid_label(row, col);
}

// "A v w u" = Add(vw,u), "D v w u" = Del(vw,u), "D v u" = Del(v,u).
inline std::vector<OpStep> parse(const std::vector<std::string>& lines, const Resolver& name = grid_token) {
    std::vector<OpStep> out;
    for (const auto& line : lines) {
        std::istringstream in(line);
        std::string op;
        std::vector<std::string> args;
        in >> op;
        for (std::string a; in >> a;) args.push_back(a);
        if (op == "A" && args.size() == 3)
            out.push_back(OpStep::add_edge(name(args[0]), name(args[1]), name(args[2])));
        else if (op == "D" && args.size() == 3)
            out.push_back(OpStep::del_edge(name(args[0]), name(args[1]), name(args[2])));
        else if (op == "D" && args.size() == 2)
            out.push_back(OpStep::del_vertex(name(args[0]), name(args[1])));
        else
            throw InputError("bad step line '" + line + "'");
    }
    return out;
}

}  // namespace indcx::script
