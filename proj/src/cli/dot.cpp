#include "evolalg/cli/dot.hpp"

namespace evolalg::cli {

std::string export_dot(const graph::AssociatedGraph& g) {
    std::string out = "digraph E {\n";
    for (std::size_t i = 0; i < g.size(); ++i) out += "  v" + std::to_string(i + 1) + ";\n";
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (auto j : g.successors(i)) out += "  v" + std::to_string(i + 1) + " -> v" + std::to_string(j + 1) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace evolalg::cli
