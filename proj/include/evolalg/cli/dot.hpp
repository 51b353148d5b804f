#pragma once

#include <string>

#include "evolalg/graph/associated_graph.hpp"

namespace evolalg::cli {

/// Graphviz digraph with vertices v1..vn; nodes first, then edges in
/// ascending (source, target) order.
std::string export_dot(const graph::AssociatedGraph& g);

}  // namespace evolalg::cli
