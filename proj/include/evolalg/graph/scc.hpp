#pragma once

#include <vector>

#include "evolalg/graph/associated_graph.hpp"

namespace evolalg::graph {

/// Strongly connected components (Tarjan), each ascending, ordered by least element.
/// Independent of the reachability closure kept by AssociatedGraph.
std::vector<IndexSet> strongly_connected_components(const AssociatedGraph& g);

}  // namespace evolalg::graph
