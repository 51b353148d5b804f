#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace evolalg::graph {

/// Ascending, duplicate-free list of 0-based basis indices.
using IndexSet = std::vector<std::size_t>;

/// Sorts and removes duplicates.
IndexSet normalized(IndexSet s);
bool contains(const IndexSet& s, std::size_t i);
bool is_subset(const IndexSet& a, const IndexSet& b);
bool intersects(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet range(std::size_t n);

/// "{1,3,4}" with 1-based indices, for messages and the human report.
std::string to_display(const IndexSet& s);

}  // namespace evolalg::graph
