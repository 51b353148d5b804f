#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/graph/index_set.hpp"

namespace evolalg::graph {

/// Directed graph of an evolution algebra relative to its natural basis:
/// an edge i -> j exists iff e_j occurs in e_i^2. Weights are dropped.
///
/// "Descendent" means reachable by a path of length >= 1, so i is its own
/// descendent only when it lies on a closed path. The reachability closure is
/// computed once at construction.
class AssociatedGraph {
public:
    explicit AssociatedGraph(const algebra::EvolutionAlgebra& a);
    /// adjacency[i][j] records the edge i -> j.
    explicit AssociatedGraph(const std::vector<std::vector<bool>>& adjacency);

    std::size_t size() const noexcept { return succ_.size(); }

    /// D^1(i).
    const IndexSet& successors(std::size_t i) const;
    /// Vertices reached by a path of length exactly m >= 1.
    IndexSet descendents_m(std::size_t i, std::size_t m) const;
    /// D(i): vertices reached by a path of length >= 1.
    const IndexSet& descendents(std::size_t i) const;
    /// { j : i in D(j) }.
    const IndexSet& ascendents(std::size_t i) const;
    bool reaches(std::size_t i, std::size_t j) const;

    bool is_cyclic_index(std::size_t i) const;
    /// Vertices mutually reachable with i; throws PreconditionError when i is not cyclic.
    IndexSet cycle_of(std::size_t i) const;
    /// ascendents(i) within cycle_of(i); throws PreconditionError when i is not cyclic.
    bool is_principal_cyclic(std::size_t i) const;
    /// Distinct cycles of principal cyclic indices, ordered by least element.
    std::vector<IndexSet> principal_cycles() const;
    /// Vertices without incoming edges.
    IndexSet chain_start_indices() const;
    /// Vertices without outgoing edges.
    IndexSet sinks() const;
    /// Components of the underlying undirected graph, ordered by least element.
    std::vector<IndexSet> weak_components() const;

    /// adjacency()[i][j] is true iff i -> j.
    std::vector<std::vector<bool>> adjacency() const;

private:
    void check(std::size_t i) const;
    void close();

    std::vector<IndexSet> succ_;
    std::vector<IndexSet> desc_;
    std::vector<IndexSet> asc_;
};

struct WitnessPath {
    /// k_0 = i, ..., k_m = j (0-based vertices).
    std::vector<std::size_t> path;
    /// Product of the structure constants along the path; never zero.
    linalg::Scalar weight;
};

/// A shortest path of length >= 1 from i to j, with ascending-index tie breaking,
/// or nothing when j is not a descendent of i.
std::optional<WitnessPath> witness_path(const algebra::EvolutionAlgebra& a, std::size_t i, std::size_t j);

}  // namespace evolalg::graph
