#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evolalg/algebra/evolution_algebra.hpp"
#include "evolalg/graph/associated_graph.hpp"
#include "evolalg/ideals/ideals.hpp"

namespace evolalg::decompose {

using algebra::EvolutionAlgebra;
using graph::AssociatedGraph;
using graph::IndexSet;

/// s together with the descendents of its members.
IndexSet derived_index_set(const AssociatedGraph& g, const IndexSet& s);

enum class PartKind { PrincipalCycle, ChainStart };

struct CanonicalPart {
    PartKind kind;
    /// The principal cycle, or the single chain-start index.
    IndexSet seed;
    /// derived_index_set of the seed.
    IndexSet derived;

    bool operator==(const CanonicalPart&) const = default;
};

/// One part per principal cycle and per chain-start index, ordered by least seed index.
struct CanonicalDecomposition {
    std::vector<CanonicalPart> parts;
};

/// Throws InternalError if the parts fail to cover every index.
CanonicalDecomposition canonical_decomposition(const EvolutionAlgebra& a);

/// True when the intersection graph of the parts is disconnected.
/// Throws PreconditionError on an empty list.
bool is_fragmentable(const std::vector<IndexSet>& parts);

struct Fragmentation {
    /// Unions of parts over the components of the intersection graph, ordered by least element.
    std::vector<IndexSet> blocks;
    /// For each block, the positions of the parts merged into it.
    std::vector<std::vector<std::size_t>> block_members;
};

/// Throws PreconditionError on an empty list.
Fragmentation optimal_fragmentation(const std::vector<IndexSet>& parts);

struct BlockReport {
    IndexSet indices;
    ideals::Ideal ideal;
    bool nondegenerate;
    bool simple;
    /// Determinant of the structure matrix restricted to the block.
    linalg::Scalar det;
};

struct DecompositionReport {
    std::vector<BlockReport> blocks;
    bool algebra_nondegenerate;
    /// Optimality and uniqueness are only guaranteed for non-degenerate algebras.
    bool optimal_certified;
    CanonicalDecomposition canonical;
    Fragmentation fragmentation;
};

/// Direct sum of ideals spanned by basis elements. The result is checked
/// (ideal property, orthogonality, spanning) and InternalError is thrown on failure.
DecompositionReport optimal_decomposition(const EvolutionAlgebra& a);

enum class SimplicityFailure { EmptyAlgebra, SingularStructure, NotAllDescendents };

struct SimplicityReason {
    SimplicityFailure code;
    /// Offending index for NotAllDescendents.
    std::optional<std::size_t> index;

    bool operator==(const SimplicityReason&) const = default;
};

/// Machine-readable code, e.g. "singular_structure_matrix".
std::string reason_code(const SimplicityReason& r);
/// Human text with 1-based indices, e.g. "D(1) ≠ Λ".
std::string reason_text(const SimplicityReason& r);

struct SimplicityVerdict {
    bool simple;
    /// Empty when simple. At most one NotAllDescendents entry (the least index).
    std::vector<SimplicityReason> reasons;
};

/// Simple iff the structure matrix is nonsingular and every index reaches every index.
SimplicityVerdict is_simple(const EvolutionAlgebra& a);

/// Second route: span{ e_j^2 : j in D(i) } is the whole algebra for every i.
bool is_simple_by_square_generation(const EvolutionAlgebra& a);

struct IrreducibilityVerdict {
    /// The associated graph is weakly connected.
    bool irreducible;
    /// False for degenerate algebras, where connectivity depends on the basis.
    bool conclusive;
};

IrreducibilityVerdict is_irreducible(const EvolutionAlgebra& a);

/// The blocks of optimal_decomposition when every block is simple, otherwise nothing.
/// Throws PreconditionError for degenerate algebras.
std::optional<std::vector<IndexSet>> simple_sum_report(const EvolutionAlgebra& a);

}  // namespace evolalg::decompose
