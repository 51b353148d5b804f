#include "evolalg/decompose/decompose.hpp"

#include <algorithm>

#include "evolalg/error.hpp"
#include "evolalg/graph/disjoint_set.hpp"

namespace evolalg::decompose {

namespace {

linalg::Matrix restrict_structure(const EvolutionAlgebra& a, const IndexSet& block) {
    linalg::Matrix m(a.field(), block.size(), block.size());
    for (std::size_t r = 0; r < block.size(); ++r) {
        for (std::size_t c = 0; c < block.size(); ++c) m(r, c) = a.structure()(block[r], block[c]);
    }
    return m;
}

bool reaches_all_of(const AssociatedGraph& g, const IndexSet& block) {
    for (auto i : block) {
        if (!graph::is_subset(block, g.descendents(i))) return false;
    }
    return true;
}

void check_parts(const std::vector<IndexSet>& parts) {
    if (parts.empty()) throw PreconditionError("empty list of parts");
}

void validate(const EvolutionAlgebra& a, const std::vector<BlockReport>& blocks) {
    std::vector<int> owner(a.dim(), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (auto i : blocks[b].indices) {
            if (owner[i] != -1) throw InternalError("decomposition blocks overlap");
            owner[i] = static_cast<int>(b);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) {
        throw InternalError("decomposition blocks do not span the algebra");
    }
    // e_i e_j = 0 for i != j, so cross-block products vanish exactly when no
    // square leaks out of its block.
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (!a.structure()(k, i).is_zero() && owner[k] != owner[i]) {
                throw InternalError("square of a basis element leaves its block");
            }
        }
    }
}

}  // namespace

IndexSet derived_index_set(const AssociatedGraph& g, const IndexSet& s) {
    IndexSet out = graph::normalized(s);
    for (auto i : s) out = graph::set_union(out, g.descendents(i));
    return out;
}

CanonicalDecomposition canonical_decomposition(const EvolutionAlgebra& a) {
    const AssociatedGraph g(a);
    CanonicalDecomposition out;
    for (auto& c : g.principal_cycles()) {
        IndexSet derived = derived_index_set(g, c);
        out.parts.push_back({PartKind::PrincipalCycle, std::move(c), std::move(derived)});
    }
    for (auto i : g.chain_start_indices()) {
        out.parts.push_back({PartKind::ChainStart, {i}, derived_index_set(g, {i})});
    }
    std::sort(out.parts.begin(), out.parts.end(),
              [](const CanonicalPart& x, const CanonicalPart& y) { return x.seed.front() < y.seed.front(); });

    IndexSet covered;
    for (const auto& p : out.parts) covered = graph::set_union(covered, p.derived);
    if (covered.size() != a.dim()) throw InternalError("canonical decomposition does not cover every index");
    return out;
}

bool is_fragmentable(const std::vector<IndexSet>& parts) {
    check_parts(parts);
    return optimal_fragmentation(parts).blocks.size() > 1;
}

Fragmentation optimal_fragmentation(const std::vector<IndexSet>& parts) {
    check_parts(parts);
    graph::DisjointSet ds(parts.size());
    for (std::size_t x = 0; x < parts.size(); ++x) {
        for (std::size_t y = x + 1; y < parts.size(); ++y) {
            if (graph::intersects(parts[x], parts[y])) ds.unite(x, y);
        }
    }
    Fragmentation out;
    for (auto& members : ds.groups()) {
        IndexSet block;
        for (auto p : members) block = graph::set_union(block, parts[p]);
        out.blocks.push_back(std::move(block));
        out.block_members.push_back(std::move(members));
    }
    std::vector<std::size_t> order(out.blocks.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return out.blocks[x] < out.blocks[y]; });
    Fragmentation sorted;
    for (auto k : order) {
        sorted.blocks.push_back(std::move(out.blocks[k]));
        sorted.block_members.push_back(std::move(out.block_members[k]));
    }
    return sorted;
}

DecompositionReport optimal_decomposition(const EvolutionAlgebra& a) {
    const AssociatedGraph g(a);
    CanonicalDecomposition canonical = canonical_decomposition(a);
    std::vector<IndexSet> parts;
    for (const auto& p : canonical.parts) parts.push_back(p.derived);
    Fragmentation fragmentation =
        parts.empty() ? Fragmentation{} : optimal_fragmentation(parts);

    std::vector<BlockReport> blocks;
    for (const auto& block : fragmentation.blocks) {
        bool nondegenerate = true;
        for (auto i : block) nondegenerate = nondegenerate && !linalg::is_zero(a.square_of_basis(i));
        linalg::Scalar d = linalg::det(restrict_structure(a, block));
        const bool simple = !d.is_zero() && reaches_all_of(g, block);
        blocks.push_back(BlockReport{
            block,
            ideals::Ideal::from_subspace(a, linalg::Subspace::coordinate(a.field(), a.dim(), block)),
            nondegenerate,
            simple,
            std::move(d),
        });
    }
    validate(a, blocks);

    const bool nondegenerate = ideals::is_nondegenerate(a);
    return DecompositionReport{std::move(blocks), nondegenerate, nondegenerate, std::move(canonical),
                               std::move(fragmentation)};
}

std::string reason_code(const SimplicityReason& r) {
    switch (r.code) {
        case SimplicityFailure::EmptyAlgebra: return "empty_algebra";
        case SimplicityFailure::SingularStructure: return "singular_structure_matrix";
        case SimplicityFailure::NotAllDescendents: return "descendents_not_all";
    }
    return "unknown";
}

std::string reason_text(const SimplicityReason& r) {
    switch (r.code) {
        case SimplicityFailure::EmptyAlgebra: return "A = 0";
        case SimplicityFailure::SingularStructure: return "det(M) = 0";
        case SimplicityFailure::NotAllDescendents: return "D(" + std::to_string(r.index.value_or(0) + 1) + ") ≠ Λ";
    }
    return "unknown";
}

SimplicityVerdict is_simple(const EvolutionAlgebra& a) {
    SimplicityVerdict out{true, {}};
    if (a.dim() == 0) {
        out.simple = false;
        out.reasons.push_back({SimplicityFailure::EmptyAlgebra, std::nullopt});
        return out;
    }
    if (linalg::det(a.structure()).is_zero()) out.reasons.push_back({SimplicityFailure::SingularStructure, std::nullopt});
    const AssociatedGraph g(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (g.descendents(i).size() != a.dim()) {
            out.reasons.push_back({SimplicityFailure::NotAllDescendents, i});
            break;
        }
    }
    out.simple = out.reasons.empty();
    return out;
}

bool is_simple_by_square_generation(const EvolutionAlgebra& a) {
    if (a.dim() == 0) return false;
    const AssociatedGraph g(a);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        std::vector<linalg::Vector> squares;
        for (auto j : g.descendents(i)) squares.push_back(a.square_of_basis(j));
        if (!linalg::Subspace::from_vectors(a.field(), a.dim(), squares).is_full()) return false;
    }
    return true;
}

IrreducibilityVerdict is_irreducible(const EvolutionAlgebra& a) {
    const AssociatedGraph g(a);
    return IrreducibilityVerdict{g.weak_components().size() == 1, ideals::is_nondegenerate(a)};
}

std::optional<std::vector<IndexSet>> simple_sum_report(const EvolutionAlgebra& a) {
    if (!ideals::is_nondegenerate(a)) throw PreconditionError("algebra is degenerate");
    const auto report = optimal_decomposition(a);
    std::vector<IndexSet> out;
    for (const auto& b : report.blocks) {
        if (!b.simple) return std::nullopt;
        out.push_back(b.indices);
    }
    return out;
}

}  // namespace evolalg::decompose
