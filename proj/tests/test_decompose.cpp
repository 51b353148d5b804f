#include <gtest/gtest.h>

#include "evolalg/decompose/decompose.hpp"
#include "evolalg/error.hpp"
#include "evolalg/ideals/ideals.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace evolalg;
using namespace evolalg::decompose;
using fixtures::idx;
using fixtures::idxs;
using linalg::Field;

namespace {

const Field Q = Field::rational();

std::vector<IndexSet> derived_sets(const CanonicalDecomposition& c) {
    std::vector<IndexSet> out;
    for (const auto& p : c.parts) out.push_back(p.derived);
    return out;
}

}  // namespace

TEST(DerivedIndexSet, Examples) {
    const AssociatedGraph g(fixtures::degenerate_example());
    EXPECT_EQ(derived_index_set(g, idx({4})), idx({4}));
    EXPECT_EQ(derived_index_set(g, idx({3})), idx({3, 5}));
    const AssociatedGraph e(fixtures::cyclic_graph_e());
    const auto cycle = e.principal_cycles().front();
    for (auto i : cycle) EXPECT_EQ(derived_index_set(e, cycle), e.descendents(i));
}

TEST(CanonicalDecomposition, Examples) {
    const auto c = canonical_decomposition(fixtures::degenerate_example());
    ASSERT_EQ(c.parts.size(), 3U);
    EXPECT_EQ(c.parts[0], (CanonicalPart{PartKind::ChainStart, idx({2}), idx({1, 2})}));
    EXPECT_EQ(c.parts[1], (CanonicalPart{PartKind::PrincipalCycle, idx({3}), idx({3, 5})}));
    EXPECT_EQ(c.parts[2], (CanonicalPart{PartKind::ChainStart, idx({4}), idx({4})}));

    const auto single = canonical_decomposition(algebra::algebra_from_graph(Q, fixtures::cyclic_graph_e()));
    EXPECT_EQ(derived_sets(single), idxs({{1, 2, 3, 4}}));

    const auto f = canonical_decomposition(algebra::algebra_from_graph(Q, fixtures::cyclic_graph_f()));
    EXPECT_EQ(derived_sets(f), idxs({{1, 2, 3, 5}, {2, 3, 4, 5}}));
}

TEST(Fragmentation, Examples) {
    EXPECT_TRUE(is_fragmentable(idxs({{1}, {2}})));
    EXPECT_FALSE(is_fragmentable(idxs({{1, 2}, {2, 3}})));
    EXPECT_FALSE(is_fragmentable(idxs({{2, 3, 4, 5}, {1, 2, 3, 5}})));
    EXPECT_THROW(is_fragmentable({}), PreconditionError);

    EXPECT_EQ(optimal_fragmentation(idxs({{3}, {1}, {2}})).blocks, idxs({{1}, {2}, {3}}));
    const auto fr = optimal_fragmentation(idxs({{3, 5}, {1, 2}, {4}}));
    EXPECT_EQ(fr.blocks, idxs({{1, 2}, {3, 5}, {4}}));
    EXPECT_EQ(fr.block_members, (std::vector<std::vector<std::size_t>>{{1}, {0}, {2}}));
    EXPECT_EQ(optimal_fragmentation(idxs({{1, 2}, {2, 3}, {4}})).blocks, idxs({{1, 2, 3}, {4}}));
    EXPECT_THROW(optimal_fragmentation({}), PreconditionError);
}

TEST(OptimalDecomposition, Examples) {
    const auto d = optimal_decomposition(fixtures::swap_plus_loop());
    ASSERT_EQ(d.blocks.size(), 2U);
    EXPECT_EQ(d.blocks[0].indices, idx({1, 2}));
    EXPECT_EQ(d.blocks[1].indices, idx({3}));
    EXPECT_TRUE(d.optimal_certified);

    const auto n = optimal_decomposition(fixtures::degenerate_example());
    EXPECT_EQ(n.fragmentation.blocks, idxs({{1, 2}, {3, 5}, {4}}));
    EXPECT_FALSE(n.optimal_certified);

    const auto one = optimal_decomposition(fixtures::fibonacci());
    ASSERT_EQ(one.blocks.size(), 1U);
    EXPECT_TRUE(one.blocks[0].ideal.carrier().is_full());
}

TEST(IsSimple, Examples) {
    const auto no = is_simple(fixtures::two_idempotents());
    EXPECT_FALSE(no.simple);
    ASSERT_EQ(no.reasons.size(), 1U);
    EXPECT_EQ(no.reasons[0], (SimplicityReason{SimplicityFailure::NotAllDescendents, 0}));
    EXPECT_EQ(reason_text(no.reasons[0]), "D(1) ≠ Λ");

    EXPECT_TRUE(is_simple(fixtures::fibonacci()).simple);
    const auto sink = is_simple(fixtures::sinks_example());
    EXPECT_FALSE(sink.simple);
    EXPECT_EQ(sink.reasons.front().code, SimplicityFailure::SingularStructure);

    EXPECT_TRUE(is_simple(fixtures::from_squares(Q, 1, {{1, {{1, 3}}}})).simple);
    EXPECT_FALSE(is_simple(fixtures::from_squares(Q, 1, {})).simple);
}

TEST(IsIrreducible, Examples) {
    const auto r = is_irreducible(fixtures::irreducible_not_simple());
    EXPECT_TRUE(r.irreducible);
    EXPECT_TRUE(r.conclusive);
    EXPECT_FALSE(is_simple(fixtures::irreducible_not_simple()).simple);
    EXPECT_FALSE(is_irreducible(fixtures::swap_plus_loop()).irreducible);
    const auto b = is_irreducible(fixtures::basis_change_b());
    EXPECT_TRUE(b.irreducible);
    EXPECT_FALSE(b.conclusive);
}

TEST(SimpleSum, Examples) {
    EXPECT_EQ(simple_sum_report(fixtures::swap_plus_loop()), std::optional(idxs({{1, 2}, {3}})));
    EXPECT_FALSE(simple_sum_report(fixtures::irreducible_not_simple()).has_value());
    EXPECT_EQ(simple_sum_report(fixtures::fibonacci()), std::optional(idxs({{1, 2}})));
    EXPECT_THROW(simple_sum_report(fixtures::degenerate_example()), PreconditionError);
}

class DecomposeProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(DecomposeProperties, PipelineInvariants) {
    const Field f = GetParam() == 0 ? Q : Field::prime(GetParam());
    fixtures::RandomAlgebras gen(6000 + GetParam());
    for (int trial = 0; trial < 80; ++trial) {
        const auto a = gen.algebra(f, gen.uniform(1, 7));
        const std::size_t n = a.dim();
        const AssociatedGraph g(a);

        const auto c = canonical_decomposition(a);
        IndexSet covered;
        for (const auto& p : c.parts) {
            covered = graph::set_union(covered, p.derived);
            for (auto i : p.derived) EXPECT_TRUE(graph::is_subset(g.descendents(i), p.derived));
        }
        EXPECT_EQ(covered, graph::range(n));

        const auto d = optimal_decomposition(a);
        std::vector<IndexSet> blocks;
        for (const auto& b : d.blocks) {
            blocks.push_back(b.indices);
            EXPECT_TRUE(ideals::is_ideal(a, b.ideal.carrier()));
            EXPECT_TRUE(b.ideal.carrier().is_coordinate());
            EXPECT_EQ(b.det, fixtures::cofactor_det([&] {
                          linalg::Matrix m(f, b.indices.size(), b.indices.size());
                          for (std::size_t r = 0; r < b.indices.size(); ++r)
                              for (std::size_t s = 0; s < b.indices.size(); ++s)
                                  m(r, s) = a.structure()(b.indices[r], b.indices[s]);
                          return m;
                      }()));
        }
        EXPECT_EQ(blocks, g.weak_components());
        for (std::size_t x = 0; x < blocks.size(); ++x) {
            for (std::size_t y = 0; y < blocks.size(); ++y) {
                if (x == y) continue;
                for (auto i : blocks[x]) {
                    for (auto j : blocks[y]) {
                        EXPECT_TRUE(linalg::is_zero(a.multiply(a.basis_element(i), a.basis_element(j))));
                    }
                }
            }
            // Each block's parts have a connected intersection graph.
            std::vector<IndexSet> members;
            for (auto p : d.fragmentation.block_members[x]) members.push_back(c.parts[p].derived);
            EXPECT_FALSE(is_fragmentable(members));
        }
        EXPECT_EQ(d.optimal_certified, ideals::is_nondegenerate(a));

        const auto s = is_simple(a);
        EXPECT_EQ(s.simple, is_simple_by_square_generation(a));
        if (s.simple) {
            EXPECT_TRUE(ideals::is_nondegenerate(a));
            EXPECT_EQ(linalg::rank(a.structure()), n);
        }
        EXPECT_EQ(is_irreducible(a).irreducible, blocks.size() == 1);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, DecomposeProperties, ::testing::Values(0U, 2U, 3U, 5U));
