#include <gtest/gtest.h>

#include "evolalg/error.hpp"
#include "evolalg/graph/associated_graph.hpp"
#include "evolalg/graph/scc.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace evolalg;
using namespace evolalg::graph;
using fixtures::idx;
using fixtures::idxs;

namespace {

const linalg::Field Q = linalg::Field::rational();

}  // namespace

TEST(AssociatedGraph, AdjacencyOfFirstExample) {
    const AssociatedGraph g(fixtures::first_example());
    EXPECT_EQ(g.adjacency(), fixtures::edges(4, {{1, 2}, {1, 3}, {3, 4}, {4, 3}}));
    EXPECT_TRUE(AssociatedGraph(algebra::EvolutionAlgebra(linalg::Matrix(Q, 3, 3))).adjacency() ==
                fixtures::edges(3, {}));
}

TEST(AssociatedGraph, DependsOnTheBasis) {
    EXPECT_EQ(AssociatedGraph(fixtures::basis_change_b()).adjacency(), fixtures::edges(2, {{1, 1}, {1, 2}}));
    EXPECT_EQ(AssociatedGraph(fixtures::basis_change_b_prime()).adjacency(), fixtures::edges(2, {{1, 1}}));
}

TEST(Descendents, Examples) {
    const AssociatedGraph e(fixtures::descendent_graph_e());
    EXPECT_EQ(e.descendents_m(2, 1), idx({4}));
    EXPECT_EQ(e.descendents_m(2, 2), idx({3}));
    EXPECT_EQ(e.descendents(2), idx({3, 4}));
    const AssociatedGraph f(fixtures::descendent_graph_f());
    EXPECT_EQ(f.descendents(1), idx({2, 3, 4}));
    const AssociatedGraph empty(fixtures::edges(3, {}));
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_TRUE(empty.descendents(i).empty());
        EXPECT_TRUE(empty.descendents_m(i, 2).empty());
    }
    EXPECT_THROW(e.descendents_m(0, 0), PreconditionError);
    EXPECT_THROW(e.descendents(4), IndexError);
}

TEST(Ascendents, Examples) {
    const AssociatedGraph g(fixtures::degenerate_example());
    EXPECT_EQ(g.ascendents(0), idx({1, 2}));
    for (auto i : g.chain_start_indices()) EXPECT_TRUE(g.ascendents(i).empty());
}

TEST(Cycles, ClassificationsOfWorkedGraphs) {
    const AssociatedGraph e(fixtures::cyclic_graph_e());
    for (std::size_t i : {0, 1, 2}) {
        EXPECT_TRUE(e.is_cyclic_index(i));
        EXPECT_TRUE(e.is_principal_cyclic(i));
    }
    EXPECT_EQ(e.cycle_of(0), idx({1, 2, 3}));
    EXPECT_EQ(e.principal_cycles(), idxs({{1, 2, 3}}));
    EXPECT_TRUE(e.chain_start_indices().empty());

    const AssociatedGraph f(fixtures::cyclic_graph_f());
    IndexSet cyclic, principal;
    for (std::size_t i = 0; i < 5; ++i) {
        if (!f.is_cyclic_index(i)) continue;
        cyclic.push_back(i);
        if (f.is_principal_cyclic(i)) principal.push_back(i);
    }
    EXPECT_EQ(cyclic, idx({2, 3, 4, 5}));
    EXPECT_EQ(principal, idx({4}));
    EXPECT_EQ(f.cycle_of(1), idx({2, 3, 5}));
    EXPECT_EQ(f.cycle_of(2), idx({2, 3, 5}));
    EXPECT_EQ(f.cycle_of(4), idx({2, 3, 5}));
    EXPECT_EQ(f.cycle_of(3), idx({4}));
    EXPECT_EQ(f.chain_start_indices(), idx({1}));

    const AssociatedGraph g(fixtures::cyclic_graph_g());
    cyclic.clear();
    for (std::size_t i = 0; i < 6; ++i) {
        if (!g.is_cyclic_index(i)) continue;
        cyclic.push_back(i);
        EXPECT_FALSE(g.is_principal_cyclic(i));
    }
    EXPECT_EQ(cyclic, idx({2, 3, 4, 6}));
    EXPECT_TRUE(g.principal_cycles().empty());
    EXPECT_EQ(g.chain_start_indices(), idx({1}));
}

TEST(Cycles, SmallCases) {
    const AssociatedGraph loop(fixtures::edges(1, {{1, 1}}));
    EXPECT_EQ(loop.cycle_of(0), idx({1}));
    EXPECT_TRUE(loop.is_principal_cyclic(0));
    const AssociatedGraph none(fixtures::edges(2, {{1, 2}}));
    EXPECT_FALSE(none.is_cyclic_index(0));
    EXPECT_THROW(none.cycle_of(0), PreconditionError);
    EXPECT_THROW(none.is_principal_cyclic(1), PreconditionError);
    EXPECT_TRUE(none.principal_cycles().empty());
    EXPECT_EQ(AssociatedGraph(fixtures::degenerate_example()).principal_cycles(), idxs({{3}}));
}

TEST(ChainStartsAndSinks, Examples) {
    EXPECT_EQ(AssociatedGraph(fixtures::degenerate_example()).chain_start_indices(), idx({2, 4}));
    EXPECT_TRUE(AssociatedGraph(fixtures::edges(3, {{1, 1}, {2, 2}, {3, 3}})).chain_start_indices().empty());
    EXPECT_EQ(AssociatedGraph(fixtures::sinks_example()).sinks(), idx({1, 3}));
    EXPECT_TRUE(AssociatedGraph(fixtures::edges(2, {{1, 1}, {2, 2}})).sinks().empty());
    EXPECT_EQ(AssociatedGraph(fixtures::edges(3, {})).sinks(), idx({1, 2, 3}));
}

TEST(WeakComponents, Examples) {
    EXPECT_EQ(AssociatedGraph(fixtures::swap_plus_loop()).weak_components(), idxs({{1, 2}, {3}}));
    EXPECT_EQ(AssociatedGraph(fixtures::edges(3, {})).weak_components(), idxs({{1}, {2}, {3}}));
    EXPECT_EQ(AssociatedGraph(fixtures::descendent_graph_e()).weak_components(), idxs({{1, 2, 3, 4}}));
}

TEST(WitnessPath, Examples) {
    const auto a = fixtures::first_example();
    const auto p = witness_path(a, 0, 3);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->path, idx({1, 3, 4}));
    EXPECT_EQ(p->weight, linalg::Scalar::from_integer(Q, -2));
    for (std::size_t j = 0; j < 4; ++j) EXPECT_FALSE(witness_path(a, 1, j).has_value());
    const auto one = witness_path(a, 3, 2);
    ASSERT_TRUE(one.has_value());
    EXPECT_EQ(one->path.size(), 2U);
    EXPECT_EQ(one->weight, linalg::Scalar::from_integer(Q, 5));
    const auto closed = witness_path(a, 2, 2);
    ASSERT_TRUE(closed.has_value());
    EXPECT_EQ(closed->path, (std::vector<std::size_t>{2, 3, 2}));
    EXPECT_EQ(closed->weight, linalg::Scalar::from_integer(Q, -10));
}

class GraphProperties : public ::testing::TestWithParam<int> {};

TEST_P(GraphProperties, AgreeWithBooleanMatrixOracles) {
    fixtures::RandomAlgebras gen(900 + GetParam());
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = gen.algebra(Q, gen.uniform(1, 8));
        const std::size_t n = a.dim();
        const AssociatedGraph g(a);
        const auto adj = fixtures::support_adjacency(a);
        const auto closure = fixtures::transitive_closure(adj);

        for (std::size_t i = 0; i < n; ++i) {
            // D^m from boolean matrix powers and the recurrence.
            for (std::size_t m = 1; m <= n; ++m) {
                const auto dm = g.descendents_m(i, m);
                EXPECT_EQ(dm, fixtures::row_set(fixtures::bool_power(adj, m), i));
                if (m > 1) {
                    IndexSet rec;
                    for (auto k : g.descendents_m(i, m - 1)) rec = set_union(rec, g.successors(k));
                    EXPECT_EQ(dm, rec);
                }
            }
            // D(i) saturates within n steps and matches the closure.
            IndexSet saturated;
            for (std::size_t m = 1; m <= n; ++m) saturated = set_union(saturated, g.descendents_m(i, m));
            EXPECT_EQ(g.descendents(i), saturated);
            EXPECT_EQ(g.descendents(i), fixtures::row_set(closure, i));
            EXPECT_EQ(g.ascendents(i), fixtures::column_set(closure, i));

            for (std::size_t j = 0; j < n; ++j) {
                EXPECT_EQ(contains(g.ascendents(i), j), contains(g.descendents(j), i));
                EXPECT_EQ(witness_path(a, i, j).has_value(), contains(g.descendents(i), j));
                if (auto p = witness_path(a, i, j)) {
                    EXPECT_FALSE(p->weight.is_zero());
                    EXPECT_EQ(p->path.size() - 1, [&] {
                        std::size_t m = 1;
                        while (!contains(g.descendents_m(i, m), j)) ++m;
                        return m;
                    }());
                }
                if (!contains(g.descendents(i), j)) continue;
                for (auto k : g.descendents(j)) EXPECT_TRUE(contains(g.descendents(i), k));
            }
        }

        // Cycles agree with Tarjan components restricted to cyclic vertices.
        for (const auto& comp : strongly_connected_components(g)) {
            for (auto i : comp) {
                if (g.is_cyclic_index(i)) EXPECT_EQ(g.cycle_of(i), comp);
                else EXPECT_EQ(comp.size(), 1U);
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (!g.is_cyclic_index(i)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (!g.is_cyclic_index(j)) continue;
                const auto ci = g.cycle_of(i), cj = g.cycle_of(j);
                EXPECT_TRUE(ci == cj || !intersects(ci, cj));
            }
            if (g.is_principal_cyclic(i)) {
                for (auto j : g.cycle_of(i)) {
                    EXPECT_TRUE(g.is_principal_cyclic(j));
                    EXPECT_EQ(g.descendents(i), g.descendents(j));
                }
            }
        }

        // Chain starts are the zero rows, sinks the zero columns.
        IndexSet zero_rows, zero_cols;
        for (std::size_t k = 0; k < n; ++k) {
            if (linalg::is_zero(a.structure().row(k))) zero_rows.push_back(k);
            if (linalg::is_zero(a.structure().column(k))) zero_cols.push_back(k);
        }
        EXPECT_EQ(g.chain_start_indices(), zero_rows);
        EXPECT_EQ(g.sinks(), zero_cols);
        EXPECT_EQ(g.weak_components(), fixtures::flood_components(adj));
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, GraphProperties, ::testing::Range(0, 5));
